#include "padic_hlp/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace padic_hlp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double decay_extension(double rate, double lnp) {
    // rows are padded until entries have dropped by ~1e-12
    if (!(rate > 1e-9)) return 0.0;
    return std::min(std::ceil(12.0 * std::log(10.0) / (rate * lnp)), 200000.0);
}

double row_norm(const CoordinateMatrix& M, std::size_t i, double exponent) {
    double s = 0.0;
    for (std::size_t j = 0; j < M.num_cols(); ++j) s += std::pow(M.at(i, j), exponent);
    return std::pow(s, 1.0 / exponent);
}

}  // namespace

double lq_norm(const std::vector<double>& u, double q) {
    if (!(q >= 1.0) || !std::isfinite(q)) throw std::invalid_argument("lq_norm: finite q >= 1");
    if (q == 1.0) {
        double s = 0.0;
        for (double x : u) s += std::abs(x);
        return s;
    }
    if (q == 2.0) {
        double s = 0.0;
        for (double x : u) s += x * x;
        return std::sqrt(s);
    }
    double s = 0.0;
    for (double x : u)
        if (x != 0.0) s += std::pow(std::abs(x), q);
    return std::pow(s, 1.0 / q);
}

PowerIterationResult matrix_norm_lower(const CoordinateMatrix& M, double q, double r, double tol,
                                       int max_iter) {
    if (!(q >= 1.0) || !(r >= 1.0) || !std::isfinite(q) || !std::isfinite(r))
        throw std::invalid_argument("matrix_norm_lower: finite exponents >= 1 required");
    if (!(tol > 0.0)) throw std::invalid_argument("matrix_norm_lower: tol must be positive");
    for (std::size_t i = 0; i < M.num_rows(); ++i)
        for (std::size_t j = 0; j < M.num_cols(); ++j) {
            double e = M.at(i, j);
            if (e < 0.0) throw std::invalid_argument("matrix_norm_lower: negative entry");
            if (!std::isfinite(e)) return {kInf, 0, true, {kInf}};
        }

    // q = 1: the unit ball's extreme points are coordinate vectors, so the
    // norm is the largest column r-norm. Exact, no iteration.
    if (q == 1.0) {
        double best = 0.0;
        for (std::size_t j = 0; j < M.num_cols(); ++j) {
            double s = 0.0;
            for (std::size_t i = 0; i < M.num_rows(); ++i)
                s += r == 1.0 ? M.at(i, j) : std::pow(M.at(i, j), r);
            best = std::max(best, r == 1.0 ? s : std::pow(s, 1.0 / r));
        }
        return {best, 0, true, {best}};
    }

    // r = 1: ||Mu||_1 = <u, M^T 1> for nonnegative data, maximized at
    // u = normalized dual of M^T 1, giving ||M^T 1||_{q'}. Exact as well.
    if (r == 1.0) {
        std::vector<double> ones(M.num_rows(), 1.0);
        double value = lq_norm(M.apply_transpose(ones), q / (q - 1.0));
        return {value, 0, true, {value}};
    }

    PowerIterationResult res{};
    std::vector<double> u(M.num_cols(), 1.0);
    double un = lq_norm(u, q);
    for (auto& x : u) x /= un;

    double prev = 0.0;
    for (int it = 1; it <= max_iter; ++it) {
        std::vector<double> v = M.apply(u);
        double ratio = lq_norm(v, r);
        res.quotient_history.push_back(ratio);
        res.lower = ratio;
        res.iterations = it;
        if (ratio == 0.0) {
            res.converged = true;
            return res;
        }
        if (it > 1 && ratio - prev < tol * ratio) {
            res.converged = true;
            return res;
        }
        prev = ratio;
        for (auto& x : v) x = std::pow(x / ratio, r - 1.0);
        std::vector<double> z = M.apply_transpose(v);
        for (auto& x : z) x = x > 0.0 ? std::pow(x, 1.0 / (q - 1.0)) : 0.0;
        double zn = lq_norm(z, q);
        if (zn == 0.0) {
            res.converged = true;
            return res;
        }
        for (std::size_t j = 0; j < z.size(); ++j) u[j] = z[j] / zn;
    }
    res.converged = false;  // max_iter hit; lower is still a valid bound
    return res;
}

OperatorLowerBound operator_norm_lower(const KernelParams& k, const SpaceParams& s,
                                       const PrimeBase& base, ValuationWindow cols, double tol,
                                       int max_iter) {
    if (s.q.is_infinite() || s.r.is_infinite())
        throw std::invalid_argument("operator_norm_lower: finite exponents required");
    const double lnp = std::log(static_cast<double>(base.value()));
    const double r = s.r.value();
    // output decay rates below/above the support; no padding where the
    // entries do not decay (the bound stays valid, only less sharp)
    const double rate_down = k.nu.value() + (s.beta.value() + 1.0) / r;
    const double rate_up = k.lambda.value() - k.nu.value() - (s.beta.value() + 1.0) / r;
    const long long e_down = static_cast<long long>(decay_extension(rate_down, lnp));
    const long long e_up = static_cast<long long>(decay_extension(rate_up, lnp));
    ValuationWindow rows(cols.gamma_min - e_down, cols.gamma_max + e_up);

    CoordinateMatrix M = build_matrix(k, s, base, rows, cols);
    PowerIterationResult it = matrix_norm_lower(M, s.q.value(), s.r.value(), tol, max_iter);
    return OperatorLowerBound{it.lower, rows, it.iterations, it.converged};
}

std::vector<double> default_eps_schedule() {
    std::vector<double> eps;
    for (int kk = 1; kk <= 12; ++kk) eps.push_back(std::pow(2.0, -kk));
    return eps;
}

long long default_sweep_depth(double epsilon) {
    return std::max<long long>(40, static_cast<long long>(std::ceil(8.0 / epsilon)));
}

std::vector<ExtremalPoint> extremal_ratio_sweep(const KernelParams& k, const SpaceParams& s,
                                                const PrimeBase& base,
                                                const std::vector<double>& eps_schedule,
                                                ValuationWindow window) {
    Verdict v = check_boundedness(k, s, base);
    if (!v.bounded() || s.q.is_infinite() || s.r.is_infinite() ||
        std::abs(s.q.value() - s.r.value()) > 1e-12)
        throw std::domain_error("extremal_ratio_sweep: needs a bounded regime with q = r finite");
    if (eps_schedule.empty()) throw std::invalid_argument("extremal_ratio_sweep: empty schedule");
    for (std::size_t i = 0; i < eps_schedule.size(); ++i) {
        if (!(eps_schedule[i] > 0.0))
            throw std::invalid_argument("extremal_ratio_sweep: eps must be positive");
        if (i > 0 && !(eps_schedule[i] < eps_schedule[i - 1]))
            throw std::invalid_argument("extremal_ratio_sweep: eps schedule must decrease");
    }
    if (window.gamma_max < 0)
        throw BadWindowError("extremal_ratio_sweep: window misses the family support");

    const double p = static_cast<double>(base.value());
    const double lnp = std::log(p);
    const double c = base.unit_sphere_factor();
    const double q = s.q.value();
    const double a1 = k.mu.value() + 1.0 - (s.alpha.value() + 1.0) / q;
    const double b1 = k.nu.value() + (s.beta.value() + 1.0) / q;
    const long long depth = window.gamma_max;
    const long long e_down = static_cast<long long>(decay_extension(b1, lnp));
    const long long e_up = static_cast<long long>(decay_extension(a1, lnp));

    std::vector<ExtremalPoint> out;
    double running = 0.0;
    for (double eps : eps_schedule) {
        const double tail_fraction = std::pow(p, -eps * static_cast<double>(depth));
        if (tail_fraction > 0.1)
            throw WindowTooShallowError("extremal_ratio_sweep: tail budget " +
                                        std::to_string(tail_fraction) +
                                        " exceeds 10% of the ratio at eps = " +
                                        std::to_string(eps));

        // coordinates of the normalized family on [0, depth]:
        // u_g = c_{p,eps} c^{1/q} p^{-g eps/q}; weights cancel all large
        // powers, so the recurrences below never overflow
        const double cpe = std::pow((1.0 - std::pow(p, -eps)) / c, 1.0 / q);
        const double scale = cpe * std::pow(c, 1.0 / q);
        const double x = std::pow(p, -eps / q);
        std::vector<double> u(static_cast<std::size_t>(depth + 1));
        double cur = scale;
        for (long long g = 0; g <= depth; ++g, cur *= x) u[static_cast<std::size_t>(g)] = cur;

        // v = Toeplitz kernel applied to u:
        // L_m = p^{-A1} L_{m-1} + u_m, R_m = p^{-B1}(R_{m+1} + u_{m+1})
        const long long m_lo = -e_down, m_hi = depth + e_up;
        const std::size_t n = static_cast<std::size_t>(m_hi - m_lo + 1);
        const double da = std::pow(p, -a1), db = std::pow(p, -b1);
        auto u_at = [&](long long m) {
            return m >= 0 && m <= depth ? u[static_cast<std::size_t>(m)] : 0.0;
        };
        std::vector<double> v_coords(n, 0.0);
        double L = 0.0;
        for (long long m = m_lo; m <= m_hi; ++m) {
            L = da * L + u_at(m);
            v_coords[static_cast<std::size_t>(m - m_lo)] = L;
        }
        double R = 0.0;
        for (long long m = m_hi; m >= m_lo; --m) {
            R = db * (R + u_at(m + 1));
            v_coords[static_cast<std::size_t>(m - m_lo)] = c * (v_coords[static_cast<std::size_t>(m - m_lo)] + R);
        }

        running = lq_norm(v_coords, q) / lq_norm(u, q);
        out.push_back(ExtremalPoint{eps, running});
    }
    return out;
}

namespace {

/// Truncated-norm lower bound for one window, valid for any exponent pair
/// (infinite exponents use the exact sup-coordinate norms).
double window_ratio(const KernelParams& k, const SpaceParams& s, const PrimeBase& base,
                    ValuationWindow w, double tol, int max_iter) {
    if (s.q.is_finite() && s.r.is_finite())
        return operator_norm_lower(k, s, base, w, tol, max_iter).value;

    CoordinateMatrix M = build_matrix(k, s, base, w, w);
    if (s.q.is_infinite() && s.r.is_infinite()) {
        double best = 0.0;
        for (std::size_t i = 0; i < M.num_rows(); ++i) {
            double sum = 0.0;
            for (std::size_t j = 0; j < M.num_cols(); ++j) sum += M.at(i, j);
            best = std::max(best, sum);
        }
        return best;
    }
    if (s.q.is_infinite()) {
        std::vector<double> ones(M.num_cols(), 1.0);
        return lq_norm(M.apply(ones), s.r.value());
    }
    // r = inf: sup over rows of the dual row norm
    const double q = s.q.value();
    double best = 0.0;
    for (std::size_t i = 0; i < M.num_rows(); ++i) {
        if (q == 1.0) {
            for (std::size_t j = 0; j < M.num_cols(); ++j) best = std::max(best, M.at(i, j));
        } else {
            best = std::max(best, row_norm(M, i, q / (q - 1.0)));
        }
    }
    return best;
}

}  // namespace

GrowthReport divergence_witness(const KernelParams& k, const SpaceParams& s, const PrimeBase& base,
                                const std::vector<ValuationWindow>& windows, double threshold) {
    if (windows.size() < 2)
        throw std::invalid_argument("divergence_witness: need at least two windows");

    GrowthReport rep{};
    rep.threshold = threshold;
    for (const auto& w : windows)
        rep.window_ratios.emplace_back(w, window_ratio(k, s, base, w, 1e-8, 4000));

    const double first = rep.window_ratios.front().second;
    const double last = rep.window_ratios.back().second;
    rep.growth = first > 0.0 ? last / first : (last > 0.0 ? kInf : 0.0);
    rep.outcome = rep.growth >= threshold ? GrowthReport::Outcome::confirmed
                                          : GrowthReport::Outcome::inconclusive;
    return rep;
}

NormReport estimate_norm(const KernelParams& k, const SpaceParams& s, const PrimeBase& base,
                         ValuationWindow window, double tol) {
    return estimate_norm(k, s, base, window, tol, 0);
}

NormReport estimate_norm(const KernelParams& k, const SpaceParams& s, const PrimeBase& base,
                         ValuationWindow window, double tol, std::size_t max_extremal_points) {
    NormReport rep{};
    rep.verdict = check_boundedness(k, s, base);
    if (rep.verdict.status == BoundednessStatus::out_of_paper_scope) return rep;

    if (!rep.verdict.bounded()) {
        std::vector<ValuationWindow> ladder;
        for (long long w : {5, 10, 20, 40, 80, 160}) ladder.push_back(ValuationWindow::symmetric(w));
        rep.divergence = divergence_witness(k, s, base, ladder);
        return rep;
    }

    const bool q_fin = s.q.is_finite(), r_fin = s.r.is_finite();
    const bool q_eq_r = (q_fin && r_fin && std::abs(s.q.value() - s.r.value()) <= 1e-12) ||
                        (!q_fin && !r_fin);

    if (q_eq_r) rep.closed_form = sharp_norm(k, s, base);
    if (q_fin && r_fin) {
        rep.schur = optimize_schur_bound(k, s, base);
        OperatorLowerBound ml = operator_norm_lower(k, s, base, window, tol, 50000);
        rep.matrix_lower =
            MatrixLowerInfo{ml.value, window, ml.rows, ml.iterations, tol, ml.converged};
    }
    if (q_eq_r && q_fin) {
        std::vector<double> schedule = default_eps_schedule();
        if (max_extremal_points > 0 && schedule.size() > max_extremal_points)
            schedule.resize(max_extremal_points);
        for (double eps : schedule) {
            long long depth = std::max(default_sweep_depth(eps), window.gamma_max);
            auto pts = extremal_ratio_sweep(k, s, base, {eps}, ValuationWindow(0, depth));
            rep.extremal_lowers.push_back(pts.front());
        }
    }
    return rep;
}

}  // namespace padic_hlp
