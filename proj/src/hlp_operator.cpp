#include "padic_hlp/hlp_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace padic_hlp {

double kernel_eval(double xnorm, double ynorm, const KernelParams& k) {
    if (!(xnorm > 0.0) || !(ynorm > 0.0))
        throw std::invalid_argument("kernel_eval: norms must be positive");
    const double lx = std::log(xnorm), ly = std::log(ynorm);
    return std::exp(k.mu.value() * lx + k.nu.value() * ly - k.lambda.value() * std::max(lx, ly));
}

HlpImage apply_hlp(const KernelParams& k, const RadialFunction& f, ValuationWindow out_window) {
    const double lnp = std::log(static_cast<double>(f.base().value()));
    const double c = f.base().unit_sphere_factor();
    const double mu = k.mu.value(), nu = k.nu.value(), lambda = k.lambda.value();
    const auto& in = f.window();

    bool overflow = false;
    auto out = RadialFunction::sampled(f.base(), out_window, [&](long long m) {
        double sum = 0.0;
        for (long long g = in.gamma_min; g <= in.gamma_max; ++g) {
            double phi = f.at(g);
            if (phi == 0.0) continue;
            double e = (static_cast<double>(g) * (mu + 1.0) + static_cast<double>(m) * nu -
                        lambda * static_cast<double>(std::max(g, m))) *
                       lnp;
            double term = std::exp(e) * phi;
            if (!std::isfinite(term)) overflow = true;
            sum += term;
        }
        if (!std::isfinite(sum)) overflow = true;
        return c * sum;
    });
    return HlpImage{std::move(out), overflow};
}

std::vector<double> CoordinateMatrix::apply(const std::vector<double>& u) const {
    if (u.size() != num_cols()) throw std::invalid_argument("CoordinateMatrix::apply: size mismatch");
    std::vector<double> v(num_rows(), 0.0);
    for (std::size_t i = 0; i < num_rows(); ++i) {
        double s = 0.0;
        const double* row = a_.data() + i * num_cols();
        for (std::size_t j = 0; j < num_cols(); ++j) s += row[j] * u[j];
        v[i] = s;
    }
    return v;
}

std::vector<double> CoordinateMatrix::apply_transpose(const std::vector<double>& v) const {
    if (v.size() != num_rows())
        throw std::invalid_argument("CoordinateMatrix::apply_transpose: size mismatch");
    std::vector<double> u(num_cols(), 0.0);
    for (std::size_t i = 0; i < num_rows(); ++i) {
        const double* row = a_.data() + i * num_cols();
        const double vi = v[i];
        if (vi == 0.0) continue;
        for (std::size_t j = 0; j < num_cols(); ++j) u[j] += row[j] * vi;
    }
    return u;
}

CoordinateMatrix build_matrix(const KernelParams& k, const SpaceParams& s, const PrimeBase& base,
                              ValuationWindow window) {
    return build_matrix(k, s, base, window, window);
}

CoordinateMatrix build_matrix(const KernelParams& k, const SpaceParams& s, const PrimeBase& base,
                              ValuationWindow rows, ValuationWindow cols) {
    const double lnp = std::log(static_cast<double>(base.value()));
    const double lnc = std::log(base.unit_sphere_factor());
    const double inv_q = s.q.is_infinite() ? 0.0 : 1.0 / s.q.value();
    const double inv_r = s.r.is_infinite() ? 0.0 : 1.0 / s.r.value();
    const double alpha = s.alpha.value(), beta = s.beta.value();
    const double mu = k.mu.value(), nu = k.nu.value(), lambda = k.lambda.value();

    CoordinateMatrix M(rows, cols);
    for (long long m = rows.gamma_min; m <= rows.gamma_max; ++m) {
        const std::size_t i = static_cast<std::size_t>(m - rows.gamma_min);
        for (long long g = cols.gamma_min; g <= cols.gamma_max; ++g) {
            const std::size_t j = static_cast<std::size_t>(g - cols.gamma_min);
            const double gm = static_cast<double>(g), md = static_cast<double>(m);
            // target weight^{1/r} * kernel * sphere measure * source weight^{-1/q}
            double e = inv_r * (lnc + md * (beta + 1.0) * lnp) +
                       (mu * gm + nu * md - lambda * static_cast<double>(std::max(g, m))) * lnp +
                       gm * lnp + lnc - inv_q * (lnc + gm * (alpha + 1.0) * lnp);
            M.at(i, j) = std::exp(e);
        }
    }
    return M;
}

KernelParams adjoint_params(const KernelParams& k, const Scalar& alpha) {
    return KernelParams{k.lambda, k.nu, k.mu - alpha};
}

KernelSupBound kernel_sup_bound(double a, double b, double lambda, const PrimeBase& base,
                                long long grid_radius) {
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    if (!(std::abs(lambda - (a - b)) <= 1e-12 * scale) || a < 0.0 || b > 0.0)
        return KernelSupBound{false, 0.0};

    const double lnp = std::log(static_cast<double>(base.value()));
    double best = -std::numeric_limits<double>::infinity();
    for (long long i = -grid_radius; i <= grid_radius; ++i)
        for (long long j = -grid_radius; j <= grid_radius; ++j) {
            double e = (a * static_cast<double>(i) - b * static_cast<double>(j) -
                        lambda * static_cast<double>(std::max(i, j))) *
                       lnp;
            best = std::max(best, e);
        }
    return KernelSupBound{true, std::exp(best)};
}

}  // namespace padic_hlp
