#include "padic_hlp/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace padic_hlp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double p_pow(const PrimeBase& base, double e) {
    return std::pow(static_cast<double>(base.value()), e);
}

/// tau = mu+nu+1+(beta+1)/r-(alpha+1)/q-lambda, with the weight terms
/// dropped (not multiplied by an inexact zero) for infinite exponents so
/// exactness survives.
Scalar balance_residual(const KernelParams& k, const SpaceParams& s) {
    Scalar tau = k.mu + k.nu + Scalar(1) - k.lambda;
    if (s.r.is_finite()) tau = tau + (s.beta + Scalar(1)) / s.r.scalar();
    if (s.q.is_finite()) tau = tau - (s.alpha + Scalar(1)) / s.q.scalar();
    return tau;
}

int cmp(const Scalar& a, const Scalar& b, double tol) { return (a - b).sign(tol); }

struct ExponentOrder {
    bool q_at_least_one;
    bool r_at_least_one;
    bool r_less_than_q;
    bool q_equals_r;
    bool q_is_one;
};

ExponentOrder classify_exponents(const SpaceParams& s, double tol) {
    ExponentOrder o{};
    o.q_at_least_one = s.q.is_infinite() || cmp(s.q.scalar(), Scalar(1), tol) >= 0;
    o.r_at_least_one = s.r.is_infinite() || cmp(s.r.scalar(), Scalar(1), tol) >= 0;
    if (s.r.is_infinite()) {
        o.r_less_than_q = false;
        o.q_equals_r = s.q.is_infinite();
    } else if (s.q.is_infinite()) {
        o.r_less_than_q = true;
        o.q_equals_r = false;
    } else {
        int c = cmp(s.q.scalar(), s.r.scalar(), tol);
        o.r_less_than_q = c > 0;
        o.q_equals_r = c == 0;
    }
    o.q_is_one = s.q.is_finite() && cmp(s.q.scalar(), Scalar(1), tol) == 0;
    return o;
}

}  // namespace

IntegralI closed_form_I(double a, double lambda, double ynorm, const PrimeBase& base) {
    if (!(a > -1.0)) return IntegralI{IntegralI::Status::diverges_origin, kInf};
    if (!(lambda - a - 1.0 > 0.0)) return IntegralI{IntegralI::Status::diverges_infinity, kInf};
    const double coeff = base.unit_sphere_factor() *
                         (1.0 + 1.0 / (p_pow(base, a + 1.0) - 1.0) +
                          1.0 / (p_pow(base, lambda - a - 1.0) - 1.0));
    return IntegralI{IntegralI::Status::converges, coeff * std::pow(ynorm, a + 1.0 - lambda)};
}

std::string citation_label(Citation c) {
    switch (c) {
        case Citation::theorem1: return "Theorem 1";
        case Citation::theorem2: return "Theorem 2";
        case Citation::theorem3: return "Theorem 3";
        case Citation::theorem4: return "Theorem 4";
        case Citation::theorem5: return "Theorem 5";
        case Citation::boundary_alpha_upper: return "necessity boundary (alpha+1 = q(mu+1))";
        case Citation::boundary_alpha_lower: return "necessity boundary (alpha+1 = q(mu+1-lambda))";
        case Citation::remark1: return "Remark 1 (r < q)";
        case Citation::remark2: return "Remark 2 (r < q)";
        case Citation::remark3: return "Remark 3 (r < q)";
        case Citation::out_of_scope: return "out of scope";
    }
    return "?";
}

Verdict check_boundedness(const KernelParams& k, const SpaceParams& s, const PrimeBase& base) {
    (void)base;
    const double tol = kBalanceTolerance * std::max(1.0, std::abs(k.lambda.value()));

    Verdict v{};
    Scalar tau = balance_residual(k, s);
    v.tau = tau.value();
    v.tau_exact = tau.is_exact();

    const auto order = classify_exponents(s, tol);
    if (!order.q_at_least_one || !order.r_at_least_one) {
        v.status = BoundednessStatus::out_of_paper_scope;
        v.citation = Citation::out_of_scope;
        v.conditions.push_back({"scope", "q >= 1 and r >= 1 (or inf)", false});
        return v;
    }

    if (order.r_less_than_q) {
        v.status = BoundednessStatus::unbounded;
        v.conditions.push_back({"exponent-order", "q <= r", false});
        if (s.q.is_infinite())
            v.citation = Citation::remark2;
        else if (s.r.is_finite() && cmp(s.r.scalar(), Scalar(1), tol) == 0)
            v.citation = Citation::remark1;
        else
            v.citation = Citation::remark3;
        return v;
    }

    const bool balanced = tau.sign(tol) == 0;

    if (s.r.is_finite()) {
        // 1 <= q <= r < inf: balance plus the open window -r nu < beta+1 < r(lambda-nu)
        Scalar lower = s.beta + Scalar(1) + s.r.scalar() * k.nu;
        Scalar upper = s.r.scalar() * (k.lambda - k.nu) - (s.beta + Scalar(1));
        int lo_sign = lower.sign(tol), hi_sign = upper.sign(tol);
        v.conditions.push_back(
            {"balance", "lambda = mu+nu+1+(beta+1)/r-(alpha+1)/q", balanced});
        v.conditions.push_back({"window-lower", "-r*nu < beta+1", lo_sign > 0});
        v.conditions.push_back({"window-upper", "beta+1 < r*(lambda-nu)", hi_sign > 0});
        const Citation base_citation = order.q_equals_r ? Citation::theorem4 : Citation::theorem1;
        if (balanced && lo_sign > 0 && hi_sign > 0) {
            v.status = BoundednessStatus::bounded;
            v.citation = base_citation;
        } else {
            v.status = BoundednessStatus::unbounded;
            if (balanced && hi_sign == 0)
                v.citation = Citation::boundary_alpha_upper;  // alpha+1 = q(mu+1)
            else if (balanced && lo_sign == 0)
                v.citation = Citation::boundary_alpha_lower;  // alpha+1 = q(mu+1-lambda)
            else
                v.citation = base_citation;
        }
        return v;
    }

    if (order.q_is_one) {
        // q = 1, r = inf: closed endpoints mu-lambda <= alpha <= mu
        Scalar lo = s.alpha - (k.mu - k.lambda);
        Scalar hi = k.mu - s.alpha;
        bool lo_ok = lo.sign(tol) >= 0, hi_ok = hi.sign(tol) >= 0;
        v.conditions.push_back({"balance", "lambda = mu+nu-alpha", balanced});
        v.conditions.push_back({"alpha-lower", "mu-lambda <= alpha", lo_ok});
        v.conditions.push_back({"alpha-upper", "alpha <= mu", hi_ok});
        v.status = balanced && lo_ok && hi_ok ? BoundednessStatus::bounded
                                              : BoundednessStatus::unbounded;
        v.citation = Citation::theorem2;
        return v;
    }

    if (s.q.is_finite()) {
        // 1 < q < inf, r = inf: strict 0 < nu < lambda
        bool nu_lo = k.nu.sign(tol) > 0;
        bool nu_hi = (k.lambda - k.nu).sign(tol) > 0;
        v.conditions.push_back({"balance", "lambda = mu+nu+1-(alpha+1)/q", balanced});
        v.conditions.push_back({"nu-lower", "0 < nu", nu_lo});
        v.conditions.push_back({"nu-upper", "nu < lambda", nu_hi});
        v.status = balanced && nu_lo && nu_hi ? BoundednessStatus::bounded
                                              : BoundednessStatus::unbounded;
        v.citation = Citation::theorem3;
        return v;
    }

    // q = r = inf: strict 0 < nu+1 < lambda
    bool lo_ok = (k.nu + Scalar(1)).sign(tol) > 0;
    bool hi_ok = (k.lambda - k.nu - Scalar(1)).sign(tol) > 0;
    v.conditions.push_back({"balance", "lambda = mu+nu+1", balanced});
    v.conditions.push_back({"nu-lower", "0 < nu+1", lo_ok});
    v.conditions.push_back({"nu-upper", "nu+1 < lambda", hi_ok});
    v.status =
        balanced && lo_ok && hi_ok ? BoundednessStatus::bounded : BoundednessStatus::unbounded;
    v.citation = Citation::theorem5;
    return v;
}

SharpNormTerms sharp_norm_terms(const KernelParams& k, const SpaceParams& s,
                                const PrimeBase& base) {
    Verdict v = check_boundedness(k, s, base);
    if (!v.bounded())
        throw std::domain_error("sharp_norm: operator is not bounded for these parameters");

    const double tol = kBalanceTolerance * std::max(1.0, std::abs(k.lambda.value()));
    const auto order = classify_exponents(s, tol);
    if (!order.q_equals_r)
        throw NotAvailableError("sharp_norm: no closed-form constant for q < r, only bounds");

    SharpNormTerms t{};
    t.prefactor = base.unit_sphere_factor();
    if (s.q.is_finite()) {
        const double q = s.q.value();
        t.exponent_a = k.mu.value() + 1.0 - (s.alpha.value() + 1.0) / q;  // A1
        t.exponent_b = k.nu.value() + (s.beta.value() + 1.0) / q;         // B1
    } else {
        t.exponent_a = k.nu.value() + 1.0;
        t.exponent_b = k.lambda.value() - k.nu.value() - 1.0;
    }
    t.term_a = 1.0 / (p_pow(base, t.exponent_a) - 1.0);
    t.term_b = 1.0 / (p_pow(base, t.exponent_b) - 1.0);
    t.value = t.prefactor * (1.0 + t.term_a + t.term_b);
    return t;
}

double sharp_norm(const KernelParams& k, const SpaceParams& s, const PrimeBase& base) {
    return sharp_norm_terms(k, s, base).value;
}

EndpointNorm exact_norm_endpoint(const KernelParams& k, const SpaceParams& s,
                                 const PrimeBase& base) {
    const double tol = kBalanceTolerance * std::max(1.0, std::abs(k.lambda.value()));
    const bool r_is_one = s.r.is_finite() && cmp(s.r.scalar(), Scalar(1), tol) == 0;
    const bool q_is_one = s.q.is_finite() && cmp(s.q.scalar(), Scalar(1), tol) == 0;

    auto side = [](const IntegralI& i) {
        return i.status == IntegralI::Status::diverges_origin ? "origin" : "infinity";
    };

    if (r_is_one && q_is_one) {
        // L^1_alpha -> L^1_beta: fold the weights into the kernel and take
        // the sup over x of the row integral.
        IntegralI row = closed_form_I(k.nu.value() + s.beta.value(), k.lambda.value(), 1.0, base);
        if (!row.converges())
            return {false, kInf, std::string("row integral diverges at ") + side(row)};
        Scalar tau = balance_residual(k, s);
        if (tau.sign(tol) != 0)
            return {false, kInf, "row integral scales like |x|^tau with tau != 0; sup diverges"};
        return {true, row.value, "sup over x of the weighted row integral"};
    }

    if (s.q.is_infinite()) {
        if (s.r.is_infinite()) {
            // sup case: integrate the kernel over the second argument and
            // take the sup over the first, int k(x,y) dy = |x|^mu I(nu)(x)
            IntegralI across = closed_form_I(k.nu.value(), k.lambda.value(), 1.0, base);
            if (!across.converges())
                return {false, kInf, std::string("kernel integral diverges at ") + side(across)};
            Scalar tau = balance_residual(k, s);
            if (tau.sign(tol) != 0)
                return {false, kInf,
                        "kernel integral scales like |x|^tau with tau != 0; sup diverges"};
            return {true, across.value, "sup over x of the kernel integral"};
        }
        // L^inf source, L^r target: column integral int k(x,y) dx
        IntegralI col = closed_form_I(k.mu.value(), k.lambda.value(), 1.0, base);
        if (!col.converges())
            return {false, kInf, std::string("column integral diverges at ") + side(col)};
        return {false, kInf, "column integral is a pure power of |y|; no pure power lies in L^r"};
    }

    if (r_is_one)
        return {false, kInf,
                "row integral is a pure power of |x|; its L^{q'} norm diverges for q > 1"};

    throw WrongRegimeError("exact_norm_endpoint: needs r = 1 (row route) or q = inf (column route)");
}

namespace {

struct CaseOneGeometry {
    double q, r, qc;  // qc = conjugate of q
    double lambda, mu, nu, alpha, beta;
};

SchurCertificate evaluate_case_one(const CaseOneGeometry& g, const PrimeBase& base, double t,
                                   double A) {
    if (!(t > 1.0)) throw InfeasibleFreeParamsError("case I: t must exceed 1");
    const double svar = t / (t - 1.0);
    const double lo1 = -1.0 / g.qc - g.mu / svar;
    const double hi1 = lo1 + g.lambda / svar;
    const double base5 = -(g.beta + 1.0) / g.r - g.nu - g.mu / svar - 1.0 / g.qc;
    const double lo2 = base5 + g.lambda / svar;
    const double hi2 = base5 + g.lambda;
    if (!(A > lo1 && A < hi1))
        throw InfeasibleFreeParamsError("case I: A outside the Hoelder window");
    if (!(A > lo2 && A < hi2))
        throw InfeasibleFreeParamsError("case I: A outside the Minkowski window");

    const double a1 = (g.mu / svar) * g.qc + A * g.qc;
    const double L1 = (g.lambda / svar) * g.qc;
    IntegralI i1 = closed_form_I(a1, L1, 1.0, base);
    const double B = g.r * (g.nu / svar + g.mu / svar + A + 1.0 / g.qc - g.lambda / svar);
    const double a2 = (g.nu / t) * g.r + B + g.beta;
    const double L2 = (g.lambda / t) * g.r;
    IntegralI i2 = closed_form_I(a2, L2, 1.0, base);
    if (!i1.converges() || !i2.converges())
        throw InfeasibleFreeParamsError("case I: auxiliary integral diverges");

    SchurCertificate cert{};
    cert.mode = SchurCertificate::Mode::case_one;
    cert.s = svar;
    cert.t = t;
    cert.shift = A;
    cert.c1 = i1.value;
    cert.c2 = i2.value;
    cert.bound = std::pow(cert.c1, 1.0 / g.qc) * std::pow(cert.c2, 1.0 / g.r);
    return cert;
}

SchurCertificate evaluate_case_two(const CaseOneGeometry& g, const PrimeBase& base, double svar,
                                   double D) {
    if (!(svar > 1.0)) throw InfeasibleFreeParamsError("case II: s must exceed 1");
    const double t = svar / (svar - 1.0);
    const double lo4 = -g.nu / t - (g.beta + 1.0) / g.r;
    const double hi4 = (g.lambda - g.nu) / t - (g.beta + 1.0) / g.r;
    const double lo5 = (g.nu - g.lambda) / svar;
    const double hi5 = g.nu / svar;
    if (!(D > lo4 && D < hi4))
        throw InfeasibleFreeParamsError("case II: D outside the integral window");
    if (!(D > lo5 && D < hi5))
        throw InfeasibleFreeParamsError("case II: D outside the sup-lemma window");

    const double a3 = (g.lambda - g.nu) / svar + D;
    const double b3 = D - g.nu / svar;
    KernelSupBound sup = kernel_sup_bound(a3, b3, g.lambda / svar, base);
    if (!sup.bounded) throw InfeasibleFreeParamsError("case II: sup lemma not applicable");
    IntegralI i4 =
        closed_form_I((g.nu / t) * g.r + g.r * D + g.beta, (g.lambda / t) * g.r, 1.0, base);
    if (!i4.converges()) throw InfeasibleFreeParamsError("case II: auxiliary integral diverges");

    SchurCertificate cert{};
    cert.mode = SchurCertificate::Mode::case_two;
    cert.s = svar;
    cert.t = t;
    cert.shift = D;
    cert.c3 = sup.value;
    cert.c4 = i4.value;
    cert.bound = cert.c3 * std::pow(cert.c4, 1.0 / g.r);
    return cert;
}

CaseOneGeometry make_geometry(const KernelParams& k, const SpaceParams& s) {
    CaseOneGeometry g{};
    g.q = s.q.value();
    g.r = s.r.value();
    g.qc = g.q > 1.0 ? g.q / (g.q - 1.0) : kInf;
    g.lambda = k.lambda.value();
    g.mu = k.mu.value();
    g.nu = k.nu.value();
    g.alpha = s.alpha.value();
    g.beta = s.beta.value();
    return g;
}

void require_schur_regime(const KernelParams& k, const SpaceParams& s, const PrimeBase& base) {
    if (s.r.is_infinite() || s.q.is_infinite())
        throw std::domain_error("schur bound: needs q <= r < inf");
    Verdict v = check_boundedness(k, s, base);
    if (!v.bounded()) throw std::domain_error("schur bound: operator not bounded here");
    if (s.q.value() > s.r.value() + 1e-12)
        throw std::domain_error("schur bound: needs q <= r");
}

}  // namespace

SchurCertificate schur_upper_bound(const KernelParams& k, const SpaceParams& s,
                                   const PrimeBase& base, double t_or_s, double a_or_d) {
    require_schur_regime(k, s, base);
    auto g = make_geometry(k, s);
    if (g.q > 1.0) return evaluate_case_one(g, base, t_or_s, a_or_d);
    return evaluate_case_two(g, base, t_or_s, a_or_d);
}

namespace {

/// Golden-section minimization on [lo, hi]; f may return +inf.
template <typename F>
std::pair<double, double> golden_min(F&& f, double lo, double hi, int iters) {
    const double phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = f(x2);
        }
    }
    return f1 <= f2 ? std::make_pair(x1, f1) : std::make_pair(x2, f2);
}

}  // namespace

SchurCertificate optimize_schur_bound(const KernelParams& k, const SpaceParams& s,
                                      const PrimeBase& base, int grid_resolution) {
    require_schur_regime(k, s, base);
    const auto g = make_geometry(k, s);
    const bool case_one = g.q > 1.0;
    const int n = std::max(4, grid_resolution);

    std::optional<SchurCertificate> best;
    auto consider = [&](double primary, double shift) {
        try {
            SchurCertificate cert = case_one ? evaluate_case_one(g, base, primary, shift)
                                             : evaluate_case_two(g, base, primary, shift);
            if (!best || cert.bound < best->bound - 1e-12) best = cert;
        } catch (const InfeasibleFreeParamsError&) {
        }
    };

    // admissible shift window at a given t (case I) or s (case II)
    auto shift_window = [&](double primary) -> std::pair<double, double> {
        if (case_one) {
            const double t = primary;
            if (!(t > 1.0)) return {1.0, 0.0};
            const double svar = t / (t - 1.0);
            const double lo1 = -1.0 / g.qc - g.mu / svar;
            const double hi1 = lo1 + g.lambda / svar;
            const double base5 = -(g.beta + 1.0) / g.r - g.nu - g.mu / svar - 1.0 / g.qc;
            return {std::max(lo1, base5 + g.lambda / svar), std::min(hi1, base5 + g.lambda)};
        }
        const double svar = primary;
        if (!(svar > 1.0)) return {1.0, 0.0};
        const double t = svar / (svar - 1.0);
        const double lo = std::max(-g.nu / t - (g.beta + 1.0) / g.r, (g.nu - g.lambda) / svar);
        const double hi =
            std::min((g.lambda - g.nu) / t - (g.beta + 1.0) / g.r, g.nu / svar);
        return {lo, hi};
    };

    auto best_over_shift = [&](double primary, int iters) -> double {
        auto [lo, hi] = shift_window(primary);
        if (!(lo < hi)) return kInf;
        const double margin = 1e-6 * (hi - lo);
        lo += margin;
        hi -= margin;
        double best_here = kInf;
        auto eval = [&](double shift) {
            try {
                SchurCertificate cert = case_one ? evaluate_case_one(g, base, primary, shift)
                                                 : evaluate_case_two(g, base, primary, shift);
                if (!best || cert.bound < best->bound - 1e-12) best = cert;
                best_here = std::min(best_here, cert.bound);
                return cert.bound;
            } catch (const InfeasibleFreeParamsError&) {
                return kInf;
            }
        };
        for (int j = 0; j <= iters; ++j) eval(lo + (hi - lo) * j / iters);
        golden_min(eval, lo, hi, 40);
        return best_here;
    };

    // the q = r choice t = q, A = -(alpha+1)/(q q') recovers the sharp
    // constant; always try it first
    if (case_one) consider(g.q, -(g.alpha + 1.0) / (g.q * g.qc));

    const double x_lo = std::log(1e-3), x_hi = case_one ? std::log(1e3) : std::log(1e6);
    for (int i = 0; i < n; ++i) {
        double x = x_lo + (x_hi - x_lo) * i / (n - 1);
        best_over_shift(1.0 + std::exp(x), n);
    }

    if (best) {
        // local refinement in the primary coordinate around the incumbent
        double x_best = std::log((case_one ? best->t : best->s) - 1.0);
        const double h = (x_hi - x_lo) / (n - 1);
        golden_min([&](double x) { return best_over_shift(1.0 + std::exp(x), 24); },
                   std::max(x_lo, x_best - h), std::min(x_hi, x_best + h), 32);
    }

    if (!best) throw InfeasibleFreeParamsError("optimize_schur_bound: empty feasible region");
    return *best;
}

double unboundedness_growth_factor(const PrimeBase& base, double q, double r, double epsilon) {
    const double lnp = std::log(static_cast<double>(base.value()));
    const double c = base.unit_sphere_factor();
    return std::pow(c, 1.0 / r - 1.0 / q) * std::pow(std::expm1(epsilon * lnp), 1.0 / q) /
           std::pow(std::expm1((r / q) * epsilon * lnp), 1.0 / r);
}

}  // namespace padic_hlp
