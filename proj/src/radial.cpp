#include "padic_hlp/radial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace padic_hlp {

double integrate_radial(const RadialFunction& f) {
    const double lnp = std::log(static_cast<double>(f.base().value()));
    double sum = 0.0;
    const auto& w = f.window();
    for (long long g = w.gamma_min; g <= w.gamma_max; ++g) {
        double phi = f.at(g);
        if (phi == 0.0) continue;
        sum += std::exp(static_cast<double>(g) * lnp) * phi;
    }
    return f.base().unit_sphere_factor() * sum;
}

double weighted_norm(const RadialFunction& f, const ExtendedExponent& q, double theta) {
    const auto& w = f.window();
    if (q.is_infinite()) {
        double m = 0.0;
        for (long long g = w.gamma_min; g <= w.gamma_max; ++g) m = std::max(m, std::abs(f.at(g)));
        return m;
    }
    const double qq = q.value();
    const double lnp = std::log(static_cast<double>(f.base().value()));
    double sum = 0.0;
    for (long long g = w.gamma_min; g <= w.gamma_max; ++g) {
        double phi = std::abs(f.at(g));
        if (phi == 0.0) continue;
        // p^{gamma(theta+1)} |phi|^q, assembled in log space
        sum += std::exp(static_cast<double>(g) * (theta + 1.0) * lnp + qq * std::log(phi));
    }
    return std::pow(f.base().unit_sphere_factor() * sum, 1.0 / qq);
}

std::vector<double> to_sequence_coords(const RadialFunction& f, double q, double theta) {
    if (!(q >= 1.0) || !std::isfinite(q))
        throw std::invalid_argument("to_sequence_coords: finite q >= 1 required");
    const auto& w = f.window();
    const double lnp = std::log(static_cast<double>(f.base().value()));
    const double lnc = std::log(f.base().unit_sphere_factor());
    std::vector<double> u(w.size(), 0.0);
    for (long long g = w.gamma_min; g <= w.gamma_max; ++g) {
        double phi = f.at(g);
        if (phi == 0.0) continue;
        double weight = std::exp((lnc + static_cast<double>(g) * (theta + 1.0) * lnp) / q);
        u[static_cast<std::size_t>(g - w.gamma_min)] = phi * weight;
    }
    return u;
}

RadialFunction extremal_family(const PrimeBase& base, FamilyKind kind, double epsilon, double q,
                               double alpha, ValuationWindow window, bool normalized) {
    if (!(epsilon > 0.0)) throw std::invalid_argument("extremal_family: epsilon must be positive");
    if (!(q >= 1.0) || !std::isfinite(q))
        throw std::invalid_argument("extremal_family: finite q >= 1 required");
    if (kind == FamilyKind::one && window.gamma_min > 0)
        throw BadWindowError("extremal_family: window misses the support |x| <= 1");
    if (kind == FamilyKind::two && window.gamma_max < 0)
        throw BadWindowError("extremal_family: window misses the support |x| >= 1");

    const double p = static_cast<double>(base.value());
    const double lnp = std::log(p);
    const double exponent =
        kind == FamilyKind::one ? (-(alpha + 1.0) + epsilon) / q : (-(alpha + 1.0) - epsilon) / q;
    const double scale =
        normalized ? std::pow((1.0 - std::pow(p, -epsilon)) / base.unit_sphere_factor(), 1.0 / q)
                   : 1.0;

    return RadialFunction::sampled(base, window, [&](long long g) {
        const bool supported = kind == FamilyKind::one ? g <= 0 : g >= 0;
        if (!supported) return 0.0;
        return scale * std::exp(static_cast<double>(g) * exponent * lnp);
    });
}

double geometric_tail(double p, double rate, long long depth) {
    double x = std::pow(p, -rate);
    if (!(x < 1.0)) return std::numeric_limits<double>::infinity();
    return std::pow(p, -rate * static_cast<double>(depth)) / (1.0 - x);
}

}  // namespace padic_hlp
