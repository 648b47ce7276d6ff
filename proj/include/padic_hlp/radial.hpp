#pragma once

#include "padic_hlp/padic.hpp"
#include "padic_hlp/scalar.hpp"

#include <stdexcept>
#include <vector>

namespace padic_hlp {

struct BadWindowError : std::invalid_argument {
    explicit BadWindowError(const std::string& what) : std::invalid_argument(what) {}
};

/// Finite slice [gamma_min, gamma_max] of the valuation grid. A radial
/// function is stored as one coefficient per sphere in the window and is
/// zero outside it.
struct ValuationWindow {
    long long gamma_min;
    long long gamma_max;

    ValuationWindow(long long lo, long long hi) : gamma_min(lo), gamma_max(hi) {
        if (lo > hi) throw BadWindowError("ValuationWindow: gamma_min > gamma_max");
    }
    static ValuationWindow symmetric(long long half_width) {
        return ValuationWindow(-half_width, half_width);
    }

    std::size_t size() const { return static_cast<std::size_t>(gamma_max - gamma_min + 1); }
    bool contains(long long gamma) const { return gamma >= gamma_min && gamma <= gamma_max; }
    bool contains(const ValuationWindow& other) const {
        return gamma_min <= other.gamma_min && other.gamma_max <= gamma_max;
    }

    friend bool operator==(const ValuationWindow& a, const ValuationWindow& b) {
        return a.gamma_min == b.gamma_min && a.gamma_max == b.gamma_max;
    }
};

/// Function on Q_p^* depending only on |x|_p: value phi_gamma on the
/// sphere |x|_p = p^gamma for gamma in the window, zero elsewhere.
/// Immutable after construction.
class RadialFunction {
public:
    RadialFunction(const PrimeBase& base, ValuationWindow window, std::vector<double> values)
        : base_(base), window_(window), values_(std::move(values)) {
        if (values_.size() != window_.size())
            throw std::invalid_argument("RadialFunction: value count does not match window");
    }

    static RadialFunction zero(const PrimeBase& base, ValuationWindow window) {
        return RadialFunction(base, window, std::vector<double>(window.size(), 0.0));
    }

    template <typename F>
    static RadialFunction sampled(const PrimeBase& base, ValuationWindow window, F&& f) {
        std::vector<double> v(window.size());
        for (long long g = window.gamma_min; g <= window.gamma_max; ++g)
            v[static_cast<std::size_t>(g - window.gamma_min)] = f(g);
        return RadialFunction(base, window, std::move(v));
    }

    const PrimeBase& base() const { return base_; }
    const ValuationWindow& window() const { return window_; }
    const std::vector<double>& values() const { return values_; }

    double at(long long gamma) const {
        if (!window_.contains(gamma)) return 0.0;
        return values_[static_cast<std::size_t>(gamma - window_.gamma_min)];
    }

private:
    PrimeBase base_;
    ValuationWindow window_;
    std::vector<double> values_;
};

/// Haar integral over Q_p^* of the (truncated) function:
/// (1 - 1/p) * sum_gamma p^gamma phi_gamma.
double integrate_radial(const RadialFunction& f);

/// L^q norm with weight |x|^theta. q = inf is the sup over the window and
/// ignores theta (the infinity space carries no weight).
double weighted_norm(const RadialFunction& f, const ExtendedExponent& q, double theta);

/// Isometric coordinates u_gamma = phi_gamma ((1-1/p) p^{gamma(theta+1)})^{1/q},
/// so the plain l^q norm of u equals weighted_norm(f, q, theta).
std::vector<double> to_sequence_coords(const RadialFunction& f, double q, double theta);

/// The near-extremal power families. Kind one lives on |x|_p <= 1 with
/// exponent (-(alpha+1) + eps)/q, kind two on |x|_p >= 1 with exponent
/// (-(alpha+1) - eps)/q. With `normalized`, scaled by
/// c_{p,eps} = ((1-p^{-eps})/(1-p^{-1}))^{1/q} so the untruncated norm is 1.
enum class FamilyKind { one, two };
RadialFunction extremal_family(const PrimeBase& base, FamilyKind kind, double epsilon, double q,
                               double alpha, ValuationWindow window, bool normalized);

/// sum_{j >= depth} p^{-rate*j} = p^{-rate*depth} / (1 - p^{-rate});
/// the certified truncation tail used throughout the tests.
double geometric_tail(double p, double rate, long long depth);

}  // namespace padic_hlp
