#pragma once

#include "padic_hlp/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace padic_hlp {

struct ZeroInputError : std::domain_error {
    ZeroInputError() : std::domain_error("zero input has no digit expansion") {}
};

/// A prime p. Primality is verified at construction by trial division;
/// everything downstream may assume it.
class PrimeBase {
public:
    explicit PrimeBase(long long p);
    long long value() const { return p_; }
    /// 1 - 1/p, the measure of the unit sphere; shows up everywhere.
    double unit_sphere_factor() const { return 1.0 - 1.0 / static_cast<double>(p_); }

    friend bool operator==(const PrimeBase& a, const PrimeBase& b) { return a.p_ == b.p_; }

private:
    long long p_;
};

/// Exponent of p in x. nullopt encodes +infinity (x = 0).
std::optional<long long> valuation(const Rational& x, const PrimeBase& base);

/// p^(-valuation); 0 for x = 0.
double padic_norm(const Rational& x, const PrimeBase& base);
Rational padic_norm_exact(const Rational& x, const PrimeBase& base);

/// Leading digits of the canonical expansion x = p^gamma * sum a_j p^j
/// with 0 <= a_j < p and a_0 != 0. Partial sums converge to x in the
/// p-adic norm: val(x - s_k) >= gamma + k.
struct DigitExpansion {
    long long gamma = 0;
    std::vector<int> digits;
};
DigitExpansion digit_expansion(const Rational& x, const PrimeBase& base, std::size_t count);

/// Partial sum s_k = p^gamma * sum_{j<k} a_j p^j as an exact rational.
Rational expansion_partial_sum(const DigitExpansion& e, const PrimeBase& base, std::size_t k);

struct Ball {
    long long gamma;
};
struct Sphere {
    long long gamma;
};

/// |B_gamma| = p^gamma, |S_gamma| = p^gamma (1 - 1/p).
Rational haar_measure_exact(Ball region, const PrimeBase& base);
Rational haar_measure_exact(Sphere region, const PrimeBase& base);
double haar_measure(Ball region, const PrimeBase& base);
double haar_measure(Sphere region, const PrimeBase& base);

/// An exact rational viewed inside Q_p: caches its valuation and serves
/// norm and digit expansion queries.
class PAdicScalar {
public:
    PAdicScalar(Rational value, const PrimeBase& base)
        : value_(std::move(value)), base_(base), valuation_(padic_hlp::valuation(value_, base)) {}

    const Rational& value() const { return value_; }
    const PrimeBase& base() const { return base_; }
    std::optional<long long> valuation() const { return valuation_; }
    double norm() const { return valuation_ ? std::pow(static_cast<double>(base_.value()),
                                                       -static_cast<double>(*valuation_))
                                            : 0.0; }
    Rational norm_exact() const {
        return valuation_ ? Rational::pow(base_.value(), -*valuation_) : Rational(0);
    }
    DigitExpansion expansion(std::size_t count) const {
        return digit_expansion(value_, base_, count);
    }

private:
    Rational value_;
    PrimeBase base_;
    std::optional<long long> valuation_;
};

}  // namespace padic_hlp
