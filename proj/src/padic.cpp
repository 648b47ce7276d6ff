#include "padic_hlp/padic.hpp"

#include <cmath>

namespace padic_hlp {

namespace {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Number of factors of p in n (n != 0).
long long factor_count(BigInt n, const BigInt& p) {
    long long count = 0;
    while (n % p == 0) {
        n /= p;
        ++count;
    }
    return count;
}

long long mod_inverse(long long a, long long p) {
    // extended Euclid; p prime and p does not divide a
    long long t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
    while (new_r != 0) {
        long long q = r / new_r;
        long long tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return ((t % p) + p) % p;
}

}  // namespace

PrimeBase::PrimeBase(long long p) : p_(p) {
    if (!is_prime(p)) throw std::invalid_argument("PrimeBase: " + std::to_string(p) + " is not prime");
}

std::optional<long long> valuation(const Rational& x, const PrimeBase& base) {
    if (x.is_zero()) return std::nullopt;
    BigInt p(base.value());
    return factor_count(x.numerator(), p) - factor_count(x.denominator(), p);
}

double padic_norm(const Rational& x, const PrimeBase& base) {
    auto v = valuation(x, base);
    if (!v) return 0.0;
    return std::pow(static_cast<double>(base.value()), -static_cast<double>(*v));
}

Rational padic_norm_exact(const Rational& x, const PrimeBase& base) {
    auto v = valuation(x, base);
    if (!v) return Rational(0);
    return Rational::pow(base.value(), -*v);
}

DigitExpansion digit_expansion(const Rational& x, const PrimeBase& base, std::size_t count) {
    if (x.is_zero()) throw ZeroInputError();
    if (count == 0) throw std::invalid_argument("digit_expansion: need at least one digit");

    const long long p = base.value();
    DigitExpansion out;
    out.gamma = *valuation(x, base);
    out.digits.reserve(count);

    // unit part u = x / p^gamma has numerator and denominator coprime to p;
    // each digit is u mod p computed through the inverse of the denominator.
    Rational u = x / Rational::pow(p, out.gamma);
    for (std::size_t j = 0; j < count; ++j) {
        BigInt num = u.numerator() % p;
        BigInt den = u.denominator() % p;
        long long n = num.convert_to<long long>();
        long long d = den.convert_to<long long>();
        long long digit = ((n * mod_inverse(d, p)) % p + p) % p;
        out.digits.push_back(static_cast<int>(digit));
        u = (u - Rational(digit)) / Rational(p);
    }
    return out;
}

Rational expansion_partial_sum(const DigitExpansion& e, const PrimeBase& base, std::size_t k) {
    Rational sum(0);
    for (std::size_t j = 0; j < k && j < e.digits.size(); ++j)
        sum += Rational(e.digits[j]) * Rational::pow(base.value(), static_cast<long long>(j));
    return sum * Rational::pow(base.value(), e.gamma);
}

Rational haar_measure_exact(Ball region, const PrimeBase& base) {
    return Rational::pow(base.value(), region.gamma);
}

Rational haar_measure_exact(Sphere region, const PrimeBase& base) {
    return Rational::pow(base.value(), region.gamma - 1) * Rational(base.value() - 1);
}

double haar_measure(Ball region, const PrimeBase& base) {
    return haar_measure_exact(region, base).to_double();
}

double haar_measure(Sphere region, const PrimeBase& base) {
    return haar_measure_exact(region, base).to_double();
}

}  // namespace padic_hlp
