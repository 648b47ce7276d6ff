#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace padic_hlp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational number. Always gcd-reduced with positive denominator;
/// zero is stored as 0/1. Backed by arbitrary-precision integers so that
/// valuations, digit expansions and balance residuals never round.
class Rational {
public:
    Rational() : value_(0) {}
    Rational(long long n) : value_(n) {}
    Rational(const BigInt& n) : value_(n) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        value_ = Q(num) / Q(den);
    }
    Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }

    bool is_zero() const { return value_ == 0; }
    bool is_integer() const { return denominator() == 1; }
    int sign() const { return value_ < 0 ? -1 : (value_ > 0 ? 1 : 0); }

    double to_double() const { return value_.convert_to<double>(); }

    /// "a" for integers, "a/b" otherwise.
    std::string to_string() const {
        std::string s = numerator().str();
        if (!is_integer()) s += "/" + denominator().str();
        return s;
    }

    /// Accepts "a", "a/b" and plain decimals like "-0.25". Returns nullopt
    /// on anything else (including scientific notation).
    static std::optional<Rational> parse(std::string_view text);

    Rational operator-() const { return Rational(Q(-value_)); }
    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.value_ >= b.value_; }

    /// p^e for integer e of either sign.
    static Rational pow(long long base, long long exponent) {
        BigInt b = boost::multiprecision::pow(BigInt(base),
                                              static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
        return exponent < 0 ? Rational(BigInt(1), b) : Rational(b);
    }

private:
    using Q = boost::multiprecision::cpp_rational;
    explicit Rational(Q v) : value_(std::move(v)) {}
    Q value_;
};

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

inline std::optional<Rational> Rational::parse(std::string_view text) {
    while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    bool negative = false;
    if (text.front() == '+' || text.front() == '-') {
        negative = text.front() == '-';
        text.remove_prefix(1);
        if (text.empty()) return std::nullopt;
    }

    auto digits_only = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };

    auto slash = text.find('/');
    auto dot = text.find('.');
    Rational out;
    if (slash != std::string_view::npos) {
        auto num = text.substr(0, slash), den = text.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den)) return std::nullopt;
        BigInt d{std::string(den)};
        if (d == 0) return std::nullopt;
        out = Rational(BigInt(std::string(num)), d);
    } else if (dot != std::string_view::npos) {
        auto whole = text.substr(0, dot), frac = text.substr(dot + 1);
        if (whole.empty() && frac.empty()) return std::nullopt;
        if ((!whole.empty() && !digits_only(whole)) || (!frac.empty() && !digits_only(frac)))
            return std::nullopt;
        BigInt w = whole.empty() ? BigInt(0) : BigInt(std::string(whole));
        BigInt f = frac.empty() ? BigInt(0) : BigInt(std::string(frac));
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        out = Rational(w * scale + f, scale);
    } else {
        if (!digits_only(text)) return std::nullopt;
        out = Rational(BigInt(std::string(text)));
    }
    return negative ? -out : out;
}

}  // namespace padic_hlp
