#pragma once

#include "padic_hlp/rational.hpp"

#include <cmath>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

namespace padic_hlp {

/// Real parameter that remembers an exact rational origin when it has one.
/// Arithmetic stays exact while every operand is exact and silently drops
/// to double otherwise. The boundedness table relies on this: balance and
/// boundary conditions are decided exactly for rational inputs and within
/// a tolerance for float inputs.
class Scalar {
public:
    Scalar() : Scalar(Rational(0)) {}
    Scalar(int v) : Scalar(Rational(v)) {}
    Scalar(long long v) : Scalar(Rational(v)) {}
    Scalar(Rational v) : approx_(v.to_double()), exact_(std::move(v)) {}
    Scalar(double v) : approx_(v) {}

    bool is_exact() const { return exact_.has_value(); }
    double value() const { return approx_; }
    const Rational& exact() const {
        if (!exact_) throw std::logic_error("Scalar: no exact value");
        return *exact_;
    }

    /// Exact when the text is an integer, "a/b" or a plain decimal;
    /// falls back to an inexact double for scientific notation.
    static std::optional<Scalar> parse(const std::string& text) {
        if (auto r = Rational::parse(text)) return Scalar(*r);
        char* end = nullptr;
        double v = std::strtod(text.c_str(), &end);
        if (end && end != text.c_str() && *end == '\0' && std::isfinite(v)) return Scalar(v);
        return std::nullopt;
    }

    std::string to_string() const {
        if (exact_) return exact_->to_string();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", approx_);
        return buf;
    }

    Scalar operator-() const {
        return exact_ ? Scalar(-*exact_) : Scalar(-approx_);
    }
    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return Scalar(*a.exact_ + *b.exact_);
        return Scalar(a.approx_ + b.approx_);
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) return Scalar(*a.exact_ * *b.exact_);
        return Scalar(a.approx_ * b.approx_);
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        if (a.exact_ && b.exact_) {
            if (b.exact_->is_zero()) throw std::domain_error("Scalar: division by zero");
            return Scalar(*a.exact_ / *b.exact_);
        }
        return Scalar(a.approx_ / b.approx_);
    }

    /// Sign with exactness awareness: exact values compare against zero
    /// exactly, floats within tol.
    int sign(double tol = 0.0) const {
        if (exact_) return exact_->sign();
        if (std::abs(approx_) <= tol) return 0;
        return approx_ < 0 ? -1 : 1;
    }

private:
    double approx_;
    std::optional<Rational> exact_;
};

/// An exponent in [1, infinity]. Finite values keep their Scalar (and so
/// their exactness); conjugation follows 1/q + 1/q' = 1 with 1 <-> inf.
class ExtendedExponent {
public:
    ExtendedExponent(Scalar v) : value_(std::move(v)) {}
    ExtendedExponent(double v) : value_(Scalar(v)) {}
    ExtendedExponent(int v) : value_(Scalar(v)) {}
    static ExtendedExponent infinity() {
        ExtendedExponent e{Scalar(0)};
        e.infinite_ = true;
        return e;
    }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }
    double value() const {
        if (infinite_) throw std::logic_error("ExtendedExponent: infinite");
        return value_.value();
    }
    const Scalar& scalar() const {
        if (infinite_) throw std::logic_error("ExtendedExponent: infinite");
        return value_;
    }

    /// 1/q as a Scalar, with the convention 1/inf = 0 (exact).
    Scalar reciprocal_or_zero() const {
        if (infinite_) return Scalar(Rational(0));
        return Scalar(1) / value_;
    }

    ExtendedExponent conjugate() const {
        if (infinite_) return ExtendedExponent(Scalar(Rational(1)));
        if (value_.is_exact() && value_.exact() == Rational(1)) return infinity();
        if (!value_.is_exact() && value_.value() == 1.0) return infinity();
        return ExtendedExponent(value_ / (value_ - Scalar(1)));
    }

    std::string to_string() const { return infinite_ ? "inf" : value_.to_string(); }

    /// Accepts "inf"/"infinity" (any case) or anything Scalar::parse takes.
    static std::optional<ExtendedExponent> parse(std::string text) {
        for (auto& c : text) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        if (text == "inf" || text == "infinity" || text == "oo") return infinity();
        if (auto s = Scalar::parse(text)) return ExtendedExponent(*s);
        return std::nullopt;
    }

private:
    bool infinite_ = false;
    Scalar value_;
};

}  // namespace padic_hlp
