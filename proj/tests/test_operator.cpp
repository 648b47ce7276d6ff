#include "padic_hlp/hlp_operator.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace padic_hlp;

namespace {

SpaceParams qr_space(double q, double r, double alpha, double beta) {
    return SpaceParams{ExtendedExponent(Scalar(q)), ExtendedExponent(Scalar(r)), Scalar(alpha),
                       Scalar(beta)};
}

// independent grid search for the kernel sup, same grid contract
double sup_oracle(double a, double b, double lambda, long long p, long long radius) {
    double best = 0.0;
    KernelParams k{Scalar(lambda), Scalar(a), Scalar(-b)};
    for (long long i = -radius; i <= radius; ++i)
        for (long long j = -radius; j <= radius; ++j)
            best = std::max(best, kernel_eval(std::pow(double(p), double(i)),
                                              std::pow(double(p), double(j)), k));
    return best;
}

}  // namespace

TEST_SUITE("operator") {

TEST_CASE("kernel evaluation") {
    CHECK(kernel_eval(1, 1, KernelParams{Scalar(1), Scalar(0), Scalar(0)}) == doctest::Approx(1.0));
    CHECK(kernel_eval(2, 4, KernelParams{Scalar(1), Scalar(0), Scalar(0)}) ==
          doctest::Approx(0.25));
    CHECK(kernel_eval(0.5, 0.5, KernelParams{Scalar(2), Scalar(1), Scalar(0)}) ==
          doctest::Approx(2.0));
    CHECK_THROWS_AS(kernel_eval(0.0, 1.0, KernelParams{Scalar(1), Scalar(0), Scalar(0)}),
                    std::invalid_argument);
}

TEST_CASE("apply to a single sphere matches the hand sum") {
    PrimeBase base(2);
    auto f = RadialFunction::sampled(base, ValuationWindow(0, 0), [](long long) { return 1.0; });
    KernelParams k{Scalar(1), Scalar(0), Scalar(0)};
    HlpImage img = apply_hlp(k, f, ValuationWindow(-3, 3));
    CHECK(!img.overflow);
    // (Hf)(p^m) = (1-1/p) k(1, p^m) = 0.5 min(1, 2^-m)
    for (long long m = -3; m <= 3; ++m) {
        double expected = 0.5 * std::min(1.0, std::pow(2.0, -double(m)));
        CHECK(img.value.at(m) == doctest::Approx(expected).epsilon(1e-14));
    }
    CHECK(img.value.at(0) == doctest::Approx(0.5));
    CHECK(img.value.at(1) == doctest::Approx(0.25));
}

TEST_CASE("apply to zero is zero") {
    PrimeBase base(3);
    auto img = apply_hlp(KernelParams{Scalar(1.5), Scalar(0.5), Scalar(-0.25)},
                         RadialFunction::zero(base, ValuationWindow(-4, 4)),
                         ValuationWindow(-6, 6));
    CHECK(!img.overflow);
    for (long long m = -6; m <= 6; ++m) CHECK(img.value.at(m) == 0.0);
}

TEST_CASE("shifting the input scales the shifted output by p^{s(mu+nu+1-lambda)}") {
    PrimeBase base(2);
    KernelParams k{Scalar(1.25), Scalar(0.5), Scalar(-0.25)};
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> coeff(0.0, 2.0);
    ValuationWindow in(-4, 4);
    auto f = RadialFunction::sampled(base, in, [&](long long) { return coeff(rng); });
    const long long shift = 2;
    auto g = RadialFunction::sampled(base, ValuationWindow(-4 + shift, 4 + shift),
                                     [&](long long gamma) { return f.at(gamma - shift); });
    auto hf = apply_hlp(k, f, ValuationWindow(-8, 8));
    auto hg = apply_hlp(k, g, ValuationWindow(-8 + shift, 8 + shift));
    double factor = std::pow(2.0, double(shift) * (0.5 - 0.25 + 1.0 - 1.25));
    for (long long m = -8; m <= 8; ++m)
        CHECK(hg.value.at(m + shift) ==
              doctest::Approx(factor * hf.value.at(m)).epsilon(1e-12));
}

TEST_CASE("grossly divergent parameters raise the overflow flag") {
    PrimeBase base(2);
    // exponent ~ +lambda*|gamma| with lambda large: terms overflow doubles
    KernelParams k{Scalar(-800.0), Scalar(0.0), Scalar(0.0)};
    auto f = RadialFunction::sampled(base, ValuationWindow(0, 4), [](long long) { return 1.0; });
    HlpImage img = apply_hlp(k, f, ValuationWindow(0, 4));
    CHECK(img.overflow);
}

TEST_CASE("balanced matrix is Toeplitz with the expected symbol") {
    PrimeBase base(2);
    // q = r = 2, lambda = mu+nu+1+(beta-alpha)/q exactly (rational data)
    KernelParams k{Scalar(Rational(3, 2)), Scalar(Rational(1, 2)), Scalar(Rational(0))};
    SpaceParams s{ExtendedExponent(Scalar(Rational(2))), ExtendedExponent(Scalar(Rational(2))),
                  Scalar(Rational(0)), Scalar(Rational(0))};
    // A1 = mu+1-(alpha+1)/q = 1, B1 = nu+(beta+1)/q = 1/2, A1+B1 = lambda
    CoordinateMatrix M = build_matrix(k, s, base, ValuationWindow(-6, 6));
    const double c = 0.5;
    for (std::size_t i = 0; i < M.num_rows(); ++i)
        for (std::size_t j = 0; j < M.num_cols(); ++j) {
            long long m = -6 + static_cast<long long>(i), g = -6 + static_cast<long long>(j);
            double expected = g <= m ? c * std::pow(2.0, -1.0 * double(m - g))
                                     : c * std::pow(2.0, -0.5 * double(g - m));
            CHECK(M.at(i, j) == doctest::Approx(expected).epsilon(1e-12));
            if (i + 1 < M.num_rows() && j + 1 < M.num_cols())
                CHECK(M.at(i + 1, j + 1) == doctest::Approx(M.at(i, j)).epsilon(1e-12));
        }
}

TEST_CASE("interior row sums reproduce the q = r constant") {
    PrimeBase base(2);
    KernelParams k{Scalar(Rational(1)), Scalar(Rational(0)), Scalar(Rational(0))};
    SpaceParams s = qr_space(2, 2, 0, 0);
    CoordinateMatrix M = build_matrix(k, s, base, ValuationWindow(-40, 40));
    const double constant = 0.5 * (1.0 + 2.0 / (std::sqrt(2.0) - 1.0));
    std::size_t mid = M.num_rows() / 2;
    double sum = 0.0;
    for (std::size_t j = 0; j < M.num_cols(); ++j) sum += M.at(mid, j);
    CHECK(sum == doctest::Approx(constant).epsilon(1e-5));  // tails ~ p^{-20}
}

TEST_CASE("zero-width window gives the single weighted kernel entry") {
    PrimeBase base(3);
    KernelParams k{Scalar(1.0), Scalar(0.5), Scalar(0.25)};
    SpaceParams s = qr_space(2, 2, 0.3, 0.3);
    CoordinateMatrix M = build_matrix(k, s, base, ValuationWindow(0, 0));
    CHECK(M.num_rows() == 1);
    CHECK(M.at(0, 0) == doctest::Approx((1.0 - 1.0 / 3.0) * kernel_eval(1, 1, k)));
}

TEST_CASE("matrix entries are nonnegative; apply is monotone") {
    PrimeBase base(2);
    KernelParams k{Scalar(0.75), Scalar(-0.25), Scalar(0.5)};
    SpaceParams s = qr_space(1.5, 2.5, -0.2, 0.4);
    CoordinateMatrix M = build_matrix(k, s, base, ValuationWindow(-10, 10));
    for (std::size_t i = 0; i < M.num_rows(); ++i)
        for (std::size_t j = 0; j < M.num_cols(); ++j) CHECK(M.at(i, j) >= 0.0);

    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> coeff(0.0, 1.0);
    ValuationWindow w(-5, 5);
    auto f = RadialFunction::sampled(base, w, [&](long long) { return coeff(rng); });
    auto g = RadialFunction::sampled(base, w, [&](long long gamma) { return f.at(gamma) + coeff(rng); });
    auto hf = apply_hlp(k, f, w).value;
    auto hg = apply_hlp(k, g, w).value;
    for (long long m = -5; m <= 5; ++m) CHECK(hf.at(m) <= hg.at(m) + 1e-15);
}

TEST_CASE("adjoint parameters") {
    KernelParams k1{Scalar(1), Scalar(0), Scalar(0)};
    KernelParams a1 = adjoint_params(k1, Scalar(0));
    CHECK(a1.lambda.value() == 1.0);
    CHECK(a1.mu.value() == 0.0);
    CHECK(a1.nu.value() == 0.0);

    KernelParams k2{Scalar(2), Scalar(1), Scalar(0)};
    KernelParams a2 = adjoint_params(k2, Scalar(1));
    CHECK(a2.lambda.value() == 2.0);
    CHECK(a2.mu.value() == 0.0);  // nu
    CHECK(a2.nu.value() == 0.0);  // mu - alpha
}

TEST_CASE("adjoint duality under the weighted pairing") {
    // <Hf, g> = int Hf(y) g(y) dy equals <f, H*g>_alpha = int f H*g |x|^alpha dx
    PrimeBase base(2);
    const double alpha = 0.5;
    KernelParams k{Scalar(1.5), Scalar(0.75), Scalar(-0.25)};
    KernelParams adj = adjoint_params(k, Scalar(alpha));
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> coeff(0.0, 1.0);
    ValuationWindow w(-6, 6);
    const double lnp = std::log(2.0), c = 0.5;
    for (int trial = 0; trial < 10; ++trial) {
        auto f = RadialFunction::sampled(base, w, [&](long long) { return coeff(rng); });
        auto g = RadialFunction::sampled(base, w, [&](long long) { return coeff(rng); });
        auto hf = apply_hlp(k, f, w).value;
        auto hg = apply_hlp(adj, g, w).value;
        double lhs = 0.0, rhs = 0.0;
        for (long long m = -6; m <= 6; ++m) {
            lhs += c * std::exp(double(m) * lnp) * hf.at(m) * g.at(m);
            rhs += c * std::exp(double(m) * (alpha + 1.0) * lnp) * f.at(m) * hg.at(m);
        }
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("kernel sup bound") {
    PrimeBase base(2);
    auto s1 = kernel_sup_bound(1.0, -1.0, 2.0, base);
    CHECK(s1.bounded);
    CHECK(s1.value == doctest::Approx(1.0));
    CHECK(s1.value == doctest::Approx(sup_oracle(1.0, -1.0, 2.0, 2, 20)));

    auto s2 = kernel_sup_bound(0.0, 0.0, 0.0, base);
    CHECK(s2.bounded);
    CHECK(s2.value == doctest::Approx(1.0));

    auto s3 = kernel_sup_bound(1.0, 0.0, 1.0, base);
    CHECK(s3.bounded);
    CHECK(s3.value == doctest::Approx(sup_oracle(1.0, 0.0, 1.0, 2, 20)));

    // lemma hypotheses violated: no claim
    CHECK(!kernel_sup_bound(1.0, -1.0, 1.5, base).bounded);  // lambda != a-b
    CHECK(!kernel_sup_bound(-0.5, -1.0, 0.5, base).bounded);  // a < 0
    CHECK(!kernel_sup_bound(1.0, 0.5, 0.5, base).bounded);    // b > 0
}

}  // TEST_SUITE
