#include "padic_hlp/padic.hpp"

#include <doctest.h>

#include <random>

using namespace padic_hlp;

namespace {

// independent oracle: exponent of p in an integer by trial division
long long factor_exponent(long long n, long long p) {
    long long count = 0;
    while (n != 0 && n % p == 0) {
        n /= p;
        ++count;
    }
    return count;
}

Rational random_rational(std::mt19937_64& rng, long long p) {
    std::uniform_int_distribution<long long> num(-1000000, 1000000);
    std::uniform_int_distribution<long long> den(1, 1000000);
    std::uniform_int_distribution<long long> shift(-6, 6);
    long long n = num(rng);
    if (n == 0) n = 1;
    Rational x(n, den(rng));
    return x * Rational::pow(p, shift(rng));
}

}  // namespace

TEST_SUITE("padic_core") {

TEST_CASE("prime base validates by trial division") {
    CHECK_NOTHROW(PrimeBase(2));
    CHECK_NOTHROW(PrimeBase(3));
    CHECK_NOTHROW(PrimeBase(97));
    CHECK_THROWS_AS(PrimeBase(1), std::invalid_argument);
    CHECK_THROWS_AS(PrimeBase(0), std::invalid_argument);
    CHECK_THROWS_AS(PrimeBase(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeBase(91), std::invalid_argument);  // 7*13
}

TEST_CASE("valuation") {
    CHECK(*valuation(Rational(3), PrimeBase(3)) == 1);
    CHECK(!valuation(Rational(0), PrimeBase(5)).has_value());
    CHECK(*valuation(Rational(12), PrimeBase(2)) == factor_exponent(12, 2));
    CHECK(*valuation(Rational(12), PrimeBase(2)) == 2);
    CHECK(*valuation(Rational(1, 2), PrimeBase(2)) == -1);
}

TEST_CASE("padic norm") {
    CHECK(padic_norm(Rational(3), PrimeBase(3)) == doctest::Approx(1.0 / 3.0));
    CHECK(padic_norm(Rational(1), PrimeBase(7)) == 1.0);
    CHECK(padic_norm(Rational(1, 2), PrimeBase(2)) == 2.0);
    CHECK(padic_norm(Rational(0), PrimeBase(5)) == 0.0);
    CHECK(padic_norm_exact(Rational(3), PrimeBase(3)) == Rational(1, 3));
}

TEST_CASE("digit expansion of 1/2 base 3") {
    PrimeBase base(3);
    Rational x(1, 2);
    DigitExpansion e = digit_expansion(x, base, 4);
    CHECK(e.gamma == 0);
    CHECK(e.digits == std::vector<int>{2, 1, 1, 1});
    // oracle: partial sums converge in the 3-adic norm
    for (std::size_t kk = 1; kk <= 4; ++kk) {
        Rational diff = x - expansion_partial_sum(e, base, kk);
        auto v = valuation(diff, base);
        CHECK((!v || *v >= e.gamma + static_cast<long long>(kk)));
    }
}

TEST_CASE("digit expansion of -1 base 2") {
    PrimeBase base(2);
    DigitExpansion e = digit_expansion(Rational(-1), base, 5);
    CHECK(e.gamma == 0);
    CHECK(e.digits == std::vector<int>{1, 1, 1, 1, 1});
    // oracle: s_k == -1 mod 2^k, i.e. (s_k + 1) / 2^k is an integer
    for (std::size_t kk = 1; kk <= 5; ++kk) {
        Rational q = (expansion_partial_sum(e, base, kk) + Rational(1)) /
                     Rational::pow(2, static_cast<long long>(kk));
        CHECK(q.is_integer());
    }
}

TEST_CASE("digit expansion of an exact power") {
    DigitExpansion e = digit_expansion(Rational(9), PrimeBase(3), 3);
    CHECK(e.gamma == 2);
    CHECK(e.digits == std::vector<int>{1, 0, 0});
}

TEST_CASE("digit expansion rejects zero and has a nonzero lead digit") {
    CHECK_THROWS_AS(digit_expansion(Rational(0), PrimeBase(3), 4), ZeroInputError);
    std::mt19937_64 rng(7);
    for (long long p : {2LL, 3LL, 5LL, 7LL}) {
        PrimeBase base(p);
        for (int i = 0; i < 20; ++i) {
            Rational x = random_rational(rng, p);
            DigitExpansion e = digit_expansion(x, base, 8);
            CHECK(e.digits.front() != 0);
            for (int d : e.digits) {
                CHECK(d >= 0);
                CHECK(d < p);
            }
        }
    }
}

TEST_CASE("haar measures") {
    CHECK(haar_measure(Ball{0}, PrimeBase(2)) == 1.0);
    CHECK(haar_measure_exact(Sphere{0}, PrimeBase(3)) == Rational(2, 3));
    CHECK(haar_measure_exact(Ball{-2}, PrimeBase(2)) == Rational(1, 4));
    CHECK(haar_measure_exact(Ball{3}, PrimeBase(5)) == Rational(125));
}

TEST_CASE("haar telescoping: ball minus trailing spheres") {
    // |B_gamma| - sum_{k=gamma-K..gamma} |S_k| = p^{gamma-K-1}, exactly
    for (long long p : {2LL, 3LL, 7LL}) {
        PrimeBase base(p);
        for (long long gamma = -3; gamma <= 3; ++gamma) {
            for (long long K = 0; K <= 8; ++K) {
                Rational left = haar_measure_exact(Ball{gamma}, base);
                for (long long kk = gamma - K; kk <= gamma; ++kk)
                    left -= haar_measure_exact(Sphere{kk}, base);
                CHECK(left == Rational::pow(p, gamma - K - 1));
            }
        }
    }
}

TEST_CASE("multiplicativity and ultrametric law on random rationals") {
    std::mt19937_64 rng(20240601);
    std::vector<long long> primes{2, 3, 5, 7, 11, 13, 31, 97};
    for (int i = 0; i < 1000; ++i) {
        long long p = primes[i % primes.size()];
        PrimeBase base(p);
        Rational x = random_rational(rng, p), y = random_rational(rng, p);

        CHECK(*valuation(x * y, base) == *valuation(x, base) + *valuation(y, base));

        Rational nx = padic_norm_exact(x, base), ny = padic_norm_exact(y, base);
        Rational nsum = padic_norm_exact(x + y, base);
        Rational mx = nx >= ny ? nx : ny;
        CHECK(nsum <= mx);
        if (nx != ny) CHECK(nsum == mx);
    }
}

TEST_CASE("padic scalar caches valuation and serves expansions") {
    PAdicScalar s(Rational(12), PrimeBase(2));
    CHECK(*s.valuation() == 2);
    CHECK(s.norm() == doctest::Approx(0.25));
    CHECK(s.norm_exact() == Rational(1, 4));
    CHECK(s.expansion(3).gamma == 2);
    PAdicScalar z(Rational(0), PrimeBase(2));
    CHECK(!z.valuation().has_value());
    CHECK(z.norm() == 0.0);
}

}  // TEST_SUITE
