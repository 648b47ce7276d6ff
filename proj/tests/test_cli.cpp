#include "padic_hlp/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <sstream>

using namespace padic_hlp;
using nlohmann::json;

namespace {

RunConfig canonical_config() {
    RunConfig c;
    c.p = 2;
    c.lambda = Scalar(Rational(1));
    c.mu = Scalar(Rational(0));
    c.nu = Scalar(Rational(0));
    c.q = ExtendedExponent(Scalar(Rational(2)));
    c.r = ExtendedExponent(Scalar(Rational(2)));
    c.alpha = Scalar(Rational(0));
    c.beta = Scalar(Rational(0));
    return c;
}

std::vector<std::string> csv_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) lines.push_back(line);
    return lines;
}

std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') quoted = !quoted;
        else if (ch == ',' && !quoted) {
            fields.push_back(cur);
            cur.clear();
        } else cur.push_back(ch);
    }
    fields.push_back(cur);
    return fields;
}

#ifdef CLI_BINARY_PATH
int run_cli(const std::string& args) {
    std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " >/dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}
#endif

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("run config JSON round trip keeps exactness") {
    RunConfig c = canonical_config();
    c.alpha = Scalar(Rational(-1, 2));
    c.r = ExtendedExponent::infinity();
    c.mu = Scalar(0.125);  // float stays float
    c.eps_schedule = {0.5, 0.25};
    c.window = 60;
    c.threads = 2;

    RunConfig back = run_config_from_json(run_config_to_json(c));
    CHECK(back.p == c.p);
    CHECK(back.alpha.is_exact());
    CHECK(back.alpha.exact() == Rational(-1, 2));
    CHECK(!back.mu.is_exact());
    CHECK(back.mu.value() == 0.125);
    CHECK(back.r.is_infinite());
    CHECK(back.q.scalar().exact() == Rational(2));
    CHECK(back.eps_schedule == c.eps_schedule);
    CHECK(back.window == 60);
    CHECK(back.threads == 2);
}

TEST_CASE("radial function JSON round trip") {
    PrimeBase base(3);
    auto f = RadialFunction::sampled(base, ValuationWindow(-3, 2),
                                     [](long long g) { return 0.25 * double(g) + 1.0; });
    RadialFunction back = radial_from_json(to_json(f));
    CHECK(back.base().value() == 3);
    CHECK(back.window() == f.window());
    for (long long g = -3; g <= 2; ++g) CHECK(back.at(g) == f.at(g));
    CHECK(to_json(f)["values"].size() == 6);
}

TEST_CASE("check exit codes follow the verdict") {
    RunConfig c = canonical_config();
    auto bounded = cmd_check(c);
    CHECK(bounded.exit_code == 0);
    json out = json::parse(bounded.text);
    CHECK(out["schema"] == "padic-hlp/1");
    CHECK(out["result"]["status"] == "bounded");
    CHECK(out["result"]["citation"] == "Theorem 4");
    // output echoes a config that re-parses to the input
    RunConfig echo = run_config_from_json(out["config"]);
    CHECK(echo.lambda.exact() == Rational(1));

    c.r = ExtendedExponent(Scalar(Rational(1)));
    CHECK(cmd_check(c).exit_code == 1);

    c = canonical_config();
    c.q = ExtendedExponent(Scalar(0.5));
    CHECK(cmd_check(c).exit_code == 2);
}

TEST_CASE("norm command itemizes the formula") {
    RunConfig c = canonical_config();
    auto res = cmd_norm(c);
    CHECK(res.exit_code == 0);
    json out = json::parse(res.text);
    CHECK(out["result"]["norm"].get<double>() == doctest::Approx(2.914213562).epsilon(1e-9));
    CHECK(out["result"]["formula"]["prefactor"].get<double>() == doctest::Approx(0.5));
    double term_a = out["result"]["formula"]["term_a"].get<double>();
    double term_b = out["result"]["formula"]["term_b"].get<double>();
    CHECK(0.5 * (1.0 + term_a + term_b) ==
          doctest::Approx(out["result"]["norm"].get<double>()));

    // sup case
    c.lambda = Scalar(Rational(2));
    c.mu = Scalar(Rational(1));
    c.q = ExtendedExponent::infinity();
    c.r = ExtendedExponent::infinity();
    json sup = json::parse(cmd_norm(c).text);
    CHECK(sup["result"]["norm"].get<double>() == doctest::Approx(1.5));

    // bounded q < r: no closed form, exit 3
    RunConfig off = canonical_config();
    off.lambda = Scalar(Rational(3, 2));
    off.nu = Scalar(Rational(1, 2));
    off.alpha = Scalar(Rational(-1, 2));
    off.q = ExtendedExponent(Scalar(Rational(1)));
    off.r = ExtendedExponent(Scalar(Rational(2)));
    CHECK(cmd_norm(off).exit_code == 3);

    // unbounded input: nonzero exit with an explanation
    RunConfig unb = canonical_config();
    unb.r = ExtendedExponent(Scalar(Rational(1)));
    auto bad = cmd_norm(unb);
    CHECK(bad.exit_code == 1);
    CHECK(json::parse(bad.text)["result"]["norm"].is_null());
}

TEST_CASE("estimate command emits a full report") {
    RunConfig c = canonical_config();
    c.window = 30;
    c.eps_schedule = {0.5, 0.25, 0.125};
    auto res = cmd_estimate(c);
    CHECK(res.exit_code == 0);
    json out = json::parse(res.text);
    CHECK(out["result"]["closed_form"].get<double>() == doctest::Approx(2.914213562).epsilon(1e-9));
    CHECK(out["result"]["extremal_lowers"].size() == 3);
    CHECK(out["result"]["matrix_lower"]["converged"].get<bool>());
}

TEST_CASE("beta sweep: window condition flips exactly at the stated boundaries") {
    RunConfig c = canonical_config();
    c.window = 12;
    SweepSpec spec{"beta", Scalar(Rational(-1)), Scalar(Rational(1)), 9};
    auto res = cmd_sweep(c, spec);
    auto lines = csv_lines(res.text);
    REQUIRE(lines.size() == 10);  // header + 9 rows

    auto header = csv_fields(lines[0]);
    auto col = [&](const std::string& name) {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        REQUIRE(false);
        return std::size_t(0);
    };
    const std::size_t value_col = col("value"), status_col = col("status"),
                      balance_col = col("balance_ok"), window_col = col("window_ok");

    // grid: beta = -1, -3/4, ..., 1; window condition -q nu < beta+1 < q(lambda-nu)
    // reads 0 < beta+1 < 2, so it fails exactly at beta = -1 and beta = 1
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto f = csv_fields(lines[i]);
        double beta = std::stod(f[value_col]);
        bool boundary = i == 1 || i == lines.size() - 1;
        CHECK(f[window_col] == (boundary ? "0" : "1"));
        CHECK(f[balance_col] == (beta == 0.0 ? "1" : "0"));
        CHECK(f[status_col] == (beta == 0.0 ? "bounded" : "unbounded"));
    }
}

TEST_CASE("eps sweep ratios are non-decreasing") {
    RunConfig c = canonical_config();
    c.window = 12;
    SweepSpec spec{"eps", Scalar(Rational(1, 64)), Scalar(Rational(1, 2)), 6};
    auto res = cmd_sweep(c, spec);
    auto lines = csv_lines(res.text);
    REQUIRE(lines.size() == 7);
    auto header = csv_fields(lines[0]);
    std::size_t ext = 0, val = 0;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == "extremal_max") ext = i;
        if (header[i] == "value") val = i;
    }
    // grid ascends in eps, so ratios must descend along the rows
    double prev_ratio = 1e9;
    double prev_eps = 0.0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        auto f = csv_fields(lines[i]);
        double eps = std::stod(f[val]);
        double ratio = std::stod(f[ext]);
        CHECK(eps > prev_eps);
        CHECK(ratio <= prev_ratio + 1e-6);
        prev_eps = eps;
        prev_ratio = ratio;
    }
}

TEST_CASE("sweep argument validation") {
    RunConfig c = canonical_config();
    CHECK_THROWS_AS(cmd_sweep(c, SweepSpec{"beta", Scalar(0), Scalar(1), 0}), UsageError);
    CHECK_THROWS_AS(cmd_sweep(c, SweepSpec{"beta", Scalar(1), Scalar(0), 5}), UsageError);
    CHECK_THROWS_AS(cmd_sweep(c, SweepSpec{"beta", Scalar(1), Scalar(1), 5}), UsageError);
    CHECK_THROWS_AS(cmd_sweep(c, SweepSpec{"nope", Scalar(0), Scalar(1), 5}), UsageError);
}

TEST_CASE("digits and norm-of text output") {
    auto d = cmd_digits("-1", 2, 5);
    CHECK(d.exit_code == 0);
    CHECK(d.text == "x = -1, p = 2, valuation = 0, digits = 1 1 1 1 1\n");
    auto n = cmd_norm_of("1/2", 2);
    CHECK(n.text == "|1/2|_2 = 2 (valuation -1)\n");
    CHECK_THROWS_AS(cmd_digits("abc", 2, 5), UsageError);
    CHECK_THROWS_AS(cmd_digits("1/2", 2, 0), UsageError);
}

#ifdef CLI_BINARY_PATH
TEST_CASE("binary exit codes") {
    CHECK(run_cli("check --p 2 --lambda 1 --mu 0 --nu 0 --q 2 --r 2 --alpha 0 --beta 0") == 0);
    CHECK(run_cli("check --p 2 --lambda 1 --q 2 --r 1") == 1);
    CHECK(run_cli("check --p 2 --lambda 1 --q 0.5 --r 2") == 2);
    CHECK(run_cli("check --p 2 --bogus-flag 1") == 64);
    CHECK(run_cli("norm --p 2 --lambda 3/2 --nu 1/2 --alpha -1/2 --q 1 --r 2") == 3);
    CHECK(run_cli("digits 1/2 3 4") == 0);
    CHECK(run_cli("sweep --vary beta --from 0 --to 1 --steps 0") == 64);
}
#endif

}  // TEST_SUITE
