#pragma once

#include "padic_hlp/serialization.hpp"

#include <string>
#include <vector>

namespace padic_hlp {

struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// One fully-specified run. Parsed parameters echo back losslessly in the
/// JSON output header ("config"); rationals given as "a/b" stay exact all
/// the way through the balance checks.
struct RunConfig {
    long long p = 2;
    Scalar lambda{Rational(1)};
    Scalar mu{Rational(0)};
    Scalar nu{Rational(0)};
    ExtendedExponent q{Scalar(Rational(2))};
    ExtendedExponent r{Scalar(Rational(2))};
    Scalar alpha{Rational(0)};
    Scalar beta{Rational(0)};
    long long window = 40;          // matrix window half-width
    double tol = 1e-8;
    std::vector<double> eps_schedule;  // empty -> default 2^-1..2^-12
    std::string format = "json";       // json | csv where applicable
    std::string out_path;               // empty -> stdout
    int threads = 0;                    // 0 = auto; PADIC_HLP_THREADS caps

    KernelParams kernel() const { return KernelParams{lambda, mu, nu}; }
    SpaceParams space() const { return SpaceParams{q, r, alpha, beta}; }
    PrimeBase base() const { return PrimeBase(p); }
};

nlohmann::json run_config_to_json(const RunConfig& c);
RunConfig run_config_from_json(const nlohmann::json& j);

/// Exit codes are a function of the result only: check maps the verdict
/// to 0 (bounded) / 1 (unbounded) / 2 (out of scope); norm exits 3 when
/// no closed form exists; malformed usage is 64.
struct CommandResult {
    int exit_code;
    std::string text;
};

CommandResult cmd_check(const RunConfig& c);
CommandResult cmd_norm(const RunConfig& c);
CommandResult cmd_estimate(const RunConfig& c);

struct SweepSpec {
    std::string parameter;  // lambda|mu|nu|alpha|beta|q|r|eps
    Scalar from{Rational(0)};
    Scalar to{Rational(0)};
    long long steps = 0;
};
CommandResult cmd_sweep(const RunConfig& c, const SweepSpec& spec);

CommandResult cmd_digits(const std::string& x, long long p, int n);
CommandResult cmd_norm_of(const std::string& x, long long p);

}  // namespace padic_hlp
