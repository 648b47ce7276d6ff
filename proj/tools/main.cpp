// padic-hlp: boundedness checks, sharp norms and empirical norm estimates
// for the p-adic Hardy-Littlewood-Polya family of integral operators.

#include "padic_hlp/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace padic_hlp;

struct RawParams {
    std::string lambda = "1", mu = "0", nu = "0", q = "2", r = "2", alpha = "0", beta = "0";
};

void add_param_flags(CLI::App* cmd, RunConfig& config, RawParams& raw) {
    cmd->add_option("--p", config.p, "prime base")->capture_default_str();
    cmd->add_option("--lambda", raw.lambda, "kernel exponent lambda")->capture_default_str();
    cmd->add_option("--mu", raw.mu, "kernel exponent mu")->capture_default_str();
    cmd->add_option("--nu", raw.nu, "kernel exponent nu")->capture_default_str();
    cmd->add_option("--q", raw.q, "source exponent (rational or 'inf')")->capture_default_str();
    cmd->add_option("--r", raw.r, "target exponent (rational or 'inf')")->capture_default_str();
    cmd->add_option("--alpha", raw.alpha, "source weight exponent")->capture_default_str();
    cmd->add_option("--beta", raw.beta, "target weight exponent")->capture_default_str();
    cmd->add_option("--out", config.out_path, "write output to this path instead of stdout");
}

void resolve_params(const RawParams& raw, RunConfig& config) {
    auto scalar = [](const std::string& text, const char* name) {
        auto s = Scalar::parse(text);
        if (!s) throw UsageError(std::string("cannot parse --") + name + " '" + text + "'");
        return *s;
    };
    auto exponent = [](const std::string& text, const char* name) {
        auto e = ExtendedExponent::parse(text);
        if (!e) throw UsageError(std::string("cannot parse --") + name + " '" + text + "'");
        return *e;
    };
    config.lambda = scalar(raw.lambda, "lambda");
    config.mu = scalar(raw.mu, "mu");
    config.nu = scalar(raw.nu, "nu");
    config.alpha = scalar(raw.alpha, "alpha");
    config.beta = scalar(raw.beta, "beta");
    config.q = exponent(raw.q, "q");
    config.r = exponent(raw.r, "r");
}

int emit(const CommandResult& result, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << result.text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot open " << out_path << " for writing\n";
            return 74;
        }
        out << result.text;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic Hardy-Littlewood-Polya operator toolkit"};
    app.require_subcommand(1);

    RunConfig config;
    RawParams raw;
    SweepSpec sweep;
    std::string sweep_from = "0", sweep_to = "1";
    std::string digits_x;
    long long digits_p = 2;
    int digits_n = 10;

    auto* check = app.add_subcommand("check", "decide L^q_alpha -> L^r_beta boundedness");
    add_param_flags(check, config, raw);

    auto* norm = app.add_subcommand("norm", "closed-form sharp norm (q = r or sup case)");
    add_param_flags(norm, config, raw);

    auto* estimate = app.add_subcommand(
        "estimate", "closed form, Schur bound, matrix and extremal lower bounds");
    add_param_flags(estimate, config, raw);
    estimate->add_option("--window", config.window, "matrix window half-width")
        ->capture_default_str();
    estimate->add_option("--tol", config.tol, "iteration tolerance")->capture_default_str();
    estimate->add_option("--eps", config.eps_schedule,
                         "explicit extremal eps schedule (decreasing)");
    estimate->add_option("--threads", config.threads, "worker threads (0 = auto)");

    auto* sweep_cmd = app.add_subcommand(
        "sweep",
        "vary one parameter, emit CSV rows; fixed columns: index,parameter,value,p,lambda,mu,"
        "nu,q,r,alpha,beta,status,citation,tau,balance_ok,window_ok,closed_form,schur_bound,"
        "matrix_lower,extremal_max");
    add_param_flags(sweep_cmd, config, raw);
    sweep_cmd->add_option("--window", config.window, "matrix window half-width")
        ->capture_default_str();
    sweep_cmd->add_option("--tol", config.tol, "iteration tolerance")->capture_default_str();
    sweep_cmd->add_option("--threads", config.threads, "worker threads (0 = auto)");
    sweep_cmd->add_option("--vary", sweep.parameter, "parameter to vary")->required();
    sweep_cmd->add_option("--from", sweep_from, "range start")->required();
    sweep_cmd->add_option("--to", sweep_to, "range end")->required();
    sweep_cmd->add_option("--steps", sweep.steps, "grid points")->required();

    auto* digits = app.add_subcommand("digits", "canonical digit expansion of a rational");
    digits->add_option("x", digits_x, "rational, e.g. -1 or 3/7")->required();
    digits->add_option("p", digits_p, "prime base")->required();
    digits->add_option("n", digits_n, "number of digits")->capture_default_str();
    digits->add_option("--out", config.out_path);

    auto* norm_of = app.add_subcommand("norm-of", "p-adic norm of a rational");
    norm_of->add_option("x", digits_x, "rational")->required();
    norm_of->add_option("p", digits_p, "prime base")->required();
    norm_of->add_option("--out", config.out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 64;
    }

    try {
        if (*digits) return emit(cmd_digits(digits_x, digits_p, digits_n), config.out_path);
        if (*norm_of) return emit(cmd_norm_of(digits_x, digits_p), config.out_path);

        resolve_params(raw, config);
        if (*check) return emit(cmd_check(config), config.out_path);
        if (*norm) return emit(cmd_norm(config), config.out_path);
        if (*estimate) return emit(cmd_estimate(config), config.out_path);
        if (*sweep_cmd) {
            auto from = Scalar::parse(sweep_from), to = Scalar::parse(sweep_to);
            if (!from || !to) throw UsageError("sweep: cannot parse --from/--to");
            sweep.from = *from;
            sweep.to = *to;
            return emit(cmd_sweep(config, sweep), config.out_path);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 64;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 70;
    }
    return 0;
}
