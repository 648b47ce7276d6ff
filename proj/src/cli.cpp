#include "padic_hlp/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace padic_hlp {

using nlohmann::json;

namespace {

constexpr const char* kSchema = "padic-hlp/1";

json envelope(const char* command, const RunConfig& c, json result) {
    return json{{"schema", kSchema},
                {"command", command},
                {"config", run_config_to_json(c)},
                {"result", std::move(result)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string fmt(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

int thread_budget(const RunConfig& c, std::size_t jobs) {
    int n = c.threads > 0 ? c.threads : static_cast<int>(std::thread::hardware_concurrency());
    if (n <= 0) n = 1;
    if (const char* env = std::getenv("PADIC_HLP_THREADS")) {
        int cap = std::atoi(env);
        if (cap > 0) n = std::min(n, cap);
    }
    return std::max(1, std::min<int>(n, static_cast<int>(jobs)));
}

/// Ordered parallel map: results land by index regardless of scheduling.
template <typename F>
void parallel_for(std::size_t jobs, int threads, F&& body) {
    if (threads <= 1) {
        for (std::size_t i = 0; i < jobs; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t chunk = (jobs + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk, hi = std::min(jobs, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &body] {
            for (std::size_t i = lo; i < hi; ++i) body(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace

json run_config_to_json(const RunConfig& c) {
    json eps = json::array();
    for (double e : c.eps_schedule) eps.push_back(e);
    return json{{"p", c.p},           {"lambda", to_json(c.lambda)},
                {"mu", to_json(c.mu)}, {"nu", to_json(c.nu)},
                {"q", to_json(c.q)},   {"r", to_json(c.r)},
                {"alpha", to_json(c.alpha)}, {"beta", to_json(c.beta)},
                {"window", c.window},  {"tol", c.tol},
                {"eps_schedule", eps}, {"format", c.format},
                {"out", c.out_path},   {"threads", c.threads}};
}

RunConfig run_config_from_json(const json& j) {
    RunConfig c;
    c.p = j.at("p").get<long long>();
    c.lambda = scalar_from_json(j.at("lambda"));
    c.mu = scalar_from_json(j.at("mu"));
    c.nu = scalar_from_json(j.at("nu"));
    c.q = exponent_from_json(j.at("q"));
    c.r = exponent_from_json(j.at("r"));
    c.alpha = scalar_from_json(j.at("alpha"));
    c.beta = scalar_from_json(j.at("beta"));
    c.window = j.at("window").get<long long>();
    c.tol = j.at("tol").get<double>();
    c.eps_schedule = j.at("eps_schedule").get<std::vector<double>>();
    c.format = j.at("format").get<std::string>();
    c.out_path = j.at("out").get<std::string>();
    c.threads = j.at("threads").get<int>();
    return c;
}

CommandResult cmd_check(const RunConfig& c) {
    Verdict v = check_boundedness(c.kernel(), c.space(), c.base());
    int code = v.status == BoundednessStatus::bounded
                   ? 0
                   : (v.status == BoundednessStatus::unbounded ? 1 : 2);
    return CommandResult{code, dump(envelope("check", c, to_json(v)))};
}

CommandResult cmd_norm(const RunConfig& c) {
    Verdict v = check_boundedness(c.kernel(), c.space(), c.base());
    json result = to_json(v);
    try {
        SharpNormTerms t = sharp_norm_terms(c.kernel(), c.space(), c.base());
        result["norm"] = t.value;
        result["formula"] = json{{"prefactor", t.prefactor}, {"term_unit", 1.0},
                                 {"exponent_a", t.exponent_a}, {"term_a", t.term_a},
                                 {"exponent_b", t.exponent_b}, {"term_b", t.term_b}};
    } catch (const NotAvailableError& e) {
        result["norm"] = nullptr;
        result["error"] = e.what();
        return CommandResult{3, dump(envelope("norm", c, result))};
    } catch (const std::domain_error& e) {
        result["norm"] = nullptr;
        result["error"] = e.what();
        return CommandResult{1, dump(envelope("norm", c, result))};
    }
    return CommandResult{0, dump(envelope("norm", c, result))};
}

CommandResult cmd_estimate(const RunConfig& c) {
    NormReport rep = estimate_norm(c.kernel(), c.space(), c.base(),
                                   ValuationWindow::symmetric(c.window), c.tol);
    if (!c.eps_schedule.empty() && rep.verdict.bounded() && c.q.is_finite() &&
        c.r.is_finite() && std::abs(c.q.value() - c.r.value()) <= 1e-12) {
        rep.extremal_lowers.clear();
        for (double eps : c.eps_schedule) {
            long long depth = std::max(default_sweep_depth(eps), c.window);
            auto pts = extremal_ratio_sweep(c.kernel(), c.space(), c.base(), {eps},
                                            ValuationWindow(0, depth));
            rep.extremal_lowers.push_back(pts.front());
        }
    }
    return CommandResult{0, dump(envelope("estimate", c, to_json(rep)))};
}

namespace {

struct SweepRow {
    RunConfig config;
    double varied_value;
    std::optional<double> eps;  // set when sweeping eps
};

RunConfig with_parameter(const RunConfig& base, const std::string& name, const Scalar& v) {
    RunConfig c = base;
    if (name == "lambda") c.lambda = v;
    else if (name == "mu") c.mu = v;
    else if (name == "nu") c.nu = v;
    else if (name == "alpha") c.alpha = v;
    else if (name == "beta") c.beta = v;
    else if (name == "q") c.q = ExtendedExponent(v);
    else if (name == "r") c.r = ExtendedExponent(v);
    else throw UsageError("sweep: unknown parameter '" + name + "'");
    return c;
}

std::string sweep_row_csv(std::size_t index, const std::string& parameter, const SweepRow& row) {
    const RunConfig& c = row.config;
    NormReport rep;
    std::optional<double> extremal_max;
    if (row.eps) {
        rep = estimate_norm(c.kernel(), c.space(), c.base(), ValuationWindow::symmetric(c.window),
                            c.tol, 1);
        try {
            long long depth = std::max(default_sweep_depth(*row.eps), c.window);
            auto pts = extremal_ratio_sweep(c.kernel(), c.space(), c.base(), {*row.eps},
                                            ValuationWindow(0, depth));
            extremal_max = pts.front().ratio;
        } catch (const std::exception&) {
        }
    } else {
        rep = estimate_norm(c.kernel(), c.space(), c.base(), ValuationWindow::symmetric(c.window),
                            c.tol, 6);
        for (const auto& pt : rep.extremal_lowers)
            extremal_max = std::max(extremal_max.value_or(0.0), pt.ratio);
    }

    bool balance_ok = true, window_ok = true;
    for (const auto& cond : rep.verdict.conditions) {
        if (cond.name == "balance")
            balance_ok = cond.satisfied;
        else
            window_ok = window_ok && cond.satisfied;
    }

    std::ostringstream os;
    os << index << ',' << parameter << ',' << fmt(row.varied_value) << ',' << c.p << ','
       << fmt(c.lambda.value()) << ',' << fmt(c.mu.value()) << ',' << fmt(c.nu.value()) << ','
       << (c.q.is_infinite() ? "inf" : fmt(c.q.value())) << ','
       << (c.r.is_infinite() ? "inf" : fmt(c.r.value())) << ',' << fmt(c.alpha.value()) << ','
       << fmt(c.beta.value()) << ',';
    switch (rep.verdict.status) {
        case BoundednessStatus::bounded: os << "bounded"; break;
        case BoundednessStatus::unbounded: os << "unbounded"; break;
        case BoundednessStatus::out_of_paper_scope: os << "out-of-paper-scope"; break;
    }
    os << ',' << '"' << citation_label(rep.verdict.citation) << '"' << ','
       << fmt(rep.verdict.tau) << ',' << (balance_ok ? 1 : 0) << ',' << (window_ok ? 1 : 0) << ',';
    os << (rep.closed_form ? fmt(*rep.closed_form) : "") << ',';
    os << (rep.schur ? fmt(rep.schur->bound) : "") << ',';
    os << (rep.matrix_lower ? fmt(rep.matrix_lower->value) : "") << ',';
    os << (extremal_max ? fmt(*extremal_max) : "");
    return os.str();
}

}  // namespace

CommandResult cmd_sweep(const RunConfig& c, const SweepSpec& spec) {
    if (spec.steps < 1) throw UsageError("sweep: steps must be at least 1");
    const bool vary_eps = spec.parameter == "eps";
    if (!vary_eps) (void)with_parameter(c, spec.parameter, Scalar(0.0));  // validate name
    if (spec.steps > 1 && !((spec.to - spec.from).sign(0.0) > 0))
        throw UsageError("sweep: empty range, need from < to");
    if (vary_eps && !(spec.from.value() > 0.0)) throw UsageError("sweep: eps must be positive");

    std::vector<SweepRow> rows(static_cast<std::size_t>(spec.steps));
    for (long long i = 0; i < spec.steps; ++i) {
        Scalar value = spec.steps == 1
                           ? spec.from
                           : spec.from + (spec.to - spec.from) * Scalar(i) / Scalar(spec.steps - 1);
        SweepRow row{c, value.value(), std::nullopt};
        if (vary_eps)
            row.eps = value.value();
        else
            row.config = with_parameter(c, spec.parameter, value);
        rows[static_cast<std::size_t>(i)] = std::move(row);
    }

    std::vector<std::string> lines(rows.size());
    parallel_for(rows.size(), thread_budget(c, rows.size()), [&](std::size_t i) {
        lines[i] = sweep_row_csv(i, spec.parameter, rows[i]);
    });

    std::ostringstream os;
    os << "index,parameter,value,p,lambda,mu,nu,q,r,alpha,beta,status,citation,tau,"
          "balance_ok,window_ok,closed_form,schur_bound,matrix_lower,extremal_max\n";
    for (const auto& line : lines) os << line << '\n';
    return CommandResult{0, os.str()};
}

CommandResult cmd_digits(const std::string& x, long long p, int n) {
    auto value = Rational::parse(x);
    if (!value) throw UsageError("digits: cannot parse rational '" + x + "'");
    if (n < 1) throw UsageError("digits: need at least one digit");
    PrimeBase base(p);
    DigitExpansion e = digit_expansion(*value, base, static_cast<std::size_t>(n));
    std::ostringstream os;
    os << "x = " << value->to_string() << ", p = " << p << ", valuation = " << e.gamma
       << ", digits =";
    for (int d : e.digits) os << ' ' << d;
    os << '\n';
    return CommandResult{0, os.str()};
}

CommandResult cmd_norm_of(const std::string& x, long long p) {
    auto value = Rational::parse(x);
    if (!value) throw UsageError("norm-of: cannot parse rational '" + x + "'");
    PrimeBase base(p);
    std::ostringstream os;
    os << "|" << value->to_string() << "|_" << p << " = "
       << padic_norm_exact(*value, base).to_string();
    auto v = valuation(*value, base);
    if (v)
        os << " (valuation " << *v << ")";
    else
        os << " (valuation +inf)";
    os << '\n';
    return CommandResult{0, os.str()};
}

}  // namespace padic_hlp
