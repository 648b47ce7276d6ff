#include "padic_hlp/serialization.hpp"

namespace padic_hlp {

using nlohmann::json;

json to_json(const Scalar& s) {
    if (s.is_exact()) return json(s.exact().to_string());
    return json(s.value());
}

Scalar scalar_from_json(const json& j) {
    if (j.is_string()) {
        auto r = Rational::parse(j.get<std::string>());
        if (!r) throw std::invalid_argument("scalar_from_json: bad rational " + j.dump());
        return Scalar(*r);
    }
    if (j.is_number()) return Scalar(j.get<double>());
    throw std::invalid_argument("scalar_from_json: expected string or number");
}

json to_json(const ExtendedExponent& e) {
    if (e.is_infinite()) return json("inf");
    return to_json(e.scalar());
}

ExtendedExponent exponent_from_json(const json& j) {
    if (j.is_string()) {
        auto e = ExtendedExponent::parse(j.get<std::string>());
        if (!e) throw std::invalid_argument("exponent_from_json: bad exponent " + j.dump());
        return *e;
    }
    if (j.is_number()) return ExtendedExponent(Scalar(j.get<double>()));
    throw std::invalid_argument("exponent_from_json: expected string or number");
}

json to_json(const RadialFunction& f) {
    return json{{"p", f.base().value()},
                {"gamma_min", f.window().gamma_min},
                {"gamma_max", f.window().gamma_max},
                {"values", f.values()}};
}

RadialFunction radial_from_json(const json& j) {
    PrimeBase base(j.at("p").get<long long>());
    ValuationWindow w(j.at("gamma_min").get<long long>(), j.at("gamma_max").get<long long>());
    return RadialFunction(base, w, j.at("values").get<std::vector<double>>());
}

namespace {

const char* status_name(BoundednessStatus s) {
    switch (s) {
        case BoundednessStatus::bounded: return "bounded";
        case BoundednessStatus::unbounded: return "unbounded";
        case BoundednessStatus::out_of_paper_scope: return "out-of-paper-scope";
    }
    return "?";
}

}  // namespace

json to_json(const Verdict& v) {
    json conditions = json::array();
    for (const auto& c : v.conditions)
        conditions.push_back({{"name", c.name}, {"relation", c.relation}, {"satisfied", c.satisfied}});
    return json{{"status", status_name(v.status)},
                {"tau", v.tau},
                {"tau_exact", v.tau_exact},
                {"citation", citation_label(v.citation)},
                {"conditions", conditions}};
}

json to_json(const SchurCertificate& c) {
    json j{{"s", c.s}, {"t", c.t}, {"bound", c.bound}};
    if (c.mode == SchurCertificate::Mode::case_one) {
        j["case"] = "I";
        j["A"] = c.shift;
        j["C1"] = c.c1;
        j["C2"] = c.c2;
    } else {
        j["case"] = "II";
        j["D"] = c.shift;
        j["C3"] = c.c3;
        j["C4"] = c.c4;
    }
    return j;
}

json to_json(const GrowthReport& g) {
    json ratios = json::array();
    for (const auto& [w, ratio] : g.window_ratios)
        ratios.push_back({{"gamma_min", w.gamma_min}, {"gamma_max", w.gamma_max}, {"ratio", ratio}});
    return json{{"outcome",
                 g.outcome == GrowthReport::Outcome::confirmed ? "confirmed" : "inconclusive"},
                {"growth", g.growth},
                {"threshold", g.threshold},
                {"window_ratios", ratios}};
}

json to_json(const NormReport& r) {
    json j{{"verdict", to_json(r.verdict)}};
    j["closed_form"] = r.closed_form ? json(*r.closed_form) : json();
    j["schur"] = r.schur ? to_json(*r.schur) : json();
    if (r.matrix_lower) {
        const auto& m = *r.matrix_lower;
        j["matrix_lower"] = json{{"value", m.value},
                                 {"gamma_min", m.cols.gamma_min},
                                 {"gamma_max", m.cols.gamma_max},
                                 {"rows_gamma_min", m.rows.gamma_min},
                                 {"rows_gamma_max", m.rows.gamma_max},
                                 {"iterations", m.iterations},
                                 {"tol", m.tol},
                                 {"converged", m.converged}};
    } else {
        j["matrix_lower"] = json();
    }
    json ext = json::array();
    for (const auto& pt : r.extremal_lowers)
        ext.push_back({{"eps", pt.epsilon}, {"ratio", pt.ratio}});
    j["extremal_lowers"] = ext;
    j["divergence"] = r.divergence ? to_json(*r.divergence) : json();
    return j;
}

}  // namespace padic_hlp
