// json_io.hpp — config ingestion and report emission.
//
// Config schema:
//   { "basis": [{"label": str, "value": decimal-string}],
//     "nodes": [{"b": [re, im] | decimal-string,
//                "angle": {"rational": "p/q", "coeffs": [int]}
//                       | {"float": decimal-string}}] }
// A "pairs" array (with "alpha" angles) instead of "nodes" declares a
// cosine config; a "freqs" array of {"b", "q"} declares an
// integer-frequency polynomial. Basis values must be decimal strings —
// JSON numbers are rejected there, since they have already been rounded
// through a double by the producer.
//
// Emission uses ordered_json so field order is fixed; doubles print in
// nlohmann's shortest-round-trip form. Identical manifests produce
// byte-identical output.

#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "onesided/bounds.hpp"
#include "onesided/extremum.hpp"
#include "onesided/relation_scan.hpp"
#include "onesided/spectrum.hpp"
#include "onesided/structure.hpp"

namespace onesided {

using Json = nlohmann::ordered_json;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LoadedConfig {
    enum class Kind { Spectrum, Cosine, TrigPoly } kind = Kind::Spectrum;
    SpectrumConfig spectrum;
    CosineConfig cosine;
    TrigPoly poly;
    std::vector<std::string> warnings;
};

namespace detail {

inline BasisDecl parse_basis(const Json& j) {
    BasisDecl basis;
    if (!j.contains("basis")) return basis;
    if (!j["basis"].is_array()) throw ConfigError("field 'basis' must be an array");
    for (const auto& entry : j["basis"]) {
        if (!entry.contains("label") || !entry.contains("value"))
            throw ConfigError("basis entry needs 'label' and 'value'");
        if (!entry["value"].is_string())
            throw ConfigError("basis 'value' must be a decimal string, not a JSON number");
        basis.labels.push_back(entry["label"].get<std::string>());
        basis.values.push_back(dd_from_string(entry["value"].get<std::string>()));
    }
    if (j.contains("independence_asserted"))
        basis.independence_asserted = j["independence_asserted"].get<bool>();
    basis.check();
    return basis;
}

inline Angle parse_angle(const Json& j, const char* field_name) {
    if (!j.is_object()) throw ConfigError(std::string("field '") + field_name + "' must be an object");
    if (j.contains("float")) {
        if (!j["float"].is_string())
            throw ConfigError("angle 'float' must be a decimal string");
        return Angle::floating(dd_from_string(j["float"].get<std::string>()),
                               runtime_precision_bits());
    }
    Rational r(0);
    if (j.contains("rational")) {
        if (j["rational"].is_string()) r = Rational::parse(j["rational"].get<std::string>());
        else if (j["rational"].is_number_integer()) r = Rational(j["rational"].get<std::int64_t>());
        else throw ConfigError("angle 'rational' must be a string like \"1/5\"");
    }
    std::vector<std::int64_t> coeffs;
    if (j.contains("coeffs")) {
        if (!j["coeffs"].is_array()) throw ConfigError("angle 'coeffs' must be an array of integers");
        for (const auto& c : j["coeffs"]) coeffs.push_back(c.get<std::int64_t>());
    }
    if (!j.contains("rational") && !j.contains("coeffs"))
        throw ConfigError(std::string("field '") + field_name +
                          "' needs 'rational'/'coeffs' or 'float'");
    return Angle::exact(r, std::move(coeffs));
}

inline Coefficient parse_coefficient(const Json& j) {
    if (j.is_string()) return Coefficient(Rational::parse(j.get<std::string>()));
    if (j.is_number_integer()) return Coefficient(Rational(j.get<std::int64_t>()));
    if (j.is_array()) {
        if (j.size() != 2) throw ConfigError("field 'b' as array must be [re, im]");
        return Coefficient(Complex(j[0].get<double>(), j[1].get<double>()));
    }
    if (j.is_number()) return Coefficient(Complex(j.get<double>(), 0.0));
    throw ConfigError("field 'b' must be [re, im], a number, or a decimal string");
}

} // namespace detail

inline LoadedConfig load_config(const Json& j) {
    if (!j.is_object()) throw ConfigError("config root must be an object");
    LoadedConfig out;
    BasisDecl basis = detail::parse_basis(j);

    if (j.contains("nodes")) {
        out.kind = LoadedConfig::Kind::Spectrum;
        out.spectrum.basis = basis;
        if (!j["nodes"].is_array() || j["nodes"].empty())
            throw ConfigError("field 'nodes' must be a non-empty array");
        for (const auto& nd : j["nodes"]) {
            if (!nd.contains("b") || !nd.contains("angle"))
                throw ConfigError("node needs 'b' and 'angle'");
            out.spectrum.nodes.push_back(
                {detail::parse_coefficient(nd["b"]), detail::parse_angle(nd["angle"], "angle")});
        }
    } else if (j.contains("pairs")) {
        out.kind = LoadedConfig::Kind::Cosine;
        out.cosine.basis = basis;
        if (!j["pairs"].is_array() || j["pairs"].empty())
            throw ConfigError("field 'pairs' must be a non-empty array");
        for (const auto& p : j["pairs"]) {
            if (!p.contains("b") || !p.contains("alpha"))
                throw ConfigError("pair needs 'b' and 'alpha'");
            Coefficient c = detail::parse_coefficient(p["b"]);
            if (!c.is_real()) throw ConfigError("cosine coefficient 'b' must be real");
            out.cosine.pairs.push_back({c, detail::parse_angle(p["alpha"], "alpha")});
        }
    } else if (j.contains("freqs")) {
        out.kind = LoadedConfig::Kind::TrigPoly;
        if (!j["freqs"].is_array() || j["freqs"].empty())
            throw ConfigError("field 'freqs' must be a non-empty array");
        for (const auto& t : j["freqs"]) {
            if (!t.contains("b") || !t.contains("q"))
                throw ConfigError("freq term needs 'b' and 'q'");
            out.poly.terms.push_back(
                {detail::parse_coefficient(t["b"]).value, t["q"].get<std::int64_t>()});
        }
    } else {
        throw ConfigError("config needs one of 'nodes', 'pairs', or 'freqs'");
    }

    // stress-test declared basis independence; a detected relation is a
    // warning (likely a typo in the decimal), not an error
    if (!basis.values.empty() && basis.values.size() <= 6) {
        try {
            auto relations = numeric_relation_scan(basis.values, 100);
            for (const auto& r : relations) {
                std::string msg = "declared basis admits integer relation: " +
                                  std::to_string(r.c0);
                for (std::size_t i = 0; i < r.coeffs.size(); ++i)
                    msg += " + " + std::to_string(r.coeffs[i]) + "*" + basis.labels[i];
                msg += " ~ 0 (residual " + std::to_string(r.residual) + ")";
                out.warnings.push_back(msg);
            }
        } catch (const std::invalid_argument&) {
            // precision guard tripped; skip the stress test
        }
    }
    return out;
}

inline LoadedConfig load_config_string(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("JSON parse error: ") + e.what());
    }
    return load_config(j);
}

// ---------------------------------------------------------------------------
// emission

inline Json angle_to_json(const Angle& a) {
    Json j;
    if (a.is_exact()) {
        j["rational"] = a.rational().to_string();
        j["coeffs"] = a.coeffs();
    } else {
        j["float"] = dd_to_string(a.float_value(), 32);
    }
    return j;
}

inline Json coefficient_to_json(const Coefficient& c) {
    if (c.exact) return Json(c.exact->to_string());
    return Json::array({c.value.real(), c.value.imag()});
}

inline Json config_to_json(const SpectrumConfig& cfg) {
    Json j;
    j["basis"] = Json::array();
    for (std::size_t i = 0; i < cfg.basis.size(); ++i)
        j["basis"].push_back({{"label", cfg.basis.labels[i]},
                              {"value", dd_to_string(cfg.basis.values[i], 32)}});
    j["nodes"] = Json::array();
    for (const auto& nd : cfg.nodes)
        j["nodes"].push_back({{"b", coefficient_to_json(nd.b)}, {"angle", angle_to_json(nd.angle)}});
    return j;
}

inline Json config_to_json(const CosineConfig& cfg) {
    Json j;
    j["basis"] = Json::array();
    for (std::size_t i = 0; i < cfg.basis.size(); ++i)
        j["basis"].push_back({{"label", cfg.basis.labels[i]},
                              {"value", dd_to_string(cfg.basis.values[i], 32)}});
    j["pairs"] = Json::array();
    for (const auto& p : cfg.pairs)
        j["pairs"].push_back({{"b", coefficient_to_json(p.b)}, {"alpha", angle_to_json(p.alpha)}});
    return j;
}

inline Json validation_to_json(const ValidationReport& rep) {
    Json j;
    j["structural_ok"] = rep.structural_ok;
    j["errors"] = rep.errors;
    j["conjugate_closed"] = rep.conjugate_closed;
    j["no_z_equal_one"] = rep.no_unit_node;
    j["angles_distinct"] = rep.all_distinct;
    j["b_nonzero"] = rep.all_b_nonzero;
    j["b_positive_real"] = rep.all_b_positive_real;
    j["thm1_hypotheses"] = rep.thm1_hypotheses();
    j["thm2_hypotheses"] = rep.thm2_hypotheses();
    j["warnings"] = rep.warnings;
    return j;
}

inline Json bound_to_json(const BoundReport& rep) {
    Json j;
    j["theorem_id"] = theorem_name(rep.id);
    j["value"] = rep.value;
    j["strict"] = rep.strict;
    Json met = Json::array(), names = Json::array();
    for (const auto& [name, ok] : rep.hypotheses) {
        names.push_back(name);
        met.push_back(ok);
    }
    j["hypotheses_met"] = met;
    j["hypothesis_names"] = names;
    j["applicable"] = rep.hypotheses_met();
    return j;
}

inline std::string bound_to_csv(const BoundReport& rep) {
    char buf[64];
    auto* end = std::to_chars(buf, buf + sizeof buf, rep.value,
                              std::chars_format::general, 17).ptr;
    return std::string(theorem_name(rep.id)) + "," + std::string(buf, end) + "," +
           (rep.strict ? "strict" : "weak") + "," + (rep.hypotheses_met() ? "1" : "0");
}

inline Json verdict_to_json(const DegeneracyVerdict& v) {
    Json j;
    j["verdict"] = verdict_name(v.kind);
    if (v.witness) {
        j["witness"] = {{"i", v.witness->i},
                        {"j", v.witness->j},
                        {"order", v.witness->order},
                        {"kind", v.witness->kind}};
    }
    if (!v.note.empty()) j["note"] = v.note;
    return j;
}

inline Json decomposition_to_json(const GroupDecomposition& g) {
    Json j;
    j["torsion_order"] = g.torsion_order;
    j["torsion_exponents"] = g.torsion_exponents;
    j["free_rank"] = g.d;
    j["exponent_matrix"] = g.exponent_matrix;
    return j;
}

inline Json projection_to_json(const Projection& p) {
    Json j;
    j["p"] = p.p;
    j["q"] = p.q;
    return j;
}

inline Json scan_to_json(const ScanResult& s) {
    Json j;
    j["k_best"] = s.k_best;
    j["value_best"] = s.value_best;
    j["K_budget"] = s.K_budget;
    j["restriction"] = restriction_name(s.restriction);
    j["modulus"] = s.modulus;
    if (!s.history.empty()) {
        Json h = Json::array();
        for (const auto& [k, v] : s.history) h.push_back({{"k", k}, {"running_min", v}});
        j["history"] = h;
    }
    return j;
}

inline Json continuous_to_json(const ContinuousMinimum& m) {
    Json j;
    j["minimizer"] = m.minimizer;
    j["value"] = m.value;
    j["method"] = m.method == ContinuousMinimum::Method::GridPolish ? "grid+polish"
                                                                    : "torus-grid+polish";
    j["certified_resolution"] = m.certified_resolution;
    return j;
}

inline Json witness_to_json(const WitnessReport& w) {
    Json j;
    j["k"] = w.k;
    j["k_corrections"] = w.k_corrections;
    j["delta_achieved"] = w.delta_achieved;
    j["sum_at_k"] = w.sum_at_k;
    j["gap_to_cT"] = w.gap_to_cT;
    j["Lambda"] = w.Lambda;
    j["satisfied"] = w.satisfied;
    j["effort_used"] = w.effort_used;
    return j;
}

inline Json certification_to_json(const CertificationReport& c) {
    Json j;
    j["verdict"] = verdict_name(c.verdict);
    j["c_T"] = c.c_T;
    j["t0"] = c.t0;
    j["f_t0"] = c.f_t0;
    j["k"] = c.k;
    j["f_k"] = c.f_k;
    j["epsilon"] = c.epsilon;
    j["delta_final"] = c.delta_final;
    j["witness"] = witness_to_json(c.witness);
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

inline Json verification_to_json(const VerificationRecord& r) {
    Json j;
    j["theorem_id"] = theorem_name(r.id);
    j["bound"] = r.bound;
    j["strict"] = r.strict;
    j["min_found"] = r.min_found;
    j["k_best"] = r.k_best;
    j["budget"] = r.budget;
    j["verdict"] = verdict_name(r.verdict);
    j["margin"] = r.margin;
    j["restriction"] = r.restriction;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline std::string verification_to_csv(const VerificationRecord& r) {
    auto num = [](double v) {
        char buf[64];
        auto* end = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17).ptr;
        return std::string(buf, end);
    };
    return std::string(theorem_name(r.id)) + "," + num(r.bound) + "," + num(r.min_found) + "," +
           std::to_string(r.k_best) + "," + std::to_string(r.budget) + "," +
           verdict_name(r.verdict);
}

inline Json relations_to_json(const std::vector<IntegerRelation>& rels) {
    Json arr = Json::array();
    for (const auto& r : rels)
        arr.push_back({{"c0", r.c0}, {"coeffs", r.coeffs}, {"residual", r.residual},
                       {"height", r.height()}});
    return arr;
}

} // namespace onesided
