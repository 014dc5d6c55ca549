// JSON/CSV/text rendering of reports. JSON is the canonical format:
// insertion-ordered keys and decimal-string coefficients keep output
// byte-identical across runs.
#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "classify.hpp"
#include "fixtures.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "polyseq.hpp"
#include "verify.hpp"

namespace indpoly {

inline constexpr const char* kToolVersion = "0.1.0";

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson json_of(const CoeffSeq& s) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& c : to_decimal_strings(s)) arr.push_back(c);
    return arr;
}

inline OrderedJson json_of(const ShapeReport& r) {
    OrderedJson j;
    j["unimodal"] = r.unimodal;
    j["modes"] = r.modes;
    j["log_concave"] = r.log_concave;
    if (r.first_log_concavity_violation)
        j["first_log_concavity_violation"] = *r.first_log_concavity_violation;
    j["head_nondecreasing_through"] = r.head_nondecreasing_through;
    j["tail_nonincreasing_from"] = r.tail_nonincreasing_from;
    return j;
}

inline OrderedJson json_of(const ClassReport& r) {
    OrderedJson j;
    j["well_covered"] = r.well_covered;
    j["very_well_covered"] = r.very_well_covered;
    j["quasi_regularizable"] = r.quasi_regularizable;
    if (r.perfect) j["perfect"] = *r.perfect;
    j["bipartite"] = r.bipartite;
    j["tree"] = r.tree;
    if (r.girth)
        j["girth"] = *r.girth;
    else
        j["girth"] = "infinity";
    if (r.witness) j["witness"] = *r.witness;
    return j;
}

inline OrderedJson json_of(const Violation& v) {
    OrderedJson j;
    j["k"] = v.index;
    j["left"] = v.left.str();
    j["right"] = v.right.str();
    return j;
}

inline OrderedJson json_of(const CheckVerdict& v) {
    OrderedJson j;
    j["statement"] = v.statement_id;
    j["premise"] = to_string(v.premise);
    j["conclusion_holds"] = v.conclusion_holds;
    if (v.first_violation) j["first_violation"] = json_of(*v.first_violation);
    OrderedJson parts = OrderedJson::array();
    for (const PartResult& p : v.parts) {
        OrderedJson pj;
        pj["part"] = p.name;
        pj["applicable"] = p.applicable;
        pj["holds"] = p.holds;
        if (p.violation) pj["violation"] = json_of(*p.violation);
        parts.push_back(pj);
    }
    j["parts"] = parts;
    j["notes"] = v.notes;
    return j;
}

inline OrderedJson json_of(const WindowReport& w) {
    OrderedJson j;
    j["alpha"] = w.alpha;
    j["lower"] = w.lower;
    j["upper"] = w.upper;
    return j;
}

inline OrderedJson json_of(const HuntRecord& r) {
    OrderedJson j;
    j["index"] = r.index;
    j["identity"] = r.identity;
    j["coefficients"] = json_of(r.poly);
    j["polynomial"] = to_polynomial_string(r.poly);
    j["shape"] = json_of(r.poly_shape);
    j["classes"] = json_of(r.classes);
    return j;
}

inline OrderedJson json_of(const FixtureOutcome& o) {
    OrderedJson j;
    j["name"] = o.name;
    j["passed"] = o.passed;
    if (!o.detail.empty()) j["detail"] = o.detail;
    j["coefficients"] = json_of(o.actual);
    return j;
}

// Everything the CLI knows about one input graph.
struct GraphReport {
    std::string source;  // expr | graph6 | edges
    std::string input;
    Graph graph;
    CoeffSeq poly;
    bool has_poly = false;
    std::optional<ShapeReport> poly_shape;
    std::optional<ClassReport> classes;
    std::optional<WindowReport> window;
    std::vector<CheckVerdict> verdicts;
};

inline OrderedJson json_of(const GraphReport& r) {
    OrderedJson j;
    j["source"] = r.source;
    j["input"] = r.input;
    j["n"] = r.graph.order();
    j["edges"] = r.graph.edge_count();
    j["graph6"] = encode_graph6(r.graph);
    if (r.has_poly) {
        j["alpha"] = r.poly.degree();
        j["coefficients"] = json_of(r.poly);
        j["polynomial"] = to_polynomial_string(r.poly);
    }
    if (r.poly_shape) j["shape"] = json_of(*r.poly_shape);
    if (r.window) j["window"] = json_of(*r.window);
    if (r.classes) j["classes"] = json_of(*r.classes);
    if (!r.verdicts.empty()) {
        OrderedJson arr = OrderedJson::array();
        for (const auto& v : r.verdicts) arr.push_back(json_of(v));
        j["verdicts"] = arr;
    }
    return j;
}

// Run-level wrapper: tool identity plus the ceilings that shaped results,
// so a report can be re-checked without re-running.
inline OrderedJson make_run_report(const std::string& command, int max_n, int perfect_max_n) {
    OrderedJson j;
    j["tool"] = "indpoly";
    j["version"] = kToolVersion;
    j["command"] = command;
    j["max_n"] = max_n;
    j["perfect_max_n"] = perfect_max_n;
    return j;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

// Coefficients flatten into one semicolon-joined CSV column.
inline std::string csv_coeffs(const CoeffSeq& s) {
    std::string out;
    for (int k = 0; k <= s.degree(); ++k) {
        if (k) out += ";";
        out += s[k].str();
    }
    return out;
}

}  // namespace indpoly
