// Built-in catalog of graphs with published coefficient sequences and
// class facts, used by `indpoly fixtures` and the test suites. Entries
// flagged `reconstruction` come from hand-reconstructed drawings and are
// excluded from the default run.
#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "classify.hpp"
#include "expr.hpp"
#include "graph.hpp"
#include "independence.hpp"
#include "polyseq.hpp"

namespace indpoly {

// Catalog entries can exceed the general-purpose default ceiling; they
// are curated to finish fast regardless.
inline constexpr int kFixtureMaxVertices = 128;

struct Fixture {
    std::string name;
    std::string expr;          // construction DSL; empty => adjacency below or sequence-only
    int order = -1;            // explicit adjacency when expr is empty and order >= 0
    std::vector<Edge> edges;
    std::vector<long long> coeffs;  // expected coefficients; empty => no polynomial check
    bool reconstruction = false;

    std::optional<int> expect_order;
    std::optional<int> expect_edge_count;
    std::optional<bool> well_covered;
    std::optional<bool> very_well_covered;
    std::optional<bool> quasi_regularizable;
    std::optional<bool> unimodal;
    std::optional<bool> log_concave;
    std::optional<int> omega1;
    std::optional<int> clique;

    bool sequence_only() const { return expr.empty() && order < 0; }
};

inline const std::vector<Fixture>& paper_fixtures() {
    static const std::vector<Fixture> catalog = [] {
        std::vector<Fixture> v;

        v.push_back({.name = "K1,3",
                     .expr = "K1,3",
                     .coeffs = {1, 4, 3, 1},
                     .well_covered = false,
                     .quasi_regularizable = false,
                     .unimodal = true});
        v.push_back({.name = "K24+(K3|K3|K4)",
                     .expr = "K24 + (K3 | K3 | K4)",
                     .coeffs = {1, 34, 33, 36},
                     .unimodal = false});
        v.push_back({.name = "P5", .expr = "P5", .coeffs = {1, 5, 6, 1}, .well_covered = false});
        v.push_back({.name = "C7",
                     .expr = "C7",
                     .coeffs = {1, 7, 14, 7},
                     .well_covered = true,
                     .very_well_covered = false,
                     .omega1 = 2,
                     .clique = 2});
        v.push_back({.name = "K4-e", .expr = "deledge(K4, 0, 1)", .coeffs = {1, 4, 1}});
        v.push_back({.name = "C5", .expr = "C5", .coeffs = {1, 5, 5}});
        v.push_back({.name = "K3^*",
                     .expr = "K3^*",
                     .expect_order = 6,
                     .expect_edge_count = 6,
                     .well_covered = true,
                     .very_well_covered = true,
                     .omega1 = 2,
                     .clique = 3});
        v.push_back({.name = "K10+E6",
                     .expr = "K10 + E6",
                     .coeffs = {1, 16, 15, 20, 15, 6, 1},
                     .quasi_regularizable = true,
                     .unimodal = false});
        v.push_back({.name = "(K24+E6)|(K25+E6)",
                     .expr = "(K24 + E6) | (K25 + E6)",
                     .coeffs = {1, 61, 960, 955, 1475, 1527, 1218, 841, 495, 220, 66, 12, 1},
                     .quasi_regularizable = true,
                     .unimodal = false});
        v.push_back({.name = "4*C5",
                     .expr = "4*C5",
                     .coeffs = {1, 20, 170, 800, 2275, 4000, 4250, 2500, 625},
                     .log_concave = true});
        v.push_back({.name = "(K95+4*K3)|C5",
                     .expr = "(K95 + 4*K3) | C5",
                     .coeffs = {1, 112, 594, 913, 891, 945, 405},
                     .unimodal = false});
        v.push_back({.name = "K97-joined-C5",
                     .expr = "addedge((K97 + 4*K3) | C5, 0, 109)",
                     .coeffs = {1, 114, 603, 921, 891, 945, 405},
                     .unimodal = false});

        // Drawing reconstructions, verified against the printed
        // coefficients; excluded from the default run.
        v.push_back({.name = "drawing-G1(1+6x+8x^2+x^3)",
                     .order = 6,
                     .edges = {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {4, 5}, {3, 5}},
                     .coeffs = {1, 6, 8, 1},
                     .reconstruction = true,
                     .well_covered = false});
        v.push_back({.name = "drawing-G2(1+5x+4x^2)",
                     .order = 5,
                     .edges = {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}},
                     .coeffs = {1, 5, 4},
                     .reconstruction = true,
                     .well_covered = false});
        v.push_back({.name = "drawing-G1(1+6x+8x^2)",
                     .order = 6,
                     .edges = {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 5}, {3, 5}},
                     .coeffs = {1, 6, 8},
                     .reconstruction = true,
                     .well_covered = true,
                     .very_well_covered = false,
                     .quasi_regularizable = true});
        v.push_back({.name = "drawing-G2(1+8x+19x^2+12x^3)",
                     .order = 8,
                     .edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 6}, {1, 6}, {4, 7},
                               {5, 7}},
                     .coeffs = {1, 8, 19, 12},
                     .reconstruction = true,
                     .quasi_regularizable = true});

        // Printed sequence of a 12-vertex very well-covered example whose
        // drawing is not reliably reconstructible; shape facts only.
        v.push_back({.name = "sequence(1+12x+52x^2+...)",
                     .coeffs = {1, 12, 52, 110, 123, 70, 16},
                     .unimodal = true,
                     .log_concave = true});

        return v;
    }();
    return catalog;
}

struct FixtureOutcome {
    std::string name;
    bool passed = true;
    std::string detail;  // first failed expectation
    CoeffSeq actual;
};

namespace detail {

inline std::string coeff_list(const CoeffSeq& s) {
    std::ostringstream os;
    os << "[";
    for (int k = 0; k <= s.degree(); ++k) os << (k ? "," : "") << s[k].str();
    os << "]";
    return os.str();
}

}  // namespace detail

inline FixtureOutcome run_fixture(const Fixture& f, int max_n = kFixtureMaxVertices) {
    FixtureOutcome out;
    out.name = f.name;
    auto fail = [&](const std::string& msg) {
        if (out.passed) {
            out.passed = false;
            out.detail = msg;
        }
    };
    auto expect = [&](const char* what, auto expected, auto actual) {
        if (out.passed && !(expected == actual)) {
            std::ostringstream os;
            os << what << ": expected " << expected << ", got " << actual;
            fail(os.str());
        }
    };

    CoeffSeq poly;
    if (f.sequence_only()) {
        std::vector<BigInt> c(f.coeffs.begin(), f.coeffs.end());
        poly = CoeffSeq(std::move(c));
    } else {
        Graph g = f.expr.empty() ? Graph::make(f.order, f.edges) : graph_from_expr(f.expr);
        poly = independence_polynomial(g, max_n);
        if (!f.coeffs.empty()) {
            std::vector<BigInt> c(f.coeffs.begin(), f.coeffs.end());
            CoeffSeq expected(std::move(c));
            if (poly != expected)
                fail("polynomial mismatch: expected " + detail::coeff_list(expected) + ", got " +
                     detail::coeff_list(poly));
        }
        if (f.expect_order) expect("order", *f.expect_order, g.order());
        if (f.expect_edge_count) expect("edge count", *f.expect_edge_count, g.edge_count());
        if (f.well_covered) expect("well-covered", *f.well_covered, is_well_covered(g).value);
        if (f.very_well_covered)
            expect("very well-covered", *f.very_well_covered, is_very_well_covered(g));
        if (f.quasi_regularizable)
            expect("quasi-regularizable", *f.quasi_regularizable,
                   is_quasi_regularizable(g).value);
        if (f.omega1 || f.clique) {
            OmegaProfile prof = omega_profile(g, max_n);
            if (f.omega1) expect("omega_1", *f.omega1, prof.omegas.at(1));
            if (f.clique) expect("clique number", *f.clique, prof.clique_number);
        }
    }
    ShapeReport sh = shape(poly);
    if (f.unimodal) expect("unimodal", *f.unimodal, sh.unimodal);
    if (f.log_concave) expect("log-concave", *f.log_concave, sh.log_concave);
    out.actual = poly;
    return out;
}

inline std::vector<FixtureOutcome> run_fixtures(bool include_reconstructions = false,
                                                int max_n = kFixtureMaxVertices) {
    std::vector<FixtureOutcome> out;
    for (const Fixture& f : paper_fixtures()) {
        if (f.reconstruction && !include_reconstructions) continue;
        out.push_back(run_fixture(f, max_n));
    }
    return out;
}

}  // namespace indpoly
