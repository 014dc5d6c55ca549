// Recognizers for the graph classes the theorem checks quantify over:
// well-covered, very well-covered, quasi-regularizable, perfect.
// Negative answers carry machine-checkable witnesses.
#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "independence.hpp"
#include "verdict.hpp"

namespace indpoly {

inline constexpr int kDefaultPerfectMaxVertices = 14;
// Subset tables double per vertex; beyond this the check is refused.
inline constexpr int kPerfectHardCap = 24;

struct WellCoveredResult {
    bool value = false;
    int alpha = 0;  // common maximal size when value, else size of the first one seen
    // Two maximal stable sets of different sizes, when value is false.
    std::optional<std::pair<VertexSet, VertexSet>> witness;
};

// Every maximal stable set has the same cardinality.
inline WellCoveredResult is_well_covered(const Graph& g) {
    if (g.order() == 0)
        throw std::invalid_argument("is_well_covered: graph must have at least one vertex");
    WellCoveredResult r;
    VertexSet first;
    bool have_first = false;
    r.value = true;
    for_each_maximal_stable_set(g, [&](const VertexSet& s) {
        if (!have_first) {
            first = s;
            have_first = true;
            r.alpha = static_cast<int>(s.size());
            return true;
        }
        if (s.size() != first.size()) {
            r.value = false;
            r.witness = {first, s};
            if (s.size() > first.size()) r.alpha = static_cast<int>(s.size());
            return false;
        }
        return true;
    });
    return r;
}

// Well-covered, no isolated vertices, and order exactly 2*alpha.
inline bool is_very_well_covered(const Graph& g) {
    if (g.order() == 0)
        throw std::invalid_argument("is_very_well_covered: graph must have at least one vertex");
    if (has_isolated_vertex(g)) return false;
    WellCoveredResult wc = is_well_covered(g);
    return wc.value && g.order() == 2 * wc.alpha;
}

struct QuasiRegResult {
    bool value = false;
    std::optional<VertexSet> witness;  // a stable set with |S| > |N(S)|
};

namespace detail {

// Grow a violating stable set by vertices that do not shrink the
// deficiency |S| - |N(S)|, so the reported witness is as blatant as the
// enumeration's first hit allows (e.g. the full leaf set of a star).
inline VertexSet extend_deficient_witness(const Graph& g, VertexSet s) {
    std::vector<char> in_s(static_cast<std::size_t>(g.order()), 0);
    std::vector<char> in_nbhd(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : s) {
        in_s[static_cast<std::size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v)) in_nbhd[static_cast<std::size_t>(w)] = 1;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (in_s[static_cast<std::size_t>(v)] || in_nbhd[static_cast<std::size_t>(v)]) continue;
        int fresh = 0;
        for (Vertex w : g.neighbors(v))
            if (!in_nbhd[static_cast<std::size_t>(w)]) ++fresh;
        if (fresh > 1) continue;
        in_s[static_cast<std::size_t>(v)] = 1;
        s.insert(std::lower_bound(s.begin(), s.end(), v), v);
        for (Vertex w : g.neighbors(v)) in_nbhd[static_cast<std::size_t>(w)] = 1;
    }
    return s;
}

}  // namespace detail

// |S| <= |N(S)| for every nonempty stable set S.
inline QuasiRegResult is_quasi_regularizable(const Graph& g) {
    if (g.order() == 0)
        throw std::invalid_argument("is_quasi_regularizable: graph must have at least one vertex");
    QuasiRegResult r;
    r.value = true;
    for_each_stable_set(g, [&](const std::vector<Vertex>& s, int closed) {
        if (s.empty()) return true;
        int open_neighborhood = closed - static_cast<int>(s.size());
        if (static_cast<int>(s.size()) > open_neighborhood) {
            r.value = false;
            r.witness = detail::extend_deficient_witness(g, VertexSet(s.begin(), s.end()));
            return false;
        }
        return true;
    });
    return r;
}

enum class PerfectStatus { False, True, Skipped };

struct PerfectResult {
    PerfectStatus status = PerfectStatus::Skipped;
    std::optional<VertexSet> witness;  // vertex set spanning a violating subgraph

    std::optional<bool> value() const {
        if (status == PerfectStatus::Skipped) return std::nullopt;
        return status == PerfectStatus::True;
    }
};

// |V(H)| <= alpha(H) * omega(H) for every induced subgraph H, checked by
// subset tables of alpha over the graph and its complement.
inline PerfectResult is_perfect(const Graph& g, int max_n = kDefaultPerfectMaxVertices) {
    if (g.order() == 0)
        throw std::invalid_argument("is_perfect: graph must have at least one vertex");
    const int n = g.order();
    if (n > max_n || n > kPerfectHardCap) return {};

    auto alpha_table = [n](const Graph& h) {
        std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
        for (Vertex v = 0; v < n; ++v)
            for (Vertex w : h.neighbors(v)) adj[static_cast<std::size_t>(v)] |= 1u << w;
        std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
        for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
            int v = std::countr_zero(s);
            std::uint8_t skip = table[s & (s - 1)];
            std::uint8_t take =
                static_cast<std::uint8_t>(1 + table[s & ~(adj[static_cast<std::size_t>(v)] |
                                                          (1u << v))]);
            table[s] = std::max(skip, take);
        }
        return table;
    };
    auto alpha = alpha_table(g);
    auto omega = alpha_table(complement(g));

    for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
        int size = std::popcount(s);
        if (size > static_cast<int>(alpha[s]) * static_cast<int>(omega[s])) {
            PerfectResult r;
            r.status = PerfectStatus::False;
            VertexSet w;
            for (Vertex v = 0; v < n; ++v)
                if (s & (1u << v)) w.push_back(v);
            r.witness = std::move(w);
            return r;
        }
    }
    PerfectResult r;
    r.status = PerfectStatus::True;
    return r;
}

struct ClassReport {
    bool well_covered = false;
    bool very_well_covered = false;
    bool quasi_regularizable = false;
    std::optional<bool> perfect;  // absent when skipped for size
    bool bipartite = false;
    bool tree = false;
    std::optional<int> girth;  // absent = acyclic
    std::optional<std::string> witness;
};

namespace detail {

inline std::string vertex_set_string(const VertexSet& s) {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "}";
    return os.str();
}

}  // namespace detail

inline ClassReport classify(const Graph& g, int perfect_max_n = kDefaultPerfectMaxVertices) {
    if (g.order() == 0)
        throw std::invalid_argument("classify: graph must have at least one vertex");
    ClassReport r;
    std::string witness;

    WellCoveredResult wc = is_well_covered(g);
    r.well_covered = wc.value;
    if (!wc.value && wc.witness) {
        witness += "maximal stable sets of different sizes: " +
                   detail::vertex_set_string(wc.witness->first) + " and " +
                   detail::vertex_set_string(wc.witness->second);
    }
    r.very_well_covered = wc.value && !has_isolated_vertex(g) && g.order() == 2 * wc.alpha;

    QuasiRegResult qr = is_quasi_regularizable(g);
    r.quasi_regularizable = qr.value;
    if (!qr.value && qr.witness) {
        if (!witness.empty()) witness += "; ";
        witness += "stable set larger than its neighborhood: " +
                   detail::vertex_set_string(*qr.witness);
    }

    PerfectResult pf = is_perfect(g, perfect_max_n);
    r.perfect = pf.value();
    if (pf.status == PerfectStatus::False && pf.witness) {
        if (!witness.empty()) witness += "; ";
        witness += "induced subgraph on " + detail::vertex_set_string(*pf.witness) +
                   " exceeds alpha*omega";
    }

    r.bipartite = is_bipartite(g);
    r.tree = is_tree(g);
    r.girth = girth(g);
    if (!witness.empty()) r.witness = witness;
    return r;
}

namespace detail {

inline bool is_cycle_of_length(const Graph& g, int len) {
    if (g.order() != len || !is_connected(g)) return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

}  // namespace detail

// Compares the well-covered recognizer against the pendant-edge perfect
// matching criterion on connected graphs of girth >= 6 other than the
// one-vertex graph and the 7-cycle; the two must agree there, so any
// disagreement flags a bug.
inline Verdict finbow_check(const Graph& g) {
    if (g.order() == 0)
        throw std::invalid_argument("finbow_check: graph must have at least one vertex");
    Verdict v;
    v.statement_id = "finbow";
    auto gi = girth(g);
    bool girth_ok = !gi.has_value() || *gi >= 6;
    bool connected = is_connected(g);
    bool excluded = g.order() == 1 || detail::is_cycle_of_length(g, 7);
    if (!connected || !girth_ok || excluded) {
        v.premise = PremiseStatus::Fails;
        v.conclusion_holds = true;
        v.notes = !connected   ? "precondition fails: graph is not connected"
                  : !girth_ok  ? "precondition fails: girth < 6"
                  : g.order() == 1 ? "precondition fails: graph is the one-vertex graph"
                                   : "precondition fails: graph is the 7-cycle";
        return v;
    }
    v.premise = PremiseStatus::Holds;
    bool wc = is_well_covered(g).value;
    bool pm = pendant_edges_form_perfect_matching(g);
    v.conclusion_holds = (wc == pm);
    if (!v.conclusion_holds) {
        v.first_violation = Violation{0, BigInt(wc ? 1 : 0), BigInt(pm ? 1 : 0)};
        v.notes = "well-covered and pendant-matching disagree; implementation bug suspected";
    } else {
        v.notes = wc ? "well-covered with pendant perfect matching"
                     : "not well-covered and no pendant perfect matching";
    }
    return v;
}

}  // namespace indpoly
