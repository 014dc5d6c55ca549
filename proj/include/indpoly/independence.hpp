// Exact stable-set computations: the independence polynomial, stability
// and clique numbers, maximal stable set enumeration, and the residual
// profile omega_j = max{ n - |N[S]| : S stable, |S| = alpha - j }.
#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "polyseq.hpp"

namespace indpoly {

// Vertex-count ceiling guarding the exponential algorithms.
inline constexpr int kDefaultMaxVertices = 40;

class TooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void check_instance_size(const Graph& g, int max_n, const char* what) {
    if (g.order() > max_n)
        throw TooLargeError(std::string(what) + ": instance too large (" +
                            std::to_string(g.order()) + " vertices, ceiling " +
                            std::to_string(max_n) + ")");
}

namespace detail {

inline CoeffSeq binomial_row(int n) {
    std::vector<BigInt> c;
    c.reserve(static_cast<std::size_t>(n) + 1);
    BigInt b = 1;
    for (int k = 0; k <= n; ++k) {
        c.push_back(b);
        b = b * (n - k) / (k + 1);
    }
    return CoeffSeq(std::move(c));
}

// a + x*b
inline CoeffSeq shift_add(const CoeffSeq& a, const CoeffSeq& b) {
    std::vector<BigInt> out(std::max(a.size(), b.size() + 1), BigInt(0));
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k) - 1);
    return CoeffSeq(std::move(out));
}

// Deletion recursion I(G) = I(G-v) + x*I(G-N[v]) on a maximum-degree
// vertex v, factoring over connected components first.
inline CoeffSeq ip_recurse(const Graph& g) {
    const int n = g.order();
    if (n == 0) return CoeffSeq::one();
    if (g.edge_count() == 0) return binomial_row(n);

    auto comps = connected_components(g);
    if (comps.size() > 1) {
        CoeffSeq acc = CoeffSeq::one();
        for (const auto& comp : comps) acc = seq_mul(acc, ip_recurse(induced_subgraph(g, comp)));
        return acc;
    }

    Vertex pivot = 0;
    for (Vertex v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(pivot)) pivot = v;

    CoeffSeq without = ip_recurse(delete_vertex(g, pivot));
    CoeffSeq with_pivot = ip_recurse(delete_closed_neighborhood(g, {pivot}));
    return shift_add(without, with_pivot);
}

}  // namespace detail

// coeff[k] = number of stable sets of size k; degree = stability number.
inline CoeffSeq independence_polynomial(const Graph& g, int max_n = kDefaultMaxVertices) {
    check_instance_size(g, max_n, "independence_polynomial");
    return detail::ip_recurse(g);
}

// Independent oracle: enumerate every vertex subset and test stability.
inline CoeffSeq independence_polynomial_bruteforce(const Graph& g) {
    const int n = g.order();
    check_instance_size(g, 25, "independence_polynomial_bruteforce");
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= 1u << w;
    std::vector<long long> counts(static_cast<std::size_t>(n) + 1, 0);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        std::uint32_t m = static_cast<std::uint32_t>(mask);
        std::uint32_t rest = m;
        bool stable = true;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (adj[static_cast<std::size_t>(v)] & m) {
                stable = false;
                break;
            }
        }
        if (stable) ++counts[static_cast<std::size_t>(std::popcount(m))];
    }
    std::vector<BigInt> c(counts.begin(), counts.end());
    return CoeffSeq(std::move(c));
}

inline int stability_number(const Graph& g, int max_n = kDefaultMaxVertices) {
    return independence_polynomial(g, max_n).degree();
}

inline int clique_number(const Graph& g, int max_n = kDefaultMaxVertices) {
    return stability_number(complement(g), max_n);
}

// Visits every stable set exactly once (empty set first, then ascending
// lexicographic by labels), passing the members and |N[S]|. The visitor
// returns false to abort the walk; the function returns true iff it ran
// to completion.
template <typename Visit>
bool for_each_stable_set(const Graph& g, Visit&& visit) {
    const int n = g.order();
    std::vector<int> mark(static_cast<std::size_t>(n), 0);
    std::vector<Vertex> members;
    int closed = 0;
    bool alive = true;
    auto rec = [&](auto&& self, Vertex start) -> void {
        if (!visit(static_cast<const std::vector<Vertex>&>(members), closed)) {
            alive = false;
            return;
        }
        for (Vertex v = start; v < n && alive; ++v) {
            if (mark[static_cast<std::size_t>(v)]) continue;
            members.push_back(v);
            auto touch = [&](Vertex w) {
                if (mark[static_cast<std::size_t>(w)]++ == 0) ++closed;
            };
            touch(v);
            for (Vertex w : g.neighbors(v)) touch(w);
            self(self, v + 1);
            auto untouch = [&](Vertex w) {
                if (--mark[static_cast<std::size_t>(w)] == 0) --closed;
            };
            untouch(v);
            for (Vertex w : g.neighbors(v)) untouch(w);
            members.pop_back();
        }
    };
    rec(rec, 0);
    return alive;
}

// Bron-Kerbosch with pivoting over the non-adjacency relation. Visits
// each inclusion-maximal stable set exactly once in a deterministic
// order; the visitor returns false to abort.
template <typename Visit>
bool for_each_maximal_stable_set(const Graph& g, Visit&& visit) {
    const int n = g.order();
    if (n == 0)
        throw std::invalid_argument("maximal_stable_sets: graph must have at least one vertex");
    std::vector<std::vector<char>> nonadj(static_cast<std::size_t>(n),
                                          std::vector<char>(static_cast<std::size_t>(n), 1));
    for (Vertex v = 0; v < n; ++v) {
        nonadj[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] = 0;
        for (Vertex w : g.neighbors(v)) nonadj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = 0;
    }
    bool alive = true;
    auto bk = [&](auto&& self, VertexSet r, VertexSet p, VertexSet x) -> void {
        if (!alive) return;
        if (p.empty() && x.empty()) {
            alive = visit(static_cast<const VertexSet&>(r));
            return;
        }
        Vertex pivot = -1;
        int best = -1;
        auto consider = [&](Vertex u) {
            int cnt = 0;
            for (Vertex w : p)
                if (nonadj[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]) ++cnt;
            if (cnt > best) {
                best = cnt;
                pivot = u;
            }
        };
        for (Vertex u : p) consider(u);
        for (Vertex u : x) consider(u);
        VertexSet branch;
        for (Vertex v : p)
            if (!nonadj[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(v)])
                branch.push_back(v);
        for (Vertex v : branch) {
            VertexSet r2 = r;
            r2.insert(std::lower_bound(r2.begin(), r2.end(), v), v);
            VertexSet p2, x2;
            for (Vertex w : p)
                if (nonadj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)])
                    p2.push_back(w);
            for (Vertex w : x)
                if (nonadj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)])
                    x2.push_back(w);
            self(self, std::move(r2), std::move(p2), std::move(x2));
            if (!alive) return;
            p.erase(std::find(p.begin(), p.end(), v));
            x.insert(std::lower_bound(x.begin(), x.end(), v), v);
        }
    };
    VertexSet all(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) all[static_cast<std::size_t>(v)] = v;
    bk(bk, {}, std::move(all), {});
    return alive;
}

inline std::vector<VertexSet> maximal_stable_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_maximal_stable_set(g, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

struct OmegaProfile {
    int alpha = 0;
    int clique_number = 0;
    std::vector<int> omegas;  // omegas[j] holds omega_j for j = 0..alpha

    // omega_{alpha-k}, the bound paired with stable sets of size k.
    int omega_for_size(int k) const { return omegas[static_cast<std::size_t>(alpha - k)]; }
};

// omega_{alpha-k} = max{ n - |N[S]| : S stable, |S| = k } for k = 0..alpha.
inline OmegaProfile omega_profile(const Graph& g, int max_n = kDefaultMaxVertices) {
    if (g.order() == 0)
        throw std::invalid_argument("omega_profile: graph must have at least one vertex");
    check_instance_size(g, max_n, "omega_profile");
    const int n = g.order();
    std::vector<int> best;  // best[k] = max n - |N[S]| over |S| = k; -1 = unseen
    std::vector<int> mark(static_cast<std::size_t>(n), 0);
    int closed = 0;
    int depth = 0;
    auto rec = [&](auto&& self, Vertex start) -> void {
        const int ub = n - closed;
        if (depth >= static_cast<int>(best.size())) best.resize(static_cast<std::size_t>(depth) + 1, -1);
        if (ub > best[static_cast<std::size_t>(depth)]) best[static_cast<std::size_t>(depth)] = ub;
        int avail = 0;
        for (Vertex v = start; v < n; ++v)
            if (!mark[static_cast<std::size_t>(v)]) ++avail;
        if (avail == 0) return;
        // ub bounds every descendant; prune when no reachable size can improve.
        bool can_improve = false;
        for (int k = depth + 1; k <= depth + avail; ++k) {
            if (k >= static_cast<int>(best.size()) || best[static_cast<std::size_t>(k)] < ub) {
                can_improve = true;
                break;
            }
        }
        if (!can_improve) return;
        for (Vertex v = start; v < n; ++v) {
            if (mark[static_cast<std::size_t>(v)]) continue;
            auto touch = [&](Vertex w) {
                if (mark[static_cast<std::size_t>(w)]++ == 0) ++closed;
            };
            touch(v);
            for (Vertex w : g.neighbors(v)) touch(w);
            ++depth;
            self(self, v + 1);
            --depth;
            auto untouch = [&](Vertex w) {
                if (--mark[static_cast<std::size_t>(w)] == 0) --closed;
            };
            untouch(v);
            for (Vertex w : g.neighbors(v)) untouch(w);
        }
    };
    rec(rec, 0);

    OmegaProfile prof;
    prof.alpha = static_cast<int>(best.size()) - 1;
    prof.omegas.assign(static_cast<std::size_t>(prof.alpha) + 1, 0);
    for (int k = 0; k <= prof.alpha; ++k)
        prof.omegas[static_cast<std::size_t>(prof.alpha - k)] = best[static_cast<std::size_t>(k)];
    prof.clique_number = clique_number(g, max_n);
    return prof;
}

}  // namespace indpoly
