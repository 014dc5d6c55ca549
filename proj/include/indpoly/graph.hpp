// Immutable simple-graph value type plus the structural edits and
// predicates the rest of the library is built on.
#pragma once

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indpoly {

using Vertex = int;

// Sorted, duplicate-free list of vertex labels.
using VertexSet = std::vector<Vertex>;

using Edge = std::pair<Vertex, Vertex>;  // stored with first < second

inline VertexSet normalized_vertex_set(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

// Simple undirected graph with dense labels 0..n-1. Values are immutable:
// every edit returns a new graph, so graphs can be shared freely.
class Graph {
public:
    Graph() = default;

    static Graph make(int n, const std::vector<Edge>& edges) {
        if (n < 0) throw std::invalid_argument("graph: vertex count must be nonnegative");
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<std::size_t>(n), {});
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("graph: edge endpoint " +
                                            std::to_string(u < 0 || u >= n ? u : v) +
                                            " out of range 0.." + std::to_string(n - 1));
            if (u == v)
                throw std::invalid_argument("graph: loop edge (" + std::to_string(u) + "," +
                                            std::to_string(v) + ") not allowed");
            g.adj_[static_cast<std::size_t>(u)].push_back(v);
            g.adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& row : g.adj_) {
            std::sort(row.begin(), row.end());
            row.erase(std::unique(row.begin(), row.end()), row.end());
        }
        return g;
    }

    int order() const { return n_; }

    int edge_count() const {
        std::size_t deg_sum = 0;
        for (const auto& row : adj_) deg_sum += row.size();
        return static_cast<int>(deg_sum / 2);
    }

    const std::vector<Vertex>& neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool has_edge(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& row = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(row.begin(), row.end(), v);
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (Vertex u = 0; u < n_; ++u)
            for (Vertex v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(Vertex v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("graph: vertex " + std::to_string(v) +
                                        " out of range 0.." + std::to_string(n_ - 1));
    }

    int n_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

// G[X]: vertices of X relabeled 0..|X|-1 in ascending original order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& x) {
    VertexSet keep = normalized_vertex_set(x);
    std::vector<int> new_label(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) {
        Vertex v = keep[i];
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("induced_subgraph: vertex " + std::to_string(v) +
                                        " out of range");
        new_label[static_cast<std::size_t>(v)] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (Vertex u : keep)
        for (Vertex v : g.neighbors(u))
            if (u < v && new_label[static_cast<std::size_t>(v)] >= 0)
                edges.emplace_back(new_label[static_cast<std::size_t>(u)],
                                   new_label[static_cast<std::size_t>(v)]);
    return Graph::make(static_cast<int>(keep.size()), edges);
}

// N[S] = S together with every neighbor of S.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : s) {
        if (v < 0 || v >= g.order())
            throw std::invalid_argument("closed_neighborhood: vertex out of range");
        in[static_cast<std::size_t>(v)] = 1;
        for (Vertex w : g.neighbors(v)) in[static_cast<std::size_t>(w)] = 1;
    }
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v)
        if (in[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

// G - N[S], relabeled densely.
inline Graph delete_closed_neighborhood(const Graph& g, const VertexSet& s) {
    std::vector<char> drop(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : closed_neighborhood(g, s)) drop[static_cast<std::size_t>(v)] = 1;
    VertexSet keep;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!drop[static_cast<std::size_t>(v)]) keep.push_back(v);
    return induced_subgraph(g, keep);
}

inline Graph add_edge(const Graph& g, Vertex u, Vertex v) {
    if (u == v)
        throw std::invalid_argument("add_edge: loop edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") not allowed");
    auto edges = g.edges();
    if (!g.has_edge(u, v)) edges.emplace_back(std::min(u, v), std::max(u, v));
    return Graph::make(g.order(), edges);
}

inline Graph delete_edge(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("delete_edge: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") is not an edge");
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (e != Edge{std::min(u, v), std::max(u, v)}) edges.push_back(e);
    return Graph::make(g.order(), edges);
}

inline Graph delete_vertex(const Graph& g, Vertex v) {
    if (v < 0 || v >= g.order())
        throw std::invalid_argument("delete_vertex: vertex out of range");
    VertexSet keep;
    for (Vertex u = 0; u < g.order(); ++u)
        if (u != v) keep.push_back(u);
    return induced_subgraph(g, keep);
}

inline Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph::make(g.order(), edges);
}

// G1 then G2 with G2's labels shifted by |V(G1)|; no cross edges.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    std::vector<Edge> edges = g1.edges();
    for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + g1.order(), v + g1.order());
    return Graph::make(g1.order() + g2.order(), edges);
}

// Disjoint union plus all cross edges.
inline Graph zykov_sum(const Graph& g1, const Graph& g2) {
    std::vector<Edge> edges = g1.edges();
    for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + g1.order(), v + g1.order());
    for (Vertex u = 0; u < g1.order(); ++u)
        for (Vertex v = 0; v < g2.order(); ++v) edges.emplace_back(u, g1.order() + v);
    return Graph::make(g1.order() + g2.order(), edges);
}

// Appends one new pendant neighbor n+v to each vertex v.
inline Graph star_graph(const Graph& g) {
    if (g.order() == 0)
        throw std::invalid_argument("star_graph: graph must have at least one vertex");
    std::vector<Edge> edges = g.edges();
    for (Vertex v = 0; v < g.order(); ++v) edges.emplace_back(v, g.order() + v);
    return Graph::make(2 * g.order(), edges);
}

inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        VertexSet comp;
        std::vector<Vertex> stack{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (Vertex w : g.neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) {
    return g.order() > 0 && connected_components(g).size() == 1;
}

// Length of a shortest cycle; empty for acyclic graphs.
inline std::optional<int> girth(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("girth: graph must have at least one vertex");
    int best = -1;
    std::vector<int> dist(static_cast<std::size_t>(g.order()));
    std::vector<Vertex> parent(static_cast<std::size_t>(g.order()));
    for (Vertex root = 0; root < g.order(); ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<Vertex> q;
        dist[static_cast<std::size_t>(root)] = 0;
        q.push(root);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                if (dist[static_cast<std::size_t>(w)] == -1) {
                    dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
                    parent[static_cast<std::size_t>(w)] = u;
                    q.push(w);
                } else if (w != parent[static_cast<std::size_t>(u)]) {
                    int len = dist[static_cast<std::size_t>(u)] +
                              dist[static_cast<std::size_t>(w)] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) return std::nullopt;
    return best;
}

inline bool is_bipartite(const Graph& g) {
    std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : g.neighbors(u)) {
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(u)];
                    q.push(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(u)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_tree(const Graph& g) {
    return is_connected(g) && g.edge_count() == g.order() - 1;
}

// Edges with at least one endpoint of degree 1.
inline std::vector<Edge> pendant_edges(const Graph& g) {
    std::vector<Edge> out;
    for (const auto& e : g.edges())
        if (g.degree(e.first) == 1 || g.degree(e.second) == 1) out.push_back(e);
    return out;
}

// True iff the pendant edges are pairwise disjoint and cover every vertex.
inline bool pendant_edges_form_perfect_matching(const Graph& g) {
    if (g.order() == 0)
        throw std::invalid_argument("pendant matching test: graph must have at least one vertex");
    std::vector<char> covered(static_cast<std::size_t>(g.order()), 0);
    for (const auto& [u, v] : pendant_edges(g)) {
        if (covered[static_cast<std::size_t>(u)] || covered[static_cast<std::size_t>(v)])
            return false;
        covered[static_cast<std::size_t>(u)] = 1;
        covered[static_cast<std::size_t>(v)] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

inline bool has_isolated_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

// Named families used throughout.

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::make(n, edges);
}

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::make(n, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: a cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(std::min(v, (v + 1) % n),
                                                      std::max(v, (v + 1) % n));
    return Graph::make(n, edges);
}

inline Graph edgeless_graph(int n) { return Graph::make(n, {}); }

// Parts 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Graph::make(a + b, edges);
}

}  // namespace indpoly
