#ifndef SHADOWPOLY_GRAPH_HPP
#define SHADOWPOLY_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shadowpoly {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex range 0..n-1.
///
/// Adjacency is kept as sorted neighbor lists, so the same type serves tiny
/// pattern graphs and coloring graphs with hundreds of thousands of vertices.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : adj_(n) {}

    static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }
    static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
        return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    /// Adds the edge uv. Adding an existing edge is a no-op; loops are rejected.
    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        if (insert_sorted(adj_[u], v)) {
            insert_sorted(adj_[v], u);
            ++edge_count_;
        }
    }

    bool has_edge(Vertex u, Vertex v) const {
        if (u >= order() || v >= order()) return false;
        const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
        Vertex other = adj_[u].size() <= adj_[v].size() ? v : u;
        return std::binary_search(a.begin(), a.end(), other);
    }

    std::span<const Vertex> neighbors(Vertex v) const {
        check_vertex(v);
        return adj_[v];
    }

    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < order(); ++u)
            for (Vertex v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    std::vector<std::size_t> degrees() const {
        std::vector<std::size_t> out(order());
        for (Vertex v = 0; v < order(); ++v) out[v] = adj_[v].size();
        return out;
    }

    /// Subgraph induced on `vertices`; vertex i of the result is vertices[i].
    Graph induced(std::span<const Vertex> vertices) const {
        std::vector<std::int64_t> pos(order(), -1);
        for (std::size_t i = 0; i < vertices.size(); ++i) {
            check_vertex(vertices[i]);
            if (pos[vertices[i]] >= 0) throw std::invalid_argument("repeated vertex in induced()");
            pos[vertices[i]] = static_cast<std::int64_t>(i);
        }
        Graph h(vertices.size());
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (Vertex w : adj_[vertices[i]])
                if (pos[w] > static_cast<std::int64_t>(i))
                    h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(pos[w]));
        return h;
    }

    /// Relabels vertex v as perm[v].
    Graph relabeled(std::span<const Vertex> perm) const {
        if (perm.size() != order()) throw std::invalid_argument("permutation size mismatch");
        Graph h(order());
        for (auto [u, v] : edges()) h.add_edge(perm[u], perm[v]);
        return h;
    }

    /// Disjoint union; vertices of `other` are shifted by order().
    Graph disjoint_union(const Graph& other) const {
        Graph h(order() + other.order());
        for (auto [u, v] : edges()) h.add_edge(u, v);
        auto shift = static_cast<Vertex>(order());
        for (auto [u, v] : other.edges()) h.add_edge(u + shift, v + shift);
        return h;
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

private:
    void check_vertex(Vertex v) const {
        if (v >= order())
            throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph of order " +
                                    std::to_string(order()));
    }

    static bool insert_sorted(std::vector<Vertex>& list, Vertex v) {
        auto it = std::lower_bound(list.begin(), list.end(), v);
        if (it != list.end() && *it == v) return false;
        list.insert(it, v);
        return true;
    }

    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

/// A connected component together with the original index of each of its vertices.
struct Component {
    Graph graph;
    std::vector<Vertex> vertices;
};

inline std::vector<Component> connected_components(const Graph& g) {
    std::vector<Component> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> members{s};
        seen[s] = true;
        for (std::size_t head = 0; head < members.size(); ++head)
            for (Vertex w : g.neighbors(members[head]))
                if (!seen[w]) {
                    seen[w] = true;
                    members.push_back(w);
                }
        std::sort(members.begin(), members.end());
        out.push_back({g.induced(members), std::move(members)});
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    return connected_components(g).size() == 1;
}

inline bool is_tree(const Graph& g) {
    return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

/// Breadth-first order from `root`, visiting neighbors by increasing `rank`.
inline std::vector<Vertex> bfs_order(const Graph& g, Vertex root, std::span<const Vertex> rank) {
    std::vector<Vertex> order{root};
    std::vector<bool> seen(g.order(), false);
    seen[root] = true;
    for (std::size_t head = 0; head < order.size(); ++head) {
        std::vector<Vertex> next(g.neighbors(order[head]).begin(), g.neighbors(order[head]).end());
        std::sort(next.begin(), next.end(), [&](Vertex a, Vertex b) { return rank[a] < rank[b]; });
        for (Vertex w : next)
            if (!seen[w]) {
                seen[w] = true;
                order.push_back(w);
            }
    }
    return order;
}

/// True when every vertex after the first has a neighbor earlier in `order`
/// and `order` is a permutation of the vertex set.
inline bool is_connected_ordering(const Graph& g, std::span<const Vertex> order) {
    if (order.size() != g.order() || order.empty()) return false;
    std::vector<bool> placed(g.order(), false);
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex u = order[i];
        if (u >= g.order() || placed[u]) return false;
        if (i > 0) {
            auto nb = g.neighbors(u);
            if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return placed[w]; })) return false;
        }
        placed[u] = true;
    }
    return true;
}

namespace graphs {

inline Graph empty(std::size_t n) { return Graph(n); }

inline Graph complete(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

/// Path with n vertices (P_n in the vertex-count convention, so path(2) = K2).
inline Graph path(std::size_t n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

inline Graph cycle(std::size_t n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(0, static_cast<Vertex>(n - 1));
    return g;
}

inline Graph star(std::size_t leaves) {
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

/// Cartesian product of complete graphs K_{sizes[0]} x ... ; vertices are
/// mixed-radix tuples with the first coordinate least significant.
inline Graph clique_product(std::span<const std::size_t> sizes) {
    std::size_t n = 1;
    for (auto s : sizes) n *= s;
    Graph g(n);
    for (std::size_t a = 0; a < n; ++a) {
        std::size_t stride = 1;
        for (auto s : sizes) {
            std::size_t digit = (a / stride) % s;
            for (std::size_t other = digit + 1; other < s; ++other)
                g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(a + (other - digit) * stride));
            stride *= s;
        }
    }
    return g;
}

inline Graph clique_product(std::initializer_list<std::size_t> sizes) {
    return clique_product(std::span<const std::size_t>(sizes.begin(), sizes.size()));
}

inline Graph hypercube(std::size_t d) {
    std::vector<std::size_t> twos(d, 2);
    return clique_product(twos);
}

} // namespace graphs

} // namespace shadowpoly

#endif // SHADOWPOLY_GRAPH_HPP
