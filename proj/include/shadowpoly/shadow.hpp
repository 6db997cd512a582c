#ifndef SHADOWPOLY_SHADOW_HPP
#define SHADOWPOLY_SHADOW_HPP

// Shadow graphs.
//
// A shadow graph of G on a tuple x = (v_1, ..., v_d) replaces each v_i by a
// clique of shadow vertices v_{i,1..r_i}, each joined to N(v_i) \ x. Vertices
// outside x keep their adjacency. Edges between two shadow cliques are only
// ever present when the underlying base vertices are adjacent; which of them
// are present depends on the construction.
//
// Layout: surviving original vertices first, in increasing index order, then
// shadow vertices ordered by position i in x and palette index j.

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "shadowpoly/graph.hpp"
#include "shadowpoly/statemap.hpp"

namespace shadowpoly {

struct ShadowVertex {
    bool is_shadow = false;
    Vertex base = 0;         // vertex of G this one stands for
    std::size_t slot = 0;    // position i in x (shadow vertices only)
    std::size_t palette = 0; // palette index j, 1-based (shadow vertices only)

    friend bool operator==(const ShadowVertex&, const ShadowVertex&) = default;
};

struct ShadowGraph {
    Graph graph;
    std::vector<ShadowVertex> provenance;
};

namespace detail {

/// Skeleton shared by every construction: originals, shadow cliques, and the
/// joins from each clique to the base neighbors outside x. Returns the index
/// of shadow vertex (i, j) through `shadow_index[i][j - 1]`.
inline ShadowGraph shadow_skeleton(const Graph& g, std::span<const Vertex> x, std::span<const std::size_t> sizes,
                                   std::vector<std::vector<Vertex>>& shadow_index) {
    if (x.size() != sizes.size()) throw std::invalid_argument("shadow: tuple and palette sizes differ in length");
    std::vector<int> slot_of(g.order(), -1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] >= g.order()) throw std::out_of_range("shadow: vertex " + std::to_string(x[i]) + " out of range");
        if (slot_of[x[i]] >= 0) throw std::invalid_argument("shadow: repeated vertex in tuple");
        if (sizes[i] < 2) throw std::invalid_argument("shadow: palette sizes must be at least 2");
        slot_of[x[i]] = static_cast<int>(i);
    }

    ShadowGraph s;
    std::vector<Vertex> new_index(g.order(), 0);
    for (Vertex w = 0; w < g.order(); ++w)
        if (slot_of[w] < 0) {
            new_index[w] = static_cast<Vertex>(s.provenance.size());
            s.provenance.push_back({false, w, 0, 0});
        }
    shadow_index.assign(x.size(), {});
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 1; j <= sizes[i]; ++j) {
            shadow_index[i].push_back(static_cast<Vertex>(s.provenance.size()));
            s.provenance.push_back({true, x[i], i, j});
        }

    s.graph = Graph(s.provenance.size());
    for (auto [u, v] : g.edges()) {
        int su = slot_of[u], sv = slot_of[v];
        if (su < 0 && sv < 0) {
            s.graph.add_edge(new_index[u], new_index[v]);
        } else if (su >= 0 && sv < 0) {
            for (Vertex a : shadow_index[static_cast<std::size_t>(su)]) s.graph.add_edge(a, new_index[v]);
        } else if (su < 0 && sv >= 0) {
            for (Vertex a : shadow_index[static_cast<std::size_t>(sv)]) s.graph.add_edge(a, new_index[u]);
        }
    }
    for (const auto& clique : shadow_index)
        for (std::size_t a = 0; a < clique.size(); ++a)
            for (std::size_t b = a + 1; b < clique.size(); ++b) s.graph.add_edge(clique[a], clique[b]);
    return s;
}

} // namespace detail

/// G_v for P2: v becomes two adjacent copies, both joined to N(v).
inline ShadowGraph shadow_p2(const Graph& g, Vertex v) {
    if (v >= g.order()) throw std::out_of_range("shadow_p2: vertex " + std::to_string(v) + " out of range");
    ShadowGraph s;
    std::vector<Vertex> idx(g.order());
    for (Vertex w = 0; w < g.order(); ++w)
        if (w != v) {
            idx[w] = static_cast<Vertex>(s.provenance.size());
            s.provenance.push_back({false, w, 0, 0});
        }
    auto v1 = static_cast<Vertex>(s.provenance.size());
    s.provenance.push_back({true, v, 0, 1});
    s.provenance.push_back({true, v, 0, 2});
    Vertex v2 = v1 + 1;
    s.graph = Graph(s.provenance.size());
    for (auto [a, b] : g.edges())
        if (a != v && b != v) s.graph.add_edge(idx[a], idx[b]);
    s.graph.add_edge(v1, v2);
    for (Vertex w : g.neighbors(v)) {
        s.graph.add_edge(idx[w], v1);
        s.graph.add_edge(idx[w], v2);
    }
    return s;
}

/// G_v for K_r: v becomes an r-clique joined to N(v).
inline ShadowGraph shadow_clique(const Graph& g, Vertex v, std::size_t r) {
    if (r < 2) throw std::invalid_argument("shadow_clique: r must be at least 2");
    std::vector<std::vector<Vertex>> index;
    Vertex x[] = {v};
    std::size_t sizes[] = {r};
    return detail::shadow_skeleton(g, x, sizes, index);
}

/// G_x for a Cartesian product of cliques: shadow cliques of adjacent base
/// vertices are fully joined.
inline ShadowGraph shadow_product(const Graph& g, std::span<const Vertex> x, std::span<const std::size_t> sizes) {
    std::vector<std::vector<Vertex>> index;
    ShadowGraph s = detail::shadow_skeleton(g, x, sizes, index);
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = a + 1; b < x.size(); ++b)
            if (g.has_edge(x[a], x[b]))
                for (Vertex p : index[a])
                    for (Vertex q : index[b]) s.graph.add_edge(p, q);
    return s;
}

/// G_{f,x}: shadow cliques sized by f's palettes; for every state tuple and
/// every adjacent pair v_a, v_b in x, the shadows selected by that state are
/// joined.
inline ShadowGraph shadow_general(const Graph& g, std::span<const Vertex> x, const StateMap& f) {
    if (x.size() != f.dims)
        throw std::invalid_argument("shadow_general: tuple length " + std::to_string(x.size()) +
                                    " does not match state map dimension " + std::to_string(f.dims));
    std::vector<std::size_t> sizes(f.palette_sizes.begin(), f.palette_sizes.end());
    std::vector<std::vector<Vertex>> index;
    ShadowGraph s = detail::shadow_skeleton(g, x, sizes, index);
    for (std::size_t a = 0; a < x.size(); ++a)
        for (std::size_t b = a + 1; b < x.size(); ++b) {
            if (!g.has_edge(x[a], x[b])) continue;
            for (const auto& t : f.assignment)
                s.graph.add_edge(index[a][static_cast<std::size_t>(t[a] - 1)],
                                 index[b][static_cast<std::size_t>(t[b] - 1)]);
        }
    return s;
}

/// Checks the structural invariants shared by every shadow construction.
inline bool is_valid_shadow(const ShadowGraph& s, const Graph& g) {
    const auto& p = s.provenance;
    if (p.size() != s.graph.order()) return false;
    for (Vertex a = 0; a < p.size(); ++a)
        for (Vertex b = a + 1; b < p.size(); ++b) {
            bool e = s.graph.has_edge(a, b);
            const auto &u = p[a], &v = p[b];
            if (!u.is_shadow && !v.is_shadow) {
                if (e != g.has_edge(u.base, v.base)) return false;
            } else if (u.is_shadow != v.is_shadow) {
                if (e != g.has_edge(u.base, v.base)) return false;
            } else if (u.slot == v.slot) {
                if (!e || u.base != v.base) return false;
            } else if (e && !g.has_edge(u.base, v.base)) {
                return false;
            }
        }
    return true;
}

} // namespace shadowpoly

#endif // SHADOWPOLY_SHADOW_HPP
