#ifndef SHADOWPOLY_GENERATE_HPP
#define SHADOWPOLY_GENERATE_HPP

// Exhaustive small-graph generation, one representative per isomorphism
// class. Every graph on n vertices is a graph on n - 1 vertices plus a vertex
// joined to some subset, so classes are grown one vertex at a time and
// deduplicated by canonical key.

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "shadowpoly/canonical.hpp"
#include "shadowpoly/graph.hpp"

namespace shadowpoly {

/// Representatives (canonically labeled) of all graphs on exactly n
/// vertices, sorted by canonical key.
inline std::vector<Graph> all_graphs(std::size_t n) {
    if (n > 10) throw std::invalid_argument("all_graphs: n > 10 is out of reach");
    std::vector<Graph> layer{Graph(0)};
    for (std::size_t m = 1; m <= n; ++m) {
        std::map<CanonicalKey, Graph> next;
        for (const Graph& g : layer)
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (m - 1)); ++mask) {
                Graph h(m);
                for (auto [u, v] : g.edges()) h.add_edge(u, v);
                for (Vertex u = 0; u + 1 < m; ++u)
                    if (mask >> u & 1) h.add_edge(u, static_cast<Vertex>(m - 1));
                auto form = canonical_form(h);
                if (!next.contains(form.key)) next.emplace(form.key, h.relabeled(form.label));
            }
        layer.clear();
        for (auto& [key, g] : next) layer.push_back(std::move(g));
    }
    return layer;
}

/// All graphs on at most n vertices, by increasing order.
inline std::vector<Graph> all_graphs_upto(std::size_t n, bool connected_only = false) {
    std::vector<Graph> out;
    for (std::size_t m = 0; m <= n; ++m)
        for (auto& g : all_graphs(m))
            if (!connected_only || (m > 0 && is_connected(g))) out.push_back(std::move(g));
    return out;
}

/// Representatives of all trees on n >= 1 vertices: every tree on n vertices
/// is a tree on n - 1 vertices plus a leaf.
inline std::vector<Graph> all_trees(std::size_t n) {
    if (n == 0) throw std::invalid_argument("all_trees: a tree has at least one vertex");
    std::vector<Graph> layer{Graph(1)};
    for (std::size_t m = 2; m <= n; ++m) {
        std::map<CanonicalKey, Graph> next;
        for (const Graph& t : layer)
            for (Vertex p = 0; p + 1 < m; ++p) {
                Graph h(m);
                for (auto [u, v] : t.edges()) h.add_edge(u, v);
                h.add_edge(p, static_cast<Vertex>(m - 1));
                auto form = canonical_form(h);
                if (!next.contains(form.key)) next.emplace(form.key, h.relabeled(form.label));
            }
        layer.clear();
        for (auto& [key, g] : next) layer.push_back(std::move(g));
    }
    return layer;
}

} // namespace shadowpoly

#endif // SHADOWPOLY_GENERATE_HPP
