#ifndef SHADOWPOLY_CANONICAL_HPP
#define SHADOWPOLY_CANONICAL_HPP

// Canonical labeling and automorphism group order for small graphs.
//
// Individualization-refinement: the ordered partition is refined to an
// equitable one, a vertex of the first non-singleton cell is individualized,
// and the search recurses until the partition is discrete. The canonical form
// is the lexicographically largest relabeled adjacency matrix over all leaves.
// Branches are pruned with automorphisms found along the way (leaves with
// equal certificates) and with twin transpositions known up front.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shadowpoly/graph.hpp"
#include "shadowpoly/numeric.hpp"

namespace shadowpoly {

/// Isomorphism-class key: equal iff the graphs are isomorphic.
struct CanonicalKey {
    std::uint32_t order = 0;
    std::vector<std::uint64_t> rows;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey& k) const noexcept {
        std::size_t h = std::hash<std::uint32_t>{}(k.order);
        for (auto w : k.rows) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    }
};

struct CanonicalForm {
    CanonicalKey key;
    std::vector<Vertex> label;  // label[v] = canonical position of v
};

inline constexpr std::size_t kMaxCanonicalOrder = 64;

namespace detail {

using Mask = std::uint64_t;
using Cells = std::vector<std::vector<Vertex>>;

inline Mask bit(std::size_t i) { return Mask{1} << i; }

struct DenseGraph {
    std::size_t n = 0;
    std::vector<Mask> adj;

    DenseGraph(std::size_t order, std::vector<Mask> rows) : n(order), adj(std::move(rows)) {}
    explicit DenseGraph(const Graph& g) : n(g.order()), adj(g.order(), 0) {
        if (n > kMaxCanonicalOrder)
            throw std::length_error("canonical labeling supports at most 64 vertices, got " + std::to_string(n));
        for (auto [u, v] : g.edges()) {
            adj[u] |= bit(v);
            adj[v] |= bit(u);
        }
    }
};

/// Refines `cells` to the coarsest equitable partition below it. Cells split
/// by the vector of neighbor counts into every current cell; the new cells are
/// ordered by that vector, which keeps the procedure label-invariant.
inline void refine(const DenseGraph& g, Cells& cells) {
    for (;;) {
        std::vector<Mask> masks(cells.size(), 0);
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (Vertex v : cells[c]) masks[c] |= bit(v);

        Cells next;
        next.reserve(g.n);
        std::vector<std::pair<std::vector<std::uint8_t>, Vertex>> sig;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            sig.clear();
            for (Vertex v : cell) {
                std::vector<std::uint8_t> s(masks.size());
                for (std::size_t c = 0; c < masks.size(); ++c)
                    s[c] = static_cast<std::uint8_t>(std::popcount(g.adj[v] & masks[c]));
                sig.emplace_back(std::move(s), v);
            }
            std::sort(sig.begin(), sig.end());
            for (std::size_t i = 0; i < sig.size();) {
                std::size_t j = i;
                std::vector<Vertex> part;
                while (j < sig.size() && sig[j].first == sig[i].first) part.push_back(sig[j++].second);
                next.push_back(std::move(part));
                i = j;
            }
        }
        bool stable = next.size() == cells.size();
        cells = std::move(next);
        if (stable) return;
    }
}

inline std::optional<std::size_t> target_cell(const Cells& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c)
        if (cells[c].size() > 1) return c;
    return std::nullopt;
}

inline Cells individualize(const Cells& cells, std::size_t cell, Vertex v) {
    Cells out;
    out.reserve(cells.size() + 1);
    for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != cell) {
            out.push_back(cells[c]);
            continue;
        }
        out.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[c])
            if (w != v) rest.push_back(w);
        out.push_back(std::move(rest));
    }
    return out;
}

struct Leaf {
    std::vector<Vertex> order;  // order[i] = vertex at canonical position i
    std::vector<Mask> rows;
};

inline Leaf make_leaf(const DenseGraph& g, const Cells& cells) {
    Leaf leaf;
    leaf.order.reserve(g.n);
    for (const auto& c : cells) leaf.order.push_back(c.front());
    std::vector<std::size_t> pos(g.n);
    for (std::size_t i = 0; i < g.n; ++i) pos[leaf.order[i]] = i;
    leaf.rows.assign(g.n, 0);
    for (std::size_t i = 0; i < g.n; ++i) {
        Mask m = g.adj[leaf.order[i]];
        while (m) {
            int w = std::countr_zero(m);
            m &= m - 1;
            leaf.rows[i] |= bit(pos[static_cast<std::size_t>(w)]);
        }
    }
    return leaf;
}

/// Transpositions of twin vertices (same neighborhood apart from each other).
inline std::vector<std::vector<Vertex>> twin_generators(const DenseGraph& g) {
    std::vector<std::vector<Vertex>> gens;
    for (std::size_t u = 0; u < g.n; ++u)
        for (std::size_t v = u + 1; v < g.n; ++v)
            if ((g.adj[u] & ~bit(v)) == (g.adj[v] & ~bit(u))) {
                std::vector<Vertex> p(g.n);
                std::iota(p.begin(), p.end(), Vertex{0});
                std::swap(p[u], p[v]);
                gens.push_back(std::move(p));
                break;
            }
    return gens;
}

/// Orbit representatives under the generators that fix `fixed` pointwise.
class OrbitFilter {
public:
    OrbitFilter(const std::vector<std::vector<Vertex>>& gens, const std::vector<Vertex>& fixed, std::size_t n)
        : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
        for (const auto& p : gens) {
            bool keeps = std::all_of(fixed.begin(), fixed.end(), [&](Vertex f) { return p[f] == f; });
            if (!keeps) continue;
            for (std::size_t v = 0; v < n; ++v) unite(v, p[v]);
        }
    }
    std::size_t find(std::size_t v) {
        while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
        return v;
    }

private:
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }
    std::vector<std::size_t> parent_;
};

class CanonSearch {
public:
    explicit CanonSearch(const DenseGraph& g) : g_(g), gens_(twin_generators(g)) {}

    Leaf run() {
        Cells root;
        if (g_.n > 0) {
            root.emplace_back(g_.n);
            std::iota(root.front().begin(), root.front().end(), Vertex{0});
        }
        std::vector<Vertex> fixed;
        dfs(std::move(root), fixed);
        return best_ ? *best_ : Leaf{};
    }

private:
    void dfs(Cells cells, std::vector<Vertex>& fixed) {
        refine(g_, cells);
        auto t = target_cell(cells);
        if (!t) {
            on_leaf(make_leaf(g_, cells));
            return;
        }
        std::vector<std::size_t> tried_roots;
        for (Vertex v : std::vector<Vertex>(cells[*t])) {
            OrbitFilter orbits(gens_, fixed, g_.n);
            std::size_t r = orbits.find(v);
            bool seen = false;
            for (auto tr : tried_roots)
                if (orbits.find(tr) == r) seen = true;
            if (seen) continue;
            tried_roots.push_back(v);
            fixed.push_back(v);
            dfs(individualize(cells, *t, v), fixed);
            fixed.pop_back();
        }
    }

    void on_leaf(Leaf leaf) {
        if (!first_) {
            first_ = leaf;
            best_ = std::move(leaf);
            return;
        }
        if (leaf.rows == first_->rows) {
            record_automorphism(*first_, leaf);
            return;
        }
        if (leaf.rows == best_->rows) {
            record_automorphism(*best_, leaf);
            return;
        }
        if (leaf.rows > best_->rows) best_ = std::move(leaf);
    }

    void record_automorphism(const Leaf& from, const Leaf& to) {
        std::vector<Vertex> p(g_.n);
        bool identity = true;
        for (std::size_t i = 0; i < g_.n; ++i) {
            p[from.order[i]] = to.order[i];
            if (from.order[i] != to.order[i]) identity = false;
        }
        if (!identity) gens_.push_back(std::move(p));
    }

    const DenseGraph& g_;
    std::vector<std::vector<Vertex>> gens_;
    std::optional<Leaf> first_;
    std::optional<Leaf> best_;
};

/// Leftmost leaf below `cells`.
inline Leaf first_leaf(const DenseGraph& g, Cells cells) {
    for (;;) {
        refine(g, cells);
        auto t = target_cell(cells);
        if (!t) return make_leaf(g, cells);
        cells = individualize(cells, *t, cells[*t].front());
    }
}

/// Whether some leaf below `cells` has adjacency rows equal to `target`.
inline bool has_leaf_with(const DenseGraph& g, Cells cells, const std::vector<Mask>& target,
                          const std::vector<std::vector<Vertex>>& twins, std::vector<Vertex>& fixed) {
    refine(g, cells);
    auto t = target_cell(cells);
    if (!t) return make_leaf(g, cells).rows == target;
    OrbitFilter orbits(twins, fixed, g.n);
    std::vector<std::size_t> tried;
    for (Vertex v : cells[*t]) {
        std::size_t r = orbits.find(v);
        if (std::find(tried.begin(), tried.end(), r) != tried.end()) continue;
        tried.push_back(r);
        fixed.push_back(v);
        bool found = has_leaf_with(g, individualize(cells, *t, v), target, twins, fixed);
        fixed.pop_back();
        if (found) return true;
    }
    return false;
}

/// |Aut| of the stabilizer of the individualized vertices, by orbit-stabilizer
/// along the leftmost branch.
inline BigInt stabilizer_order(const DenseGraph& g, Cells cells, const std::vector<std::vector<Vertex>>& twins,
                               std::vector<Vertex>& fixed) {
    refine(g, cells);
    auto t = target_cell(cells);
    if (!t) return 1;
    const auto cell = cells[*t];
    Vertex v = cell.front();
    Leaf ref = first_leaf(g, individualize(cells, *t, v));
    std::uint64_t orbit = 1;
    for (std::size_t i = 1; i < cell.size(); ++i) {
        fixed.push_back(cell[i]);
        if (has_leaf_with(g, individualize(cells, *t, cell[i]), ref.rows, twins, fixed)) ++orbit;
        fixed.pop_back();
    }
    fixed.push_back(v);
    BigInt rest = stabilizer_order(g, individualize(cells, *t, v), twins, fixed);
    fixed.pop_back();
    return rest * orbit;
}

} // namespace detail

inline CanonicalForm canonical_form(const detail::DenseGraph& dg) {
    detail::Leaf leaf = detail::CanonSearch(dg).run();
    CanonicalForm out;
    out.key.order = static_cast<std::uint32_t>(dg.n);
    out.key.rows = std::move(leaf.rows);
    out.label.assign(dg.n, 0);
    for (std::size_t i = 0; i < leaf.order.size(); ++i) out.label[leaf.order[i]] = static_cast<Vertex>(i);
    return out;
}

inline CanonicalForm canonical_form(const Graph& g) { return canonical_form(detail::DenseGraph(g)); }

inline CanonicalKey canonical_key(const Graph& g) { return canonical_form(g).key; }

/// The graph relabeled into its canonical form.
inline Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_form(g).label); }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

/// Exact order of the automorphism group.
inline BigInt automorphism_order(const Graph& g) {
    detail::DenseGraph dg(g);
    if (dg.n == 0) return 1;
    detail::Cells root(1);
    root.front().resize(dg.n);
    std::iota(root.front().begin(), root.front().end(), Vertex{0});
    auto twins = detail::twin_generators(dg);
    std::vector<Vertex> fixed;
    return detail::stabilizer_order(dg, std::move(root), twins, fixed);
}

/// Deterministic connected ordering: breadth-first search from the vertex
/// with canonical position 0, ties broken by canonical position.
inline std::vector<Vertex> connected_ordering(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("connected_ordering: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("connected_ordering: graph is disconnected");
    // root: a vertex of maximum degree, ties broken by canonical label, so a
    // star starts at its center
    auto form = canonical_form(g);
    Vertex root = 0;
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) > g.degree(root) || (g.degree(v) == g.degree(root) && form.label[v] < form.label[root]))
            root = v;
    return bfs_order(g, root, form.label);
}

} // namespace shadowpoly

#endif // SHADOWPOLY_CANONICAL_HPP
