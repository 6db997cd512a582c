#ifndef SHADOWPOLY_CHROMATIC_HPP
#define SHADOWPOLY_CHROMATIC_HPP

// Chromatic polynomials by deletion-contraction.
//
// Before recursing, each graph is split into components, recognized as a tree
// or a complete graph, and stripped of simplicial vertices (a vertex whose
// neighborhood is a clique of size s contributes a factor k - s). Remaining
// graphs of order >= 3 are memoized by canonical key.

#include <bit>
#include <cstddef>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "shadowpoly/canonical.hpp"
#include "shadowpoly/graph.hpp"
#include "shadowpoly/poly.hpp"

namespace shadowpoly {

/// Canonical key -> chromatic polynomial. Safe for concurrent use; two
/// threads may compute the same entry, and both store the same value.
class ChromaticCache {
public:
    std::optional<IntegerPoly> find(const CanonicalKey& key) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void insert(const CanonicalKey& key, const IntegerPoly& p) {
        std::unique_lock lock(mutex_);
        map_.emplace(key, p);
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }

    void clear() {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<CanonicalKey, IntegerPoly, CanonicalKeyHash> map_;
};

namespace detail {

inline std::size_t edge_count(const DenseGraph& g) {
    std::size_t twice = 0;
    for (auto m : g.adj) twice += static_cast<std::size_t>(std::popcount(m));
    return twice / 2;
}

inline Mask remove_bit(Mask m, std::size_t v) {
    Mask low = m & (bit(v) - 1);
    Mask high = v + 1 < 64 ? (m >> (v + 1)) << v : 0;
    return low | high;
}

inline DenseGraph without_vertex(const DenseGraph& g, std::size_t v) {
    std::vector<Mask> rows;
    rows.reserve(g.n - 1);
    for (std::size_t u = 0; u < g.n; ++u)
        if (u != v) rows.push_back(remove_bit(g.adj[u], v));
    return DenseGraph(g.n - 1, std::move(rows));
}

inline DenseGraph induced_on(const DenseGraph& g, Mask keep) {
    std::vector<std::size_t> idx;
    for (std::size_t v = 0; v < g.n; ++v)
        if (keep & bit(v)) idx.push_back(v);
    std::vector<Mask> rows(idx.size(), 0);
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = 0; j < idx.size(); ++j)
            if (g.adj[idx[i]] & bit(idx[j])) rows[i] |= bit(j);
    return DenseGraph(idx.size(), std::move(rows));
}

inline std::vector<Mask> component_masks(const DenseGraph& g) {
    std::vector<Mask> out;
    Mask all = g.n == 64 ? ~Mask{0} : bit(g.n) - 1;
    Mask seen = 0;
    while (seen != all) {
        Mask comp = bit(static_cast<std::size_t>(std::countr_zero(all & ~seen)));
        Mask frontier = comp;
        while (frontier) {
            Mask next = 0;
            Mask f = frontier;
            while (f) {
                next |= g.adj[static_cast<std::size_t>(std::countr_zero(f))];
                f &= f - 1;
            }
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        out.push_back(comp);
    }
    return out;
}

/// A vertex whose neighborhood is a clique, with that clique's size.
inline std::optional<std::pair<std::size_t, std::size_t>> find_simplicial(const DenseGraph& g) {
    for (std::size_t v = 0; v < g.n; ++v) {
        Mask nb = g.adj[v];
        bool clique = true;
        for (Mask m = nb; m && clique; m &= m - 1) {
            auto u = static_cast<std::size_t>(std::countr_zero(m));
            if ((nb & ~(g.adj[u] | bit(u))) != 0) clique = false;
        }
        if (clique) return std::pair{v, static_cast<std::size_t>(std::popcount(nb))};
    }
    return std::nullopt;
}

class ChromaticSolver {
public:
    explicit ChromaticSolver(ChromaticCache& cache) : cache_(cache) {}

    IntegerPoly solve(const DenseGraph& g) {
        const std::size_t n = g.n;
        if (n == 0) return IntegerPoly::constant(1);
        const std::size_t m = edge_count(g);
        if (n <= 2) return m == 0 ? IntegerPoly::monomial(1, n) : falling_factorial(2);

        auto comps = component_masks(g);
        if (comps.size() > 1) {
            IntegerPoly p = IntegerPoly::constant(1);
            for (auto c : comps) p *= solve(induced_on(g, c));
            return p;
        }
        if (m + 1 == n) return tree_term(static_cast<unsigned>(n - 1), 0, 0);
        if (2 * m == n * (n - 1)) return falling_factorial(n);

        if (auto s = find_simplicial(g))
            return IntegerPoly::shifted_variable(BigInt(s->second)) * solve(without_vertex(g, s->first));

        CanonicalKey key = canonical_form(g).key;
        if (auto hit = cache_.find(key)) return *hit;

        auto [u, v] = pick_edge(g);
        DenseGraph deleted = g;
        deleted.adj[u] &= ~bit(v);
        deleted.adj[v] &= ~bit(u);
        IntegerPoly result = solve(deleted) - solve(contract(g, u, v));
        cache_.insert(key, result);
        return result;
    }

private:
    /// Edge maximizing the degree sum of its endpoints; first in (u, v) order on ties.
    static std::pair<std::size_t, std::size_t> pick_edge(const DenseGraph& g) {
        std::pair<std::size_t, std::size_t> best{0, 0};
        int best_sum = -1;
        for (std::size_t u = 0; u < g.n; ++u)
            for (Mask m = u + 1 < 64 ? g.adj[u] & ~(bit(u + 1) - 1) : 0; m; m &= m - 1) {
                auto v = static_cast<std::size_t>(std::countr_zero(m));
                int sum = std::popcount(g.adj[u]) + std::popcount(g.adj[v]);
                if (sum > best_sum) {
                    best_sum = sum;
                    best = {u, v};
                }
            }
        return best;
    }

    /// Merges v into u, collapsing parallel edges.
    static DenseGraph contract(const DenseGraph& g, std::size_t u, std::size_t v) {
        DenseGraph h = g;
        Mask merged = (h.adj[u] | h.adj[v]) & ~bit(u) & ~bit(v);
        h.adj[u] = merged;
        for (std::size_t w = 0; w < h.n; ++w) {
            if (w == u || w == v) continue;
            if (merged & bit(w))
                h.adj[w] |= bit(u);
        }
        return without_vertex(h, v);
    }

    ChromaticCache& cache_;
};

} // namespace detail

inline IntegerPoly chromatic_integer_polynomial(const Graph& g, ChromaticCache& cache) {
    return detail::ChromaticSolver(cache).solve(detail::DenseGraph(g));
}

inline RationalPoly chromatic_polynomial(const Graph& g, ChromaticCache& cache) {
    return to_rational(chromatic_integer_polynomial(g, cache));
}

inline RationalPoly chromatic_polynomial(const Graph& g) {
    ChromaticCache cache;
    return chromatic_polynomial(g, cache);
}

} // namespace shadowpoly

#endif // SHADOWPOLY_CHROMATIC_HPP
