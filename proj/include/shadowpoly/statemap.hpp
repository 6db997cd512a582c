#ifndef SHADOWPOLY_STATEMAP_HPP
#define SHADOWPOLY_STATEMAP_HPP

// Valid state maps of a connected pattern H.
//
// A state map assigns to each pattern vertex a tuple of palette positions,
// one coordinate per color-changing base vertex. A map is valid when
//   1. it is injective,
//   2. two tuples differ in exactly one coordinate iff the pattern vertices
//      are adjacent,
//   3. value j > 1 at coordinate i first appears after value j - 1 did, and
//   4. coordinate i > 1 leaves 1 only after coordinate i - 1 has shown a 2,
// with "after" taken along a fixed connected ordering of H.

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "shadowpoly/canonical.hpp"
#include "shadowpoly/graph.hpp"

namespace shadowpoly {

using StateTuple = std::vector<int>;

struct StateMap {
    std::vector<StateTuple> assignment;  // assignment[k] is the tuple of ordering[k]
    std::size_t dims = 0;                // number of color-changing base vertices
    std::vector<int> palette_sizes;      // r_i = largest value at coordinate i
    std::vector<Vertex> ordering;

    friend bool operator==(const StateMap&, const StateMap&) = default;
};

namespace detail {

inline int tuple_distance(const StateTuple& a, const StateTuple& b) {
    std::size_t w = std::max(a.size(), b.size());
    int d = 0;
    for (std::size_t i = 0; i < w; ++i) {
        int x = i < a.size() ? a[i] : 1;
        int y = i < b.size() ? b[i] : 1;
        d += x != y;
    }
    return d;
}

class StateMapEnumerator {
public:
    StateMapEnumerator(const Graph& h, std::span<const Vertex> ordering)
        : h_(h), order_(ordering.begin(), ordering.end()) {}

    std::vector<StateMap> run() {
        tuples_.assign(1, StateTuple{});  // u_1 -> (1, ..., 1)
        extend(1);
        return std::move(out_);
    }

private:
    void extend(std::size_t k) {
        if (k == order_.size()) {
            emit();
            return;
        }
        Vertex u = order_[k];
        // The first earlier neighbor: u's tuple is one coordinate away from it.
        const StateTuple* anchor = nullptr;
        for (std::size_t j = 0; j < k && !anchor; ++j)
            if (h_.has_edge(u, order_[j])) anchor = &tuples_[j];
        if (!anchor) return;

        std::size_t width = 0;
        for (const auto& t : tuples_) width = std::max(width, t.size());
        std::vector<int> seen(width, 1);
        for (const auto& t : tuples_)
            for (std::size_t i = 0; i < t.size(); ++i) seen[i] = std::max(seen[i], t[i]);

        std::vector<StateTuple> candidates;
        StateTuple base = *anchor;
        base.resize(width, 1);
        for (std::size_t i = 0; i < width; ++i)
            for (int v = 1; v <= seen[i] + 1; ++v) {
                if (v == base[i]) continue;
                StateTuple t = base;
                t[i] = v;
                candidates.push_back(std::move(t));
            }
        StateTuple activated = base;
        activated.push_back(2);
        candidates.push_back(std::move(activated));
        std::sort(candidates.begin(), candidates.end(), [](const StateTuple& a, const StateTuple& b) {
            std::size_t w = std::max(a.size(), b.size());
            for (std::size_t i = 0; i < w; ++i) {
                int x = i < a.size() ? a[i] : 1;
                int y = i < b.size() ? b[i] : 1;
                if (x != y) return x < y;
            }
            return a.size() < b.size();
        });

        for (auto& t : candidates) {
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j) {
                int d = tuple_distance(t, tuples_[j]);
                bool adjacent = h_.has_edge(u, order_[j]);
                ok = d != 0 && (d == 1) == adjacent;
            }
            if (!ok) continue;
            tuples_.push_back(t);
            extend(k + 1);
            tuples_.pop_back();
        }
    }

    void emit() {
        StateMap f;
        f.ordering = order_;
        for (const auto& t : tuples_) f.dims = std::max(f.dims, t.size());
        f.palette_sizes.assign(f.dims, 1);
        for (auto t : tuples_) {
            t.resize(f.dims, 1);
            for (std::size_t i = 0; i < f.dims; ++i) f.palette_sizes[i] = std::max(f.palette_sizes[i], t[i]);
            f.assignment.push_back(std::move(t));
        }
        out_.push_back(std::move(f));
    }

    const Graph& h_;
    std::vector<Vertex> order_;
    std::vector<StateTuple> tuples_;
    std::vector<StateMap> out_;
};

} // namespace detail

/// All valid state maps of `h` against `ordering`, in lexicographic order of
/// their tuple sequences.
inline std::vector<StateMap> enumerate_state_maps(const Graph& h, std::span<const Vertex> ordering) {
    if (h.order() < 2) throw std::invalid_argument("state maps need a pattern with at least 2 vertices");
    if (!is_connected(h)) throw std::invalid_argument("state maps need a connected pattern");
    if (!is_connected_ordering(h, ordering)) throw std::invalid_argument("ordering is not a connected ordering");
    return detail::StateMapEnumerator(h, ordering).run();
}

inline std::vector<StateMap> enumerate_state_maps(const Graph& h) {
    auto order = connected_ordering(h);
    return enumerate_state_maps(h, order);
}

/// Checks every validity condition from scratch.
inline bool is_valid_state_map(const Graph& h, const StateMap& f) {
    const auto& a = f.assignment;
    const std::size_t n = h.order();
    if (a.size() != n || f.ordering.size() != n || !is_connected_ordering(h, f.ordering)) return false;
    if (f.dims == 0 || f.dims >= n || f.palette_sizes.size() != f.dims) return false;
    for (const auto& t : a)
        if (t.size() != f.dims) return false;

    for (std::size_t i = 0; i < f.dims; ++i) {
        int r = 0;
        for (const auto& t : a) r = std::max(r, t[i]);
        if (r != f.palette_sizes[i] || r < 2) return false;
    }
    if (std::any_of(a[0].begin(), a[0].end(), [](int x) { return x != 1; })) return false;
    StateTuple second(f.dims, 1);
    second[0] = 2;
    if (a[1] != second) return false;

    std::set<StateTuple> distinct(a.begin(), a.end());
    if (distinct.size() != n) return false;

    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            int d = 0;
            for (std::size_t i = 0; i < f.dims; ++i) d += a[p][i] != a[q][i];
            if ((d == 1) != h.has_edge(f.ordering[p], f.ordering[q])) return false;
        }

    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < f.dims; ++i) {
            int j = a[k][i];
            if (j <= 1) continue;
            bool prev_value = false, prev_coord = (i == 0);
            for (std::size_t e = 0; e < k; ++e) {
                if (a[e][i] == j - 1) prev_value = true;
                if (i > 0 && a[e][i - 1] == 2) prev_coord = true;
            }
            if (!prev_value || !prev_coord) return false;
        }

    int total = 0;
    for (int r : f.palette_sizes) total += r - 1;
    return total <= static_cast<int>(n) - 1;
}

} // namespace shadowpoly

#endif // SHADOWPOLY_STATEMAP_HPP
