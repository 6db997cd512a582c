#ifndef SHADOWPOLY_TREES_HPP
#define SHADOWPOLY_TREES_HPP

// Closed forms for trees, and the subset statistics behind them.
//
// For a vertex subset S of a tree T: deg(S) sums the degrees in S, int(S)
// counts edges inside S and ext(S) edges leaving it, so deg = ext + 2 int.
// Induced hypercubes Q_d in C_k(T) are counted by
//   (1/2^d) sum_{|S| = d} k (k-1)^{n+d-1-deg S} (k-2)^{deg S - int S} (k-3)^{int S}.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "shadowpoly/graph.hpp"
#include "shadowpoly/numeric.hpp"
#include "shadowpoly/poly.hpp"

namespace shadowpoly {

struct GdsEntry {
    std::size_t size = 0;
    std::size_t internal = 0;
    std::size_t external = 0;

    std::size_t degree() const noexcept { return external + 2 * internal; }
    friend auto operator<=>(const GdsEntry&, const GdsEntry&) = default;
};

namespace detail {

inline void require_tree(const Graph& t, const char* who) {
    if (!is_tree(t)) throw std::invalid_argument(std::string(who) + ": input is not a tree");
}

/// Visits every d-subset of V(t) in combinadic order with its (deg, int),
/// maintained incrementally as vertices enter and leave the subset.
inline void for_each_subset_stats(const Graph& t, std::size_t d,
                                  const std::function<void(std::size_t deg, std::size_t internal)>& fn) {
    const std::size_t n = t.order();
    if (d > n) return;
    std::vector<char> in(n, 0);
    std::size_t deg = 0, internal = 0;
    auto enter = [&](Vertex v) {
        for (Vertex w : t.neighbors(v)) internal += in[w];
        deg += t.degree(v);
        in[v] = 1;
    };
    auto leave = [&](Vertex v) {
        in[v] = 0;
        for (Vertex w : t.neighbors(v)) internal -= in[w];
        deg -= t.degree(v);
    };
    std::function<void(Vertex, std::size_t)> rec = [&](Vertex start, std::size_t need) {
        if (need == 0) {
            fn(deg, internal);
            return;
        }
        for (Vertex v = start; v + need <= n; ++v) {
            enter(v);
            rec(v + 1, need - 1);
            leave(v);
        }
    };
    rec(0, d);
}

} // namespace detail

/// Edges of C_k(T): (1/2) sum_v k (k-1)^{n - deg v} (k-2)^{deg v}.
inline RationalPoly tree_pairs_poly(const Graph& t) {
    detail::require_tree(t, "tree_pairs_poly");
    const auto n = static_cast<unsigned>(t.order());
    IntegerPoly sum;
    for (Vertex v = 0; v < n; ++v) {
        auto d = static_cast<unsigned>(t.degree(v));
        sum += tree_term(n - d, d, 0);
    }
    return to_rational(sum) / Rational(2);
}

/// Induced 4-cycles of C_k(T), split into adjacent and non-adjacent pairs.
inline RationalPoly tree_square_poly(const Graph& t) {
    detail::require_tree(t, "tree_square_poly");
    const auto n = static_cast<unsigned>(t.order());
    IntegerPoly sum;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            auto s = static_cast<unsigned>(t.degree(u) + t.degree(v));
            if (t.has_edge(u, v))
                sum += tree_term(n + 1 - s, s - 1, 1);
            else
                sum += tree_term(n + 1 - s, s, 0);
        }
    return to_rational(sum) / Rational(4);
}

/// Induced d-cubes of C_k(T).
inline RationalPoly tree_hypercube_poly(const Graph& t, std::size_t d) {
    detail::require_tree(t, "tree_hypercube_poly");
    const std::size_t n = t.order();
    if (d > n) throw std::invalid_argument("tree_hypercube_poly: d exceeds the number of vertices");
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> tally;
    detail::for_each_subset_stats(t, d, [&](std::size_t deg, std::size_t internal) { ++tally[{deg, internal}]; });
    IntegerPoly sum;
    for (auto [key, count] : tally) {
        auto [deg, internal] = key;
        sum += tree_term(static_cast<unsigned>(n + d - 1 - deg), static_cast<unsigned>(deg - internal),
                         static_cast<unsigned>(internal)) *
               BigInt(count);
    }
    return to_rational(sum) / Rational(BigInt(1) << d);
}

/// M_i(T): (i, int S, ext S) over all i-subsets S, sorted.
inline std::vector<GdsEntry> gds_multiset(const Graph& t, std::size_t i) {
    detail::require_tree(t, "gds_multiset");
    if (i > t.order()) throw std::invalid_argument("gds_multiset: i exceeds the number of vertices");
    std::vector<GdsEntry> out;
    detail::for_each_subset_stats(t, i, [&](std::size_t deg, std::size_t internal) {
        out.push_back({i, internal, deg - 2 * internal});
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// D(T): deg u + deg v over all unordered vertex pairs, sorted.
inline std::vector<std::size_t> pair_degree_sums(const Graph& g) {
    std::vector<std::size_t> out;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v) out.push_back(g.degree(u) + g.degree(v));
    std::sort(out.begin(), out.end());
    return out;
}

/// Recovers the degree multiset of a tree on n vertices from D(T).
///
/// With c_j vertices of degree j and P_s pairs summing to s:
///   P_2 = C(c_1, 2), and for j >= 2
///   P_{j+1} = c_1 c_j + (terms in c_2 .. c_{j-1}),
/// so each c_j follows from the ones before it.
inline std::vector<std::size_t> recover_degrees_from_pair_sums(std::vector<std::size_t> d_multiset, std::size_t n) {
    auto infeasible = [](const std::string& why) {
        return std::invalid_argument("pair sums are not realizable by a tree: " + why);
    };
    if (d_multiset.size() != n * (n == 0 ? 0 : n - 1) / 2)
        throw std::invalid_argument("pair-sum multiset must have n(n-1)/2 elements");
    if (n == 0) throw std::invalid_argument("a tree needs at least one vertex");
    if (n == 1) return {0};

    std::map<std::size_t, std::int64_t> pairs;  // P_s
    for (auto s : d_multiset) ++pairs[s];
    auto P = [&](std::size_t s) -> std::int64_t {
        auto it = pairs.find(s);
        return it == pairs.end() ? 0 : it->second;
    };

    std::vector<std::int64_t> c(n, 0);  // c[j], j = 1 .. n-1
    const std::int64_t p2 = P(2);
    std::int64_t leaves = 0;
    while (leaves * (leaves - 1) / 2 < p2) ++leaves;
    if (leaves * (leaves - 1) / 2 != p2 || leaves < 2) throw infeasible("leaf count");
    c[1] = leaves;

    std::int64_t placed = leaves;
    for (std::size_t j = 2; j < n && placed < static_cast<std::int64_t>(n); ++j) {
        const std::size_t s = j + 1;
        std::int64_t known = 0;
        for (std::size_t a = 2; 2 * a <= s; ++a) {
            std::size_t b = s - a;
            if (b >= j) continue;  // involves c_j or beyond; only c_1 c_j may
            known += a == b ? c[a] * (c[a] - 1) / 2 : c[a] * c[b];
        }
        std::int64_t rem = P(s) - known;
        if (rem < 0 || rem % leaves != 0) throw infeasible("count at degree " + std::to_string(j));
        c[j] = rem / leaves;
        placed += c[j];
    }
    if (placed != static_cast<std::int64_t>(n)) throw infeasible("vertex total");

    std::vector<std::size_t> degrees;
    for (std::size_t j = 1; j < n; ++j)
        for (std::int64_t r = 0; r < c[j]; ++r) degrees.push_back(j);

    std::vector<std::size_t> check;
    for (std::size_t a = 0; a < degrees.size(); ++a)
        for (std::size_t b = a + 1; b < degrees.size(); ++b) check.push_back(degrees[a] + degrees[b]);
    std::sort(check.begin(), check.end());
    std::sort(d_multiset.begin(), d_multiset.end());
    if (check != d_multiset) throw infeasible("reconstruction does not reproduce the input");
    return degrees;
}

} // namespace shadowpoly

#endif // SHADOWPOLY_TREES_HPP
