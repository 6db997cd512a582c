#ifndef SHADOWPOLY_COUNTING_HPP
#define SHADOWPOLY_COUNTING_HPP

// H-polynomials pi_G^(H)(k): the number of induced copies of H in the
// coloring graph C_k(G), assembled from chromatic polynomials of shadow
// graphs.
//
// Connected patterns sum over valid state maps f and ordered tuples x of
// distinct vertices, then divide by |Aut(H)|. Disconnected patterns peel off
// one component H' and correct the product pi^(H') * pi^(H \ H') by the graphs
// two overlapping copies can jointly induce.

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "shadowpoly/canonical.hpp"
#include "shadowpoly/chromatic.hpp"
#include "shadowpoly/graph.hpp"
#include "shadowpoly/numeric.hpp"
#include "shadowpoly/poly.hpp"
#include "shadowpoly/shadow.hpp"
#include "shadowpoly/statemap.hpp"

namespace shadowpoly {

/// J(A, B) is built by brute force; past this many vertices it is hopeless.
inline constexpr std::size_t kMaxCoverOrder = 9;

/// Which component the disconnected recursion peels off first.
enum class ComponentRule { largest, smallest };

/// Caches shared by every counting call: chromatic polynomials, state maps
/// per pattern class, and finished H-polynomials per (G, H) class pair.
class CountingContext {
public:
    explicit CountingContext(ComponentRule rule = ComponentRule::largest) : rule_(rule) {}

    ComponentRule rule() const noexcept { return rule_; }
    ChromaticCache& chromatic() noexcept { return chromatic_; }

    std::optional<RationalPoly> find(const CanonicalKey& g, const CanonicalKey& h) const {
        std::lock_guard lock(mutex_);
        auto it = memo_.find({g, h});
        if (it == memo_.end()) return std::nullopt;
        return it->second;
    }
    void insert(const CanonicalKey& g, const CanonicalKey& h, const RationalPoly& p) {
        std::lock_guard lock(mutex_);
        memo_.emplace(std::pair{g, h}, p);
    }

    /// State maps of the canonical representative of h, grouped by the shadow
    /// graph they induce (see detail::map_signature), with multiplicities.
    template <class Build>
    const auto& state_map_groups(const CanonicalKey& h, Build build) {
        std::lock_guard lock(mutex_);
        auto it = maps_.find(h);
        if (it == maps_.end()) it = maps_.emplace(h, build()).first;
        return it->second;
    }

private:
    ComponentRule rule_;
    ChromaticCache chromatic_;
    mutable std::mutex mutex_;
    std::map<std::pair<CanonicalKey, CanonicalKey>, RationalPoly> memo_;
    std::map<CanonicalKey, std::vector<std::pair<StateMap, std::size_t>>> maps_;
};

namespace detail {

/// Calls fn(x) for every ordered tuple x of d distinct vertices of [0, n).
inline void for_each_ordered_tuple(std::size_t n, std::size_t d, const std::function<void(std::span<const Vertex>)>& fn) {
    if (d > n) return;
    std::vector<Vertex> x;
    std::vector<char> used(n, 0);
    std::function<void()> rec = [&] {
        if (x.size() == d) {
            fn(x);
            return;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            x.push_back(v);
            rec();
            x.pop_back();
            used[v] = 0;
        }
    };
    rec();
}

/// Two state maps with the same palette sizes and the same coordinate pairs
/// (a, b, f_a, f_b) build identical shadow graphs for every x.
inline std::vector<int> map_signature(const StateMap& f) {
    std::vector<int> sig(f.palette_sizes.begin(), f.palette_sizes.end());
    sig.push_back(-1);
    std::vector<std::array<int, 4>> pairs;
    for (std::size_t a = 0; a < f.dims; ++a)
        for (std::size_t b = a + 1; b < f.dims; ++b)
            for (const auto& t : f.assignment)
                pairs.push_back({static_cast<int>(a), static_cast<int>(b), t[a], t[b]});
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    for (const auto& p : pairs) sig.insert(sig.end(), p.begin(), p.end());
    return sig;
}

inline std::vector<std::pair<StateMap, std::size_t>> grouped_state_maps(const Graph& h) {
    std::map<std::vector<int>, std::pair<StateMap, std::size_t>> groups;
    for (auto& f : enumerate_state_maps(h)) {
        auto sig = map_signature(f);
        auto it = groups.find(sig);
        if (it == groups.end())
            groups.emplace(std::move(sig), std::pair{std::move(f), std::size_t{1}});
        else
            ++it->second.second;
    }
    std::vector<std::pair<StateMap, std::size_t>> out;
    for (auto& [sig, entry] : groups) out.push_back(std::move(entry));
    return out;
}

/// Calls fn(s) for every subset s of `within` with `size` elements.
inline void for_each_subset(std::uint64_t within, std::size_t size, const std::function<void(std::uint64_t)>& fn) {
    std::function<void(std::uint64_t, std::uint64_t, std::size_t)> rec = [&](std::uint64_t acc, std::uint64_t left,
                                                                             std::size_t need) {
        if (need == 0) {
            fn(acc);
            return;
        }
        if (static_cast<std::size_t>(std::popcount(left)) < need) return;
        std::uint64_t low = left & (~left + 1);
        rec(acc | low, left & ~low, need - 1);
        rec(acc, left & ~low, need);
    };
    rec(0, within, size);
}

inline RationalPoly divided(const IntegerPoly& p, const BigInt& by) { return to_rational(p) / Rational(by); }

} // namespace detail

/// Number of edges of C_k(G): half the sum over v of pi(G_v).
inline RationalPoly pairs_poly(const Graph& g, ChromaticCache& cache) {
    IntegerPoly sum;
    for (Vertex v = 0; v < g.order(); ++v) sum += chromatic_integer_polynomial(shadow_p2(g, v).graph, cache);
    return detail::divided(sum, 2);
}

inline RationalPoly pairs_poly(const Graph& g) {
    ChromaticCache cache;
    return pairs_poly(g, cache);
}

/// Induced r-cliques of C_k(G).
inline RationalPoly clique_poly(const Graph& g, std::size_t r, ChromaticCache& cache) {
    if (r < 2) throw std::invalid_argument("clique_poly: r must be at least 2");
    IntegerPoly sum;
    for (Vertex v = 0; v < g.order(); ++v) sum += chromatic_integer_polynomial(shadow_clique(g, v, r).graph, cache);
    return detail::divided(sum, factorial(r));
}

inline RationalPoly clique_poly(const Graph& g, std::size_t r) {
    ChromaticCache cache;
    return clique_poly(g, r, cache);
}

struct ProductCliqueSpec {
    std::vector<std::size_t> sizes;

    ProductCliqueSpec() = default;
    explicit ProductCliqueSpec(std::vector<std::size_t> r) : sizes(std::move(r)) {
        if (sizes.empty()) throw std::invalid_argument("product spec needs at least one clique");
        for (auto s : sizes)
            if (s < 2) throw std::invalid_argument("product spec: clique sizes must be at least 2");
    }

    /// (value, count) for each distinct size, ascending by value.
    std::vector<std::pair<std::size_t, std::size_t>> multiplicities() const {
        std::map<std::size_t, std::size_t> m;
        for (auto s : sizes) ++m[s];
        return {m.begin(), m.end()};
    }

    /// prod r_i! * prod m_j!
    BigInt normalization() const {
        BigInt z = 1;
        for (auto s : sizes) z *= factorial(s);
        for (auto [value, count] : multiplicities()) z *= factorial(count);
        return z;
    }

    Graph pattern() const { return graphs::clique_product(sizes); }
};

/// Induced copies of K_{r_1} x ... x K_{r_d} (Cartesian product) in C_k(G).
inline RationalPoly product_clique_poly(const Graph& g, const ProductCliqueSpec& spec, ChromaticCache& cache) {
    IntegerPoly sum;
    detail::for_each_ordered_tuple(g.order(), spec.sizes.size(), [&](std::span<const Vertex> x) {
        sum += chromatic_integer_polynomial(shadow_product(g, x, spec.sizes).graph, cache);
    });
    return detail::divided(sum, spec.normalization());
}

inline RationalPoly product_clique_poly(const Graph& g, const ProductCliqueSpec& spec) {
    ChromaticCache cache;
    return product_clique_poly(g, spec, cache);
}

/// Induced 6-cycles of C_k(G). Two base vertices can alternate through three
/// colors each; three base vertices can each switch between two colors.
inline RationalPoly hexagon_poly(const Graph& g, ChromaticCache& cache) {
    IntegerPoly sum;
    const std::size_t pair_sizes[] = {3, 3};
    // (j1, j2): v_{1,j1} ~ v_{2,j2}, following the walk 11 21 22 32 33 13
    const std::pair<Vertex, Vertex> hex_edges[] = {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}, {1, 3}};
    detail::for_each_ordered_tuple(g.order(), 2, [&](std::span<const Vertex> x) {
        std::vector<std::vector<Vertex>> index;
        ShadowGraph s = detail::shadow_skeleton(g, x, pair_sizes, index);
        if (g.has_edge(x[0], x[1]))
            for (auto [a, b] : hex_edges) s.graph.add_edge(index[0][a - 1], index[1][b - 1]);
        sum += chromatic_integer_polynomial(s.graph, cache);
    });
    const std::size_t triple_sizes[] = {2, 2, 2};
    detail::for_each_ordered_tuple(g.order(), 3, [&](std::span<const Vertex> x) {
        sum += chromatic_integer_polynomial(shadow_product(g, x, triple_sizes).graph, cache);
    });
    return detail::divided(sum, 12);
}

inline RationalPoly hexagon_poly(const Graph& g) {
    ChromaticCache cache;
    return hexagon_poly(g, cache);
}

/// Ordered pairs (V_A, V_B) with V_A ∪ V_B = V(u), u[V_A] ≅ a and u[V_B] ≅ b.
inline std::uint64_t embedding_cover_count(const Graph& u, const Graph& a, const Graph& b) {
    const std::size_t n = u.order(), na = a.order(), nb = b.order();
    if (n > kMaxCanonicalOrder) throw std::length_error("embedding_cover_count: graph too large");
    if (na > n || nb > n || na + nb < n) return 0;
    const auto key_a = canonical_key(a), key_b = canonical_key(b);

    auto members = [](std::uint64_t mask) {
        std::vector<Vertex> out;
        for (Vertex v = 0; mask; ++v, mask >>= 1)
            if (mask & 1) out.push_back(v);
        return out;
    };
    auto is_copy = [&](std::uint64_t mask, const CanonicalKey& key) {
        auto vs = members(mask);
        return canonical_key(u.induced(vs)) == key;
    };

    std::uint64_t count = 0;
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    // V_A runs over na-subsets; V_B is the complement plus overlap vertices
    // drawn from V_A.
    detail::for_each_subset(all, na, [&](std::uint64_t va) {
        if (!is_copy(va, key_a)) return;
        const std::uint64_t rest = all & ~va;
        detail::for_each_subset(va, nb - (n - na), [&](std::uint64_t shared) {
            if (is_copy(rest | shared, key_b)) ++count;
        });
    });
    return count;
}

/// Isomorphism classes of graphs coverable by an induced A and an induced B
/// (overlap allowed, no leftover vertices), as canonical graphs sorted by key.
inline std::vector<Graph> enumerate_J(const Graph& a, const Graph& b) {
    const std::size_t na = a.order(), nb = b.order();
    if (na + nb > kMaxCoverOrder)
        throw std::invalid_argument("pattern too large: cover enumeration is capped at " +
                                    std::to_string(kMaxCoverOrder) + " vertices");
    std::map<CanonicalKey, Graph> classes;

    for (std::size_t o = 0; o <= std::min(na, nb); ++o) {
        const std::size_t n = na + nb - o;
        if (n == 0) {
            classes.emplace(canonical_key(Graph(0)), Graph(0));
            continue;
        }
        const std::size_t b0 = na - o;  // V_B = [b0, n)
        // Any o vertices of A may be the shared ones: relabel A so they come last.
        detail::for_each_subset((std::uint64_t{1} << na) - 1, o, [&](std::uint64_t shared) {
            std::vector<Vertex> to(na);
            Vertex front = 0, back = static_cast<Vertex>(b0);
            for (Vertex v = 0; v < na; ++v) to[v] = (shared >> v & 1) ? back++ : front++;
            const Graph ap = a.relabeled(to);

            // Distinct ways to lay B onto V_B that agree with A on the overlap.
            std::vector<Vertex> perm(nb);
            for (Vertex i = 0; i < nb; ++i) perm[i] = i;
            std::set<std::vector<Edge>> placements;
            do {
                bool ok = true;
                for (std::size_t p = 0; p < o && ok; ++p)
                    for (std::size_t q = p + 1; q < o && ok; ++q)
                        ok = b.has_edge(perm[p], perm[q]) ==
                             ap.has_edge(static_cast<Vertex>(b0 + p), static_cast<Vertex>(b0 + q));
                if (!ok) continue;
                std::vector<Edge> edges;
                for (std::size_t p = 0; p < nb; ++p)
                    for (std::size_t q = p + 1; q < nb; ++q)
                        if (q >= o && b.has_edge(perm[p], perm[q]))
                            edges.emplace_back(static_cast<Vertex>(b0 + p), static_cast<Vertex>(b0 + q));
                placements.insert(std::move(edges));
            } while (std::next_permutation(perm.begin(), perm.end()));

            std::vector<Edge> slots;
            for (Vertex i = 0; i < b0; ++i)
                for (Vertex j = static_cast<Vertex>(na); j < n; ++j) slots.emplace_back(i, j);

            for (const auto& placed : placements) {
                Graph base(n);
                for (auto [u, v] : ap.edges()) base.add_edge(u, v);
                for (auto [u, v] : placed) base.add_edge(u, v);
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
                    Graph u = base;
                    for (std::size_t s = 0; s < slots.size(); ++s)
                        if (mask >> s & 1) u.add_edge(slots[s].first, slots[s].second);
                    auto form = canonical_form(u);
                    if (!classes.contains(form.key)) classes.emplace(form.key, u.relabeled(form.label));
                }
            }
        });
    }
    std::vector<Graph> out;
    for (auto& [key, g] : classes) out.push_back(std::move(g));
    return out;
}

/// Connected pattern via state maps. h = K_1 gives pi_G itself.
inline RationalPoly count_poly_connected(const Graph& g, const Graph& h, CountingContext& ctx) {
    if (h.order() == 0 || !is_connected(h))
        throw std::invalid_argument("count_poly_connected needs a connected, non-empty pattern; use count_poly");
    if (h.order() == 1) return chromatic_polynomial(g, ctx.chromatic());

    const auto form = canonical_form(h);
    const Graph hc = h.relabeled(form.label);
    const auto& groups = ctx.state_map_groups(form.key, [&] { return detail::grouped_state_maps(hc); });

    IntegerPoly sum;
    for (const auto& [f, multiplicity] : groups) {
        IntegerPoly part;
        detail::for_each_ordered_tuple(g.order(), f.dims, [&](std::span<const Vertex> x) {
            part += chromatic_integer_polynomial(shadow_general(g, x, f).graph, ctx.chromatic());
        });
        sum += part * BigInt(multiplicity);
    }
    return detail::divided(sum, automorphism_order(h));
}

inline RationalPoly count_poly_connected(const Graph& g, const Graph& h) {
    CountingContext ctx;
    return count_poly_connected(g, h, ctx);
}

inline RationalPoly count_poly(const Graph& g, const Graph& h, CountingContext& ctx);

namespace detail {

/// Splits h into (H', h \ H') following the context's rule; ties go to the
/// component with the smaller canonical key.
inline std::pair<Graph, Graph> split_component(const Graph& h, ComponentRule rule) {
    auto comps = connected_components(h);
    std::size_t pick = 0;
    CanonicalKey best = canonical_key(comps[0].graph);
    for (std::size_t i = 1; i < comps.size(); ++i) {
        auto key = canonical_key(comps[i].graph);
        std::size_t a = comps[i].graph.order(), b = comps[pick].graph.order();
        bool better = rule == ComponentRule::largest ? a > b : a < b;
        if (better || (a == b && key < best)) {
            pick = i;
            best = std::move(key);
        }
    }
    std::vector<Vertex> rest;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (i != pick) rest.insert(rest.end(), comps[i].vertices.begin(), comps[i].vertices.end());
    std::sort(rest.begin(), rest.end());
    return {comps[pick].graph, h.induced(rest)};
}

} // namespace detail

/// pi_G^(H) for any pattern. Disconnected patterns use
///   f_H(H', H'') pi^(H) = pi^(H') pi^(H'') - sum_{U in J(H', H''), U != H} f_U(H', H'') pi^(U).
inline RationalPoly count_poly(const Graph& g, const Graph& h, CountingContext& ctx) {
    if (h.order() == 0) return RationalPoly::constant(1);
    if (is_connected(h)) return count_poly_connected(g, h, ctx);

    const auto gkey = canonical_key(g), hkey = canonical_key(h);
    if (auto hit = ctx.find(gkey, hkey)) return *hit;

    auto [first, rest] = detail::split_component(h, ctx.rule());
    RationalPoly p = count_poly(g, first, ctx) * count_poly(g, rest, ctx);
    for (const Graph& u : enumerate_J(first, rest)) {
        if (canonical_key(u) == hkey) continue;
        std::uint64_t f = embedding_cover_count(u, first, rest);
        p -= count_poly(g, u, ctx) * Rational(f);
    }
    std::uint64_t self = embedding_cover_count(h, first, rest);
    p /= Rational(self);
    ctx.insert(gkey, hkey, p);
    return p;
}

inline RationalPoly count_poly(const Graph& g, const Graph& h) {
    CountingContext ctx;
    return count_poly(g, h, ctx);
}

} // namespace shadowpoly

#endif // SHADOWPOLY_COUNTING_HPP
