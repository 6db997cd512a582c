#ifndef SHADOWPOLY_ORACLE_HPP
#define SHADOWPOLY_ORACLE_HPP

// Brute-force ground truth: build C_k(G) explicitly and count induced copies
// of a pattern in it. Deliberately shares nothing with the shadow machinery
// beyond the Graph type and automorphism counting.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "shadowpoly/canonical.hpp"
#include "shadowpoly/graph.hpp"
#include "shadowpoly/numeric.hpp"

namespace shadowpoly {

inline constexpr std::uint64_t kDefaultColoringBudget = 1'000'000;

class budget_exceeded : public std::runtime_error {
public:
    budget_exceeded(std::uint64_t bound, const std::string& what) : std::runtime_error(what), bound_(bound) {}
    std::uint64_t bound() const noexcept { return bound_; }

private:
    std::uint64_t bound_;
};

struct ColoringGraph {
    Graph graph;
    std::vector<std::vector<int>> labels;  // labels[c][v] = color of v, 0-based
};

/// C_k(g). Colorings are listed in lexicographic order.
inline ColoringGraph build_coloring_graph(const Graph& g, int k, std::uint64_t budget = kDefaultColoringBudget) {
    if (k < 0) throw std::invalid_argument("number of colors must be non-negative");
    const std::size_t n = g.order();
    // k^n, saturating just past the budget
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n && total <= budget; ++i) total *= static_cast<std::uint64_t>(k);
    if (total > budget)
        throw budget_exceeded(budget, "coloring enumeration needs " + std::to_string(k) + "^" + std::to_string(n) +
                                          " > " + std::to_string(budget) + " colorings");

    ColoringGraph out;
    // code(c) = sum c[v] k^(n-1-v) is monotone in lexicographic order
    std::vector<std::int64_t> index_of(static_cast<std::size_t>(total), -1);
    std::vector<std::uint64_t> codes;
    std::vector<int> col(n, 0);
    auto proper_upto = [&](std::size_t v) {
        for (Vertex w : g.neighbors(static_cast<Vertex>(v)))
            if (w < v && col[w] == col[v]) return false;
        return true;
    };
    // lexicographic backtracking
    std::size_t v = 0;
    if (n == 0) {
        out.labels.push_back({});
        codes.push_back(0);
    } else if (k > 0) {
        col.assign(n, 0);
        for (;;) {
            if (proper_upto(v)) {
                if (v + 1 == n) {
                    std::uint64_t code = 0;
                    for (int c : col) code = code * static_cast<std::uint64_t>(k) + static_cast<std::uint64_t>(c);
                    codes.push_back(code);
                    out.labels.push_back(col);
                } else {
                    ++v;
                    col[v] = 0;
                    continue;
                }
            }
            // advance to the next candidate
            while (col[v] + 1 == k) {
                if (v == 0) goto done;
                --v;
            }
            ++col[v];
        }
    done:;
    }
    for (std::size_t i = 0; i < codes.size(); ++i) index_of[codes[i]] = static_cast<std::int64_t>(i);

    out.graph = Graph(out.labels.size());
    std::vector<std::uint64_t> place(n, 1);
    for (std::size_t i = n; i-- > 1;) place[i - 1] = place[i] * static_cast<std::uint64_t>(k);
    for (std::size_t i = 0; i < out.labels.size(); ++i) {
        const auto& c = out.labels[i];
        for (std::size_t u = 0; u < n; ++u)
            for (int other = c[u] + 1; other < k; ++other) {
                std::uint64_t code = codes[i] + static_cast<std::uint64_t>(other - c[u]) * place[u];
                std::int64_t j = index_of[code];
                if (j >= 0) out.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
    }
    return out;
}

namespace detail {

/// Counts injective maps pattern -> host preserving adjacency and
/// non-adjacency. Pattern vertices are matched component by component,
/// largest first, in BFS order, so every vertex after a component's root has
/// an earlier neighbor to draw candidates from.
class InducedCounter {
public:
    InducedCounter(const Graph& host, const Graph& pattern) : host_(host), pat_(pattern) {
        auto comps = connected_components(pattern);
        std::stable_sort(comps.begin(), comps.end(),
                         [](const Component& a, const Component& b) { return a.graph.order() > b.graph.order(); });
        for (const auto& c : comps) {
            std::vector<Vertex> rank(pattern.order(), 0);
            for (Vertex i = 0; i < rank.size(); ++i) rank[i] = i;
            for (Vertex v : bfs_order(pattern, c.vertices.front(), rank)) order_.push_back(v);
        }
        anchor_.assign(order_.size(), -1);
        std::vector<std::size_t> pos(pattern.order());
        for (std::size_t i = 0; i < order_.size(); ++i) pos[order_[i]] = i;
        for (std::size_t i = 0; i < order_.size(); ++i)
            for (Vertex w : pattern.neighbors(order_[i]))
                if (pos[w] < i && (anchor_[i] < 0 || pos[w] < static_cast<std::size_t>(anchor_[i])))
                    anchor_[i] = static_cast<int>(pos[w]);
        image_.assign(order_.size(), 0);
        used_.assign(host.order(), 0);
        mark_.assign(host.order(), 0);
    }

    std::uint64_t run() {
        if (order_.empty()) return 1;
        if (order_.size() > host_.order()) return 0;
        return extend(0);
    }

private:
    std::uint64_t extend(std::size_t i) {
        if (i == order_.size()) return 1;
        const bool last_isolated = i + 1 == order_.size() && pat_.degree(order_[i]) == 0;
        if (last_isolated) return count_free_isolated(i);
        std::uint64_t total = 0;
        auto try_vertex = [&](Vertex w) {
            if (used_[w] || host_.degree(w) < pat_.degree(order_[i])) return;
            for (std::size_t j = 0; j < i; ++j)
                if (pat_.has_edge(order_[i], order_[j]) != host_.has_edge(w, image_[j])) return;
            image_[i] = w;
            used_[w] = 1;
            total += extend(i + 1);
            used_[w] = 0;
        };
        if (anchor_[i] >= 0) {
            for (Vertex w : host_.neighbors(image_[static_cast<std::size_t>(anchor_[i])])) try_vertex(w);
        } else {
            for (Vertex w = 0; w < host_.order(); ++w) try_vertex(w);
        }
        return total;
    }

    /// Host vertices outside the image and its neighborhood.
    std::uint64_t count_free_isolated(std::size_t i) {
        ++stamp_;
        std::uint64_t blocked = 0;
        auto block = [&](Vertex w) {
            if (mark_[w] != stamp_) {
                mark_[w] = stamp_;
                ++blocked;
            }
        };
        for (std::size_t j = 0; j < i; ++j) {
            block(image_[j]);
            for (Vertex w : host_.neighbors(image_[j])) block(w);
        }
        return host_.order() - blocked;
    }

    const Graph& host_;
    const Graph& pat_;
    std::vector<Vertex> order_;
    std::vector<int> anchor_;
    std::vector<Vertex> image_;
    std::vector<char> used_;
    std::vector<std::uint64_t> mark_;
    std::uint64_t stamp_ = 0;
};

} // namespace detail

/// Vertex subsets of host inducing a copy of pattern.
inline BigInt count_induced(const Graph& host, const Graph& pattern) {
    BigInt maps = detail::InducedCounter(host, pattern).run();
    return maps / automorphism_order(pattern);
}

inline BigInt oracle_count(const Graph& g, const Graph& h, int k, std::uint64_t budget = kDefaultColoringBudget) {
    return count_induced(build_coloring_graph(g, k, budget).graph, h);
}

} // namespace shadowpoly

#endif // SHADOWPOLY_ORACLE_HPP
