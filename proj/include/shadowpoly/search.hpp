#ifndef SHADOWPOLY_SEARCH_HPP
#define SHADOWPOLY_SEARCH_HPP

// Hunting for graphs whose coloring graphs have the same number of edges
// (equal pairs polynomials) but different chromatic polynomials.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "shadowpoly/chromatic.hpp"
#include "shadowpoly/counting.hpp"
#include "shadowpoly/graph.hpp"
#include "shadowpoly/graph6.hpp"
#include "shadowpoly/poly.hpp"

namespace shadowpoly {

struct CollisionMember {
    std::string graph6;
    std::size_t line = 0;  // 1-based input line, 0 when not read from a stream
    RationalPoly chromatic;
};

struct CollisionGroup {
    RationalPoly pairs;
    std::vector<CollisionMember> members;  // sorted by graph6, then line
    std::vector<RationalPoly> chromatic_classes;  // distinct, ascending

    bool is_counterexample() const { return chromatic_classes.size() >= 2; }
};

struct SkippedRecord {
    std::size_t line = 0;
    std::string text;
    std::string error;
};

struct CollisionReport {
    std::size_t graphs_read = 0;
    std::vector<CollisionGroup> groups;  // every pairs polynomial shared by >= 2 inputs
    std::vector<SkippedRecord> skipped;

    std::vector<const CollisionGroup*> counterexamples() const {
        std::vector<const CollisionGroup*> out;
        for (const auto& g : groups)
            if (g.is_counterexample()) out.push_back(&g);
        return out;
    }
};

struct SearchInput {
    Graph graph;
    std::string graph6;
    std::size_t line = 0;
};

namespace detail {

/// Runs fn(i) for i in [0, n) on up to `threads` workers.
template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
    if (threads <= 1 || n < 2) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
        });
    for (auto& th : pool) th.join();
}

} // namespace detail

/// Groups inputs by exact pairs polynomial, then splits each group by
/// chromatic polynomial. threads = 0 picks the hardware concurrency.
inline CollisionReport search_p2_collisions(const std::vector<SearchInput>& inputs, unsigned threads = 1) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    ChromaticCache cache;
    std::vector<RationalPoly> fingerprints(inputs.size());
    detail::parallel_for(inputs.size(), threads, [&](std::size_t i) { fingerprints[i] = pairs_poly(inputs[i].graph, cache); });

    std::map<RationalPoly, std::vector<std::size_t>> by_pairs;
    for (std::size_t i = 0; i < inputs.size(); ++i) by_pairs[fingerprints[i]].push_back(i);

    CollisionReport report;
    report.graphs_read = inputs.size();
    for (auto& [poly, idx] : by_pairs) {
        if (idx.size() < 2) continue;
        CollisionGroup group;
        group.pairs = poly;
        group.members.resize(idx.size());
        detail::parallel_for(idx.size(), threads, [&](std::size_t j) {
            const auto& in = inputs[idx[j]];
            group.members[j] = {in.graph6, in.line, chromatic_polynomial(in.graph, cache)};
        });
        std::sort(group.members.begin(), group.members.end(), [](const auto& a, const auto& b) {
            return std::tie(a.graph6, a.line) < std::tie(b.graph6, b.line);
        });
        for (const auto& m : group.members) group.chromatic_classes.push_back(m.chromatic);
        std::sort(group.chromatic_classes.begin(), group.chromatic_classes.end());
        group.chromatic_classes.erase(std::unique(group.chromatic_classes.begin(), group.chromatic_classes.end()),
                                      group.chromatic_classes.end());
        report.groups.push_back(std::move(group));
    }
    return report;
}

/// Newline-delimited graph6. Malformed lines are skipped and recorded.
inline CollisionReport search_p2_collisions(std::istream& in, unsigned threads = 1) {
    std::vector<SearchInput> inputs;
    std::vector<SkippedRecord> skipped;
    std::size_t line_no = 0;
    Graph6Record rec;
    while (next_graph6_record(in, line_no, rec)) {
        if (rec.graph)
            inputs.push_back({std::move(*rec.graph), rec.text, rec.line});
        else
            skipped.push_back({rec.line, rec.text, rec.error});
    }
    CollisionReport report = search_p2_collisions(inputs, threads);
    report.skipped = std::move(skipped);
    return report;
}

} // namespace shadowpoly

#endif // SHADOWPOLY_SEARCH_HPP
