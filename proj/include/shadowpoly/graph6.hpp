#ifndef SHADOWPOLY_GRAPH6_HPP
#define SHADOWPOLY_GRAPH6_HPP

// graph6 codec, short form only (n <= 62).
//
// A record is one header byte n+63 followed by the upper triangle of the
// adjacency matrix in column order (0,1),(0,2),(1,2),(0,3),... packed six
// bits per byte, most significant bit first, each byte offset by 63.

#include <cstddef>
#include <istream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "shadowpoly/graph.hpp"

namespace shadowpoly {

class graph6_error : public std::invalid_argument {
public:
    graph6_error(const std::string& what, std::size_t offset)
        : std::invalid_argument(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

inline constexpr std::size_t kGraph6MaxOrder = 62;

inline Graph parse_graph6(std::string_view text) {
    std::size_t base = 0;
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) base = header.size();
    if (text.size() <= base) throw graph6_error("empty graph6 record", base);

    auto value_at = [&](std::size_t i) -> unsigned {
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw graph6_error("byte outside 63..126", i);
        return c - 63u;
    };

    unsigned n = value_at(base);
    if (n == 63) throw graph6_error("long-form graph6 (n > 62) is not supported", base);

    std::size_t bits = static_cast<std::size_t>(n) * (n == 0 ? 0 : n - 1) / 2;
    std::size_t body = (bits + 5) / 6;
    std::size_t expected = base + 1 + body;
    if (text.size() < expected) throw graph6_error("record too short for n = " + std::to_string(n), text.size());
    if (text.size() > expected) throw graph6_error("trailing bytes after record", expected);

    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k) {
            unsigned byte = value_at(base + 1 + k / 6);
            if (byte & (1u << (5 - k % 6))) g.add_edge(i, j);
        }
    if (bits % 6 != 0) {
        std::size_t last = base + body;
        unsigned pad_mask = (1u << (6 - bits % 6)) - 1;
        if (value_at(last) & pad_mask) throw graph6_error("non-zero padding bits", last);
    }
    return g;
}

inline std::string encode_graph6(const Graph& g) {
    std::size_t n = g.order();
    if (n > kGraph6MaxOrder)
        throw std::length_error("graph6 short form supports at most 62 vertices, got " + std::to_string(n));
    std::string out(1, static_cast<char>(n + 63));
    unsigned acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1u : 0u);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

/// One record of a newline-delimited graph6 stream.
struct Graph6Record {
    std::size_t line = 0;  // 1-based
    std::string text;
    std::optional<Graph> graph;  // empty when the record failed to parse
    std::string error;
};

/// Reads the next non-blank line; returns false at end of stream.
inline bool next_graph6_record(std::istream& in, std::size_t& line_no, Graph6Record& rec) {
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (line.empty()) continue;
        rec = Graph6Record{};
        rec.line = line_no;
        rec.text = line;
        try {
            rec.graph = parse_graph6(line);
        } catch (const graph6_error& e) {
            rec.error = e.what();
        }
        return true;
    }
    return false;
}

} // namespace shadowpoly

#endif // SHADOWPOLY_GRAPH6_HPP
