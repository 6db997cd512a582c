#pragma once

// Graphs and polynomials transcribed from published figures. A transcription
// counts as right only if it reproduces every printed polynomial at once.

#include <string>

#include <shadowpoly/graph.hpp>
#include <shadowpoly/poly.hpp>

#include "printers.hpp"

namespace fixtures {

using shadowpoly::Graph;
using shadowpoly::RationalPoly;

inline RationalPoly poly(const std::string& text) { return shadowpoly::parse_poly_human(text); }

// --- first pair of graphs with equal pairs polynomials -----------------------

// two disjoint diamonds, each A B C D with AB BC CD DA AC
inline Graph twin_diamonds() {
    return Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2},  //
                                 {4, 5}, {5, 6}, {6, 7}, {7, 4}, {4, 6}});
}

// A..H = 0..7: K4 on ABCD, E joined to B and C, pendants G-B and H-C, F isolated
inline Graph k4_with_ears() {
    return Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},  //
                                 {1, 4}, {2, 4}, {6, 1}, {7, 2}});
}

inline RationalPoly pair1_pairs() {
    return poly("4k^9 - 54k^8 + 306k^7 - 942k^6 + 1698k^5 - 1788k^4 + 1016k^3 - 240k^2");
}
inline RationalPoly twin_diamonds_chromatic() {
    return poly("k^8 - 10k^7 + 41k^6 - 88k^5 + 104k^4 - 64k^3 + 16k^2");
}
inline RationalPoly k4_with_ears_chromatic() {
    return poly("k^8 - 10k^7 + 40k^6 - 82k^5 + 91k^4 - 52k^3 + 12k^2");
}

// --- second, connected pair --------------------------------------------------

// S1 S2 A1 A2 A3 B1 B2 B3 = 0..7
inline Graph split_pair_left() {
    return Graph::from_edges(8, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 2},
                                 {0, 6}, {0, 5}, {1, 5}, {1, 6}, {1, 7}, {5, 6}, {5, 7}, {6, 7}});
}

// L Z1 Z2 C1 C2 C3 R1 R2 = 0..7
inline Graph split_pair_right() {
    return Graph::from_edges(8, {{1, 0}, {0, 2}, {2, 1}, {1, 5}, {5, 4}, {4, 3}, {3, 2}, {2, 5}, {5, 3},
                                 {3, 1}, {1, 4}, {4, 2}, {3, 6}, {6, 4}, {2, 7}, {7, 6}, {6, 5}});
}

inline RationalPoly pair2_pairs() {
    return poly("8k^9 - 178k^8 + 1711/2k^7 - 9265/2k^6 + 30841/2k^5 - 64417/2k^4 + 41032k^3 - 28950k^2 + 8568k");
}
inline RationalPoly split_pair_left_chromatic() {
    return poly("k^8 - 17k^7 + 122k^6 - 479k^5 + 1109k^4 - 1508k^3 + 1108k^2 - 336k");
}
inline RationalPoly split_pair_right_chromatic() {
    return poly("k^8 - 17k^7 + 122k^6 - 478k^5 + 1101k^4 - 1485k^3 + 1080k^2 - 324k");
}

// --- 11-vertex trees with equal subset statistics ----------------------------

// spine S1..S7 = 0..6; two leaves on S3, one on S4, one on S6
inline Graph gds_tree_left() {
    Graph t = shadowpoly::graphs::path(7);
    Graph g(11);
    for (auto [u, v] : t.edges()) g.add_edge(u, v);
    g.add_edge(2, 7);
    g.add_edge(2, 8);
    g.add_edge(3, 9);
    g.add_edge(5, 10);
    return g;
}

// spine T1..T7 = 0..6; two leaves on T5, one on T3, one on T6
inline Graph gds_tree_right() {
    Graph t = shadowpoly::graphs::path(7);
    Graph g(11);
    for (auto [u, v] : t.edges()) g.add_edge(u, v);
    g.add_edge(4, 7);
    g.add_edge(4, 8);
    g.add_edge(2, 9);
    g.add_edge(5, 10);
    return g;
}

// --- 12-vertex trees with equal 4-cube but different 3-cube counts ------------

// spine S1..S8 = 0..7, a leaf on S2, and a chain S4 - U1 - U2 - U3
inline Graph cube_tree_left() {
    Graph g(12);
    for (shadowpoly::Vertex i = 0; i + 1 < 8; ++i) g.add_edge(i, i + 1);
    g.add_edge(1, 8);
    g.add_edge(3, 9);
    g.add_edge(9, 10);
    g.add_edge(10, 11);
    return g;
}

// spine T1..T10 = 0..9, a leaf on T2 and a leaf on T3
inline Graph cube_tree_right() {
    Graph g(12);
    for (shadowpoly::Vertex i = 0; i + 1 < 10; ++i) g.add_edge(i, i + 1);
    g.add_edge(1, 10);
    g.add_edge(2, 11);
    return g;
}

inline RationalPoly cube_trees_q4() {
    return poly(
        "495/16k^16 - 5775/8k^15 + 62525/8k^14 - 52077k^13 + 3820713/16k^12 - 6384613/8k^11 + 32128997/16k^10 - "
        "15491779/4k^9 + 577231k^8 - 26590137/4k^7 + 93863265/16k^6 - 7791539/2k^5 + 3768707/2k^4 - 626702k^3 + "
        "128145k^2 - 12144k");
}
inline RationalPoly cube_tree_left_q3() {
    return poly(
        "55/2k^15 - 550k^14 + 10147/2k^13 - 28609k^12 + 220335/2k^11 - 2451663/8k^10 + 635055k^9 - 7967177/8k^8 + "
        "4750757/4k^7 - 8575621/8k^6 + 720801k^5 - 2801415/8k^4 + 464797/4k^3 - 47153/2k^2 + 2207k");
}
inline RationalPoly cube_tree_right_q3() {
    return poly(
        "55/2k^15 - 550k^14 + 10147/2k^13 - 28609k^12 + 881345/8k^11 - 2451731/8k^10 + 5080851/8k^9 - 7968631/8k^8 + "
        "9504849/8k^7 - 8580805/8k^6 + 5771941/8k^5 - 2805421/8k^4 + 465739/4k^3 - 47283/2k^2 + 2215k");
}

} // namespace fixtures
