// Two 8-vertex graphs whose coloring graphs always have the same number of
// edges, although the graphs have different chromatic polynomials.

#include <iostream>

#include <shadowpoly.hpp>

using namespace shadowpoly;

int main() {
    // two disjoint diamonds
    Graph twin = Graph::from_edges(8, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
                                       {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}});
    // K4, a triangle on one of its edges, a leaf at each end of that edge,
    // and an isolated vertex
    Graph other = parse_graph6("G~WA@?");

    for (const Graph* g : {&twin, &other}) {
        std::cout << encode_graph6(*g) << "\n";
        std::cout << "  chromatic: " << poly_format(chromatic_polynomial(*g)) << "\n";
        std::cout << "  edges of C_k: " << poly_format(pairs_poly(*g)) << "\n";
    }
    for (int k = 3; k <= 5; ++k)
        std::cout << "k=" << k << ": " << build_coloring_graph(twin, k).graph.size() << " vs "
                  << build_coloring_graph(other, k).graph.size() << " edges\n";
}
