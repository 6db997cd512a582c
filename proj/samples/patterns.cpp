// Counting a few patterns inside C_k(C_5) and checking them by brute force.

#include <iostream>

#include <shadowpoly.hpp>

using namespace shadowpoly;

int main() {
    const Graph g = graphs::cycle(5);
    const std::pair<const char*, Graph> patterns[] = {
        {"P2", graphs::complete(2)},
        {"P3", graphs::path(3)},
        {"C4", graphs::cycle(4)},
        {"C6", graphs::cycle(6)},
        {"2K1", Graph(2)},
    };
    CountingContext ctx;
    for (const auto& [name, h] : patterns) {
        RationalPoly p = count_poly(g, h, ctx);
        std::cout << name << ": " << poly_format(p) << "\n";
        for (int k = 3; k <= 4; ++k)
            std::cout << "  k=" << k << " formula " << poly_eval(p, k) << ", brute force " << oracle_count(g, h, k)
                      << "\n";
    }
}
