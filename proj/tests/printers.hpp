#pragma once

// Readable gtest failure messages for polynomials.

#include <ostream>

#include <shadowpoly/poly.hpp>

namespace shadowpoly {

template <class Coeff>
void PrintTo(const Polynomial<Coeff>& p, std::ostream* os) {
    *os << poly_format(p);
}

} // namespace shadowpoly
