#ifndef SHADOWPOLY_HPP
#define SHADOWPOLY_HPP

// Everything at once. Each header also stands alone.

#include "shadowpoly/canonical.hpp"
#include "shadowpoly/chromatic.hpp"
#include "shadowpoly/counting.hpp"
#include "shadowpoly/generate.hpp"
#include "shadowpoly/graph.hpp"
#include "shadowpoly/graph6.hpp"
#include "shadowpoly/numeric.hpp"
#include "shadowpoly/oracle.hpp"
#include "shadowpoly/poly.hpp"
#include "shadowpoly/poly_json.hpp"
#include "shadowpoly/search.hpp"
#include "shadowpoly/shadow.hpp"
#include "shadowpoly/statemap.hpp"
#include "shadowpoly/trees.hpp"

#endif // SHADOWPOLY_HPP
