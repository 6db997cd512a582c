#include <gtest/gtest.h>

#include <random>

#include <shadowpoly/poly.hpp>
#include <shadowpoly/poly_json.hpp>

#include "fixtures.hpp"

using namespace shadowpoly;

namespace {

RationalPoly k() { return RationalPoly::variable(); }
RationalPoly c(long long a, long long b = 1) { return RationalPoly::constant(Rational(a, b)); }

RationalPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> deg(-1, 5), num(-20, 20), den(1, 9);
    int d = deg(rng);
    std::vector<Rational> coeffs;
    for (int i = 0; i <= d; ++i) coeffs.emplace_back(num(rng), den(rng));
    return RationalPoly(coeffs);
}

} // namespace

TEST(Poly, Arithmetic) {
    EXPECT_EQ((k() * k() - k()) + k(), k() * k());
    EXPECT_EQ((k() - c(1)) * (k() - c(2)), k() * k() - c(3) * k() + c(2));
    EXPECT_EQ((k() * k() - k()) * Rational(1, 2), c(1, 2) * k() * k() - c(1, 2) * k());
    EXPECT_EQ((k() * k() - k()) / Rational(2), c(1, 2) * k() * k() - c(1, 2) * k());
}

TEST(Poly, ZeroPolynomial) {
    RationalPoly z;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), kZeroPolyDegree);
    EXPECT_TRUE((k() - k()).is_zero());
    EXPECT_EQ(poly_eval(z, 17), 0);
    EXPECT_EQ(poly_format(z), "0");
    EXPECT_EQ(poly_format(z, FormatMode::json), "[]");
}

TEST(Poly, Evaluation) {
    RationalPoly p = k() * (k() - c(1)).pow(2);
    EXPECT_EQ(poly_eval(p, 3), 12);
    // the twin-diamond chromatic polynomial vanishes at 2: there is a triangle
    EXPECT_EQ(poly_eval(fixtures::twin_diamonds_chromatic(), 2), 0);
    EXPECT_EQ(poly_eval(fixtures::twin_diamonds_chromatic(), 3), 36);
}

TEST(Poly, DegreeRules) {
    std::mt19937 rng(1);
    for (int i = 0; i < 200; ++i) {
        auto a = random_poly(rng), b = random_poly(rng);
        EXPECT_LE((a + b).degree(), std::max(a.degree(), b.degree()));
        if (!a.is_zero() && !b.is_zero()) EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    }
}

TEST(Poly, RingAxioms) {
    std::mt19937 rng(2);
    for (int i = 0; i < 200; ++i) {
        auto a = random_poly(rng), b = random_poly(rng), d = random_poly(rng);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ((a + b) + d, a + (b + d));
        EXPECT_EQ((a * b) * d, a * (b * d));
        EXPECT_EQ(a * (b + d), a * b + a * d);
        EXPECT_EQ(a - a, RationalPoly());
        long long x = static_cast<long long>(rng() % 41) - 20;
        EXPECT_EQ(poly_eval(a * b, x), poly_eval(a, x) * poly_eval(b, x));
    }
}

TEST(Poly, CoefficientsStayReduced) {
    RationalPoly p = c(2, 4) * k() + c(3, 6);
    EXPECT_EQ(boost::multiprecision::denominator(p.coefficient(1)), 2);
    EXPECT_EQ(poly_format(p, FormatMode::json), R"(["1/2","1/2"])");
}

TEST(PolyFormat, Human) {
    EXPECT_EQ(poly_format(c(1, 2) * k() * k() - c(1, 2) * k()), "1/2k^2 - 1/2k");
    EXPECT_EQ(poly_format(k() * (k() - c(1)) * (k() - c(2))), "k^3 - 3k^2 + 2k");
    EXPECT_EQ(poly_format(c(-1) * k() + c(5)), "-k + 5");
    EXPECT_EQ(poly_format(c(-3, 4)), "-3/4");
}

TEST(PolyFormat, Json) { EXPECT_EQ(poly_format(k() * k(), FormatMode::json), R"(["0/1","0/1","1/1"])"); }

TEST(PolyFormat, RoundTrip) {
    std::mt19937 rng(3);
    for (int i = 0; i < 500; ++i) {
        auto p = random_poly(rng);
        EXPECT_EQ(poly_parse(poly_format(p)), p) << poly_format(p);
        EXPECT_EQ(poly_parse(poly_format(p, FormatMode::json)), p);
        EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
    }
}

TEST(PolyFormat, ParseErrors) {
    EXPECT_THROW(parse_poly_human("k^"), std::invalid_argument);
    EXPECT_THROW(parse_poly_human("3x"), std::invalid_argument);
    EXPECT_THROW(parse_poly_human(""), std::invalid_argument);
    EXPECT_THROW(poly_parse("[1]"), std::invalid_argument);
}

TEST(PolyHelpers, FallingFactorialAndBinomial) {
    EXPECT_EQ(to_rational(falling_factorial(3)), k() * (k() - c(1)) * (k() - c(2)));
    EXPECT_EQ(poly_eval(binomial_poly(3), 7), 35);
    EXPECT_EQ(binomial_poly(0), c(1));
    EXPECT_EQ(to_rational(tree_term(1, 1, 1)), k() * (k() - c(1)) * (k() - c(2)) * (k() - c(3)));
}
