#ifndef SHADOWPOLY_POLY_HPP
#define SHADOWPOLY_POLY_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shadowpoly/numeric.hpp"

namespace shadowpoly {

/// Degree reported for the zero polynomial.
inline constexpr int kZeroPolyDegree = std::numeric_limits<int>::min();

/// Dense univariate polynomial in k, coefficients indexed by degree.
/// Trailing zero coefficients are always trimmed, so the zero polynomial has
/// no coefficients at all.
template <class Coeff>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }
    static Polynomial monomial(Coeff c, std::size_t degree) {
        std::vector<Coeff> v(degree + 1, Coeff(0));
        v[degree] = std::move(c);
        return Polynomial(std::move(v));
    }
    /// The polynomial k - a.
    static Polynomial shifted_variable(const Coeff& a) { return Polynomial(std::vector<Coeff>{-a, Coeff(1)}); }
    static Polynomial variable() { return shifted_variable(Coeff(0)); }

    bool is_zero() const noexcept { return c_.empty(); }
    int degree() const noexcept { return c_.empty() ? kZeroPolyDegree : static_cast<int>(c_.size()) - 1; }
    const std::vector<Coeff>& coefficients() const noexcept { return c_; }
    Coeff coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
    Coeff leading() const { return c_.empty() ? Coeff(0) : c_.back(); }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Coeff(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial& operator*=(const Coeff& s) {
        for (auto& x : c_) x *= s;
        trim();
        return *this;
    }
    Polynomial& operator/=(const Coeff& s) {
        if (s == Coeff(0)) throw std::domain_error("polynomial division by zero");
        for (auto& x : c_) x /= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == Coeff(0)) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(r));
    }
    friend Polynomial operator*(Polynomial a, const Coeff& s) { return a *= s; }
    friend Polynomial operator*(const Coeff& s, Polynomial a) { return a *= s; }
    friend Polynomial operator/(Polynomial a, const Coeff& s) { return a /= s; }

    Polynomial pow(unsigned e) const {
        Polynomial result = constant(Coeff(1));
        Polynomial base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// Horner evaluation.
    template <class X>
    X operator()(const X& k) const {
        X acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * k + X(*it);
        return acc;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    /// Total order: by degree, then coefficients from the top down.
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
        for (std::size_t i = a.c_.size(); i-- > 0;)
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        return false;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == Coeff(0)) c_.pop_back();
    }

    std::vector<Coeff> c_;
};

using IntegerPoly = Polynomial<BigInt>;
using RationalPoly = Polynomial<Rational>;

inline RationalPoly to_rational(const IntegerPoly& p) {
    std::vector<Rational> v(p.coefficients().begin(), p.coefficients().end());
    return RationalPoly(std::move(v));
}

/// Exact evaluation at an integer point.
inline Rational poly_eval(const RationalPoly& p, long long k) { return p(Rational(k)); }
inline BigInt poly_eval(const IntegerPoly& p, long long k) { return p(BigInt(k)); }

inline bool has_integer_coefficients(const RationalPoly& p) {
    return std::all_of(p.coefficients().begin(), p.coefficients().end(),
                       [](const Rational& q) { return boost::multiprecision::denominator(q) == 1; });
}

/// k (k-1) ... (k-r+1)
inline IntegerPoly falling_factorial(std::size_t r) {
    IntegerPoly p = IntegerPoly::constant(1);
    for (std::size_t i = 0; i < r; ++i) p *= IntegerPoly::shifted_variable(BigInt(i));
    return p;
}

/// binomial(k, r) as a polynomial in k.
inline RationalPoly binomial_poly(std::size_t r) {
    return to_rational(falling_factorial(r)) / Rational(factorial(r));
}

/// k (k-1)^a (k-2)^b (k-3)^c, the shape every tree formula is built from.
inline IntegerPoly tree_term(unsigned a, unsigned b, unsigned c) {
    return IntegerPoly::variable() * IntegerPoly::shifted_variable(1).pow(a) *
           IntegerPoly::shifted_variable(2).pow(b) * IntegerPoly::shifted_variable(3).pow(c);
}

enum class FormatMode { human, json };

namespace detail {

inline std::string coefficient_text(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
    return to_fraction_string(q);
}

} // namespace detail

/// Human mode: descending terms such as "1/2k^2 - 1/2k". JSON mode: ascending
/// array of "num/den" strings such as ["0/1","0/1","1/1"].
inline std::string poly_format(const RationalPoly& p, FormatMode mode = FormatMode::human) {
    const auto& c = p.coefficients();
    if (mode == FormatMode::json) {
        std::string out = "[";
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) out += ',';
            out += '"' + to_fraction_string(c[i]) + '"';
        }
        return out + "]";
    }
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        bool negative = c[i] < 0;
        Rational mag = negative ? Rational(-c[i]) : c[i];
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (mag != 1 || i == 0) out += detail::coefficient_text(mag);
        if (i >= 1) out += 'k';
        if (i >= 2) out += '^' + std::to_string(i);
    }
    return out;
}

inline std::string poly_format(const IntegerPoly& p, FormatMode mode = FormatMode::human) {
    return poly_format(to_rational(p), mode);
}

/// Parses the human form produced by poly_format.
inline RationalPoly parse_poly_human(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw std::invalid_argument("empty polynomial text");

    auto fail = [&](std::size_t at) {
        throw std::invalid_argument("malformed polynomial at position " + std::to_string(at) + ": " + s);
    };
    auto read_digits = [&](std::size_t& i) {
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail(i);
        return s.substr(start, i - start);
    };

    std::vector<Rational> coeffs;
    std::size_t i = 0;
    while (i < s.size()) {
        bool negative = false;
        if (s[i] == '+' || s[i] == '-') {
            negative = s[i] == '-';
            ++i;
        } else if (i != 0) {
            fail(i);
        }
        Rational coef = 1;
        bool have_coef = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            BigInt num(read_digits(i));
            BigInt den = 1;
            if (i < s.size() && s[i] == '/') {
                ++i;
                den = BigInt(read_digits(i));
                if (den == 0) fail(i);
            }
            coef = Rational(num, den);
            have_coef = true;
        }
        std::size_t power = 0;
        if (i < s.size() && s[i] == 'k') {
            ++i;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                power = std::stoul(read_digits(i));
            }
        } else if (!have_coef) {
            fail(i);
        }
        if (coeffs.size() <= power) coeffs.resize(power + 1, Rational(0));
        coeffs[power] += negative ? Rational(-coef) : coef;
    }
    return RationalPoly(std::move(coeffs));
}

} // namespace shadowpoly

#endif // SHADOWPOLY_POLY_HPP
