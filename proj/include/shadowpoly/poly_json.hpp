#ifndef SHADOWPOLY_POLY_JSON_HPP
#define SHADOWPOLY_POLY_JSON_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "shadowpoly/poly.hpp"

namespace shadowpoly {

/// Ascending array of "num/den" strings.
inline nlohmann::json poly_to_json(const RationalPoly& p) {
    auto arr = nlohmann::json::array();
    for (const auto& q : p.coefficients()) arr.push_back(to_fraction_string(q));
    return arr;
}

inline RationalPoly poly_from_json(const nlohmann::json& arr) {
    if (!arr.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
    std::vector<Rational> coeffs;
    for (const auto& item : arr) {
        if (!item.is_string()) throw std::invalid_argument("polynomial coefficient must be a \"num/den\" string");
        coeffs.emplace_back(item.get<std::string>());
    }
    return RationalPoly(std::move(coeffs));
}

/// Accepts either output mode of poly_format.
inline RationalPoly poly_parse(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[')
        return poly_from_json(nlohmann::json::parse(text.begin(), text.end()));
    return parse_poly_human(text);
}

} // namespace shadowpoly

#endif // SHADOWPOLY_POLY_JSON_HPP
