#pragma once

#include "eistheta/cyclotomic.hpp"
#include "eistheta/qseries.hpp"

#include "json.hpp"

#include <stdexcept>

namespace eistheta {

// JSON encodings. Rationals are [num, den] with den > 0; a coefficient is
// the 8 power-basis coordinates; a series is {"delta", "trunc", "terms"}
// with terms as sorted [key, coords] pairs on the delta-lattice (the term
// at key n is coords * q^(n/delta)). from_json rejects anything violating
// the series invariants instead of repairing it.

inline nlohmann::ordered_json to_json(const Rational& r) {
    if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
        throw std::out_of_range("rational exceeds the 64-bit JSON range");
    return nlohmann::ordered_json::array(
        {static_cast<long long>(r.get_num().get_si()),
         static_cast<long long>(r.get_den().get_si())});
}

inline Rational rational_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
        !j[1].is_number_integer())
        throw std::invalid_argument("expected a [num, den] integer pair");
    long long num = j[0].get<long long>();
    long long den = j[1].get<long long>();
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    return frac(num, den);
}

inline nlohmann::ordered_json to_json(const CycNumber& x) {
    nlohmann::ordered_json coords = nlohmann::ordered_json::array();
    for (const Rational& r : x.coords()) coords.push_back(to_json(r));
    return coords;
}

inline CycNumber cyc_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 8)
        throw std::invalid_argument("expected 8 power-basis coordinates");
    CycNumber x;
    for (int i = 0; i < 8; ++i) x.coord(i) = rational_from_json(j[i]);
    return x;
}

inline nlohmann::ordered_json to_json(const FourierSeries& f) {
    nlohmann::ordered_json j;
    j["delta"] = f.delta();
    j["trunc"] = to_json(f.trunc());
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [key, coeff] : f.terms())
        terms.push_back(nlohmann::ordered_json::array({key, to_json(coeff)}));
    j["terms"] = std::move(terms);
    return j;
}

inline FourierSeries series_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("delta") || !j.contains("trunc") ||
        !j.contains("terms"))
        throw std::invalid_argument("expected {\"delta\", \"trunc\", \"terms\"}");
    if (!j["delta"].is_number_integer())
        throw std::invalid_argument("delta must be an integer");
    long long delta = j["delta"].get<long long>();
    Rational trunc = rational_from_json(j["trunc"]);
    FourierSeries f(delta, trunc);
    if (!j["terms"].is_array()) throw std::invalid_argument("terms must be an array");
    long long prev_key = -1;
    for (const auto& entry : j["terms"]) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer())
            throw std::invalid_argument("expected [key, coords] term entries");
        long long key = entry[0].get<long long>();
        if (key <= prev_key)
            throw std::invalid_argument("term keys must be strictly increasing");
        prev_key = key;
        if (key < 0 || frac(key, delta) >= trunc)
            throw std::invalid_argument("term key outside [0, trunc)");
        CycNumber coeff = cyc_from_json(entry[1]);
        if (coeff.is_zero()) throw std::invalid_argument("zero coefficient stored");
        f.set_coeff(frac(key, delta), coeff);
    }
    return f;
}

}  // namespace eistheta
