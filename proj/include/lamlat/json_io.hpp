/**
 * @file json_io.hpp
 * @brief JSON schemas shared by the library and the CLI.
 *
 *   poly    : [[degree, coeff], ...]  sorted by degree, coefficients nonzero
 *   form    : {"name": s, "rank": n, "entries": [[poly, ...], ...]}
 *   lattice : {"rank": r, "gram": [[int, ...], ...]}
 *
 * Coefficients outside the signed 64-bit range are written as decimal strings.
 */
#pragma once

#include "errors.hpp"
#include "herm_form.hpp"
#include "zlattice.hpp"

#include <json.hpp>

#include <string>

namespace lamlat {

using Json = nlohmann::json;

inline Json big_to_json(const BigInt& v) {
    if (fits_int64(v)) return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

inline BigInt big_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
        if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
            throw ParseError("invalid integer string '" + s + "'");
        return BigInt(s);
    }
    throw ParseError("expected an integer, got " + j.dump());
}

inline Json poly_to_json(const LaurentPoly& p) {
    Json arr = Json::array();
    for (const auto& [d, c] : p.terms()) arr.push_back(Json::array({d, big_to_json(c)}));
    return arr;
}

inline LaurentPoly poly_from_json(const Json& j) {
    if (j.is_number_integer()) return LaurentPoly(BigInt(j.get<std::int64_t>()));
    if (!j.is_array()) throw ParseError("polynomial must be an array of [degree, coeff] pairs");
    LaurentPoly p;
    std::optional<int> last;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer())
            throw ParseError("polynomial term must be [degree, coeff]: " + term.dump());
        const int d = term[0].get<int>();
        const BigInt c = big_from_json(term[1]);
        if (last && d <= *last) throw ParseError("polynomial degrees must be strictly increasing");
        if (c == 0) throw ParseError("polynomial coefficients must be nonzero");
        last = d;
        p.add_term(d, c);
    }
    return p;
}

inline Json form_to_json(const HermitianForm& a, const std::string& name) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < a.rank(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < a.rank(); ++j) row.push_back(poly_to_json(a(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"name", name}, {"rank", a.rank()}, {"entries", std::move(rows)}};
}

/// Parses and validates a form; Hermitian failures surface as HermitianViolation.
inline HermitianForm form_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("entries") || !j["entries"].is_array())
        throw ParseError("form must be an object with an \"entries\" array");
    const auto& e = j["entries"];
    const std::size_t n = e.size();
    if (j.contains("rank") && (!j["rank"].is_number_integer() || j["rank"].get<std::int64_t>() != static_cast<std::int64_t>(n)))
        throw ParseError("\"rank\" does not match the number of rows");
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!e[i].is_array() || e[i].size() != n) throw ParseError("form entries must be a square matrix");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = poly_from_json(e[i][k]);
    }
    return HermitianForm::validate(std::move(m));
}

inline Json lattice_to_json(const IntegralLattice& lat) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < lat.rank(); ++i) rows.push_back(lat.gram().row(i));
    return Json{{"rank", lat.rank()}, {"gram", std::move(rows)}};
}

inline IntegralLattice lattice_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("gram") || !j["gram"].is_array())
        throw ParseError("lattice must be an object with a \"gram\" array");
    const auto& g = j["gram"];
    const std::size_t n = g.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!g[i].is_array() || g[i].size() != n) throw ParseError("gram must be a square matrix");
        for (std::size_t k = 0; k < n; ++k) {
            if (!g[i][k].is_number_integer()) throw ParseError("gram entries must be integers");
            m(i, k) = g[i][k].get<std::int64_t>();
        }
    }
    if (j.contains("rank") && j["rank"] != n) throw ParseError("\"rank\" does not match the gram size");
    try {
        return IntegralLattice::validate(std::move(m));
    } catch (const DimensionMismatch& e) {
        throw ParseError(e.what());
    } catch (const Error& e) {
        throw ParseError(e.what());
    }
}

inline Json short_vectors_to_json(const ShortVectorSet& s) {
    Json vs = Json::array();
    for (const auto& v : s.vectors) vs.push_back(Json{{"coords", v.coords}, {"norm", v.norm}});
    return Json{{"bound", s.bound}, {"vectors", std::move(vs)}};
}

inline ShortVectorSet short_vectors_from_json(const Json& j) {
    ShortVectorSet s;
    s.bound = j.at("bound").get<std::int64_t>();
    for (const auto& v : j.at("vectors")) s.vectors.push_back({v.at("coords").get<IntVector>(), v.at("norm").get<std::int64_t>()});
    return s;
}

inline Json decomposition_to_json(const Decomposition& d) {
    Json comps = Json::array();
    for (const auto& c : d.components)
        comps.push_back(Json{{"members", c.members}, {"rank", c.rank}, {"det", big_to_json(c.det)}, {"basis", c.basis}});
    Json mv = Json::array();
    for (const auto& v : d.minimal_vectors) mv.push_back(Json{{"coords", v.coords}, {"norm", v.norm}});
    return Json{{"bound", d.bound}, {"components", std::move(comps)}, {"minimal_vectors", std::move(mv)}};
}

inline Decomposition decomposition_from_json(const Json& j) {
    Decomposition d;
    d.bound = j.at("bound").get<std::int64_t>();
    for (const auto& v : j.at("minimal_vectors"))
        d.minimal_vectors.push_back({v.at("coords").get<IntVector>(), v.at("norm").get<std::int64_t>()});
    for (const auto& c : j.at("components")) {
        DecompositionComponent comp;
        comp.members = c.at("members").get<std::vector<std::size_t>>();
        comp.rank = c.at("rank").get<std::size_t>();
        comp.det = big_from_json(c.at("det"));
        comp.basis = c.at("basis").get<std::vector<IntVector>>();
        d.components.push_back(std::move(comp));
    }
    return d;
}

/// Compact, key-sorted, LF-terminated rendering.
inline std::string render_json(const Json& j) { return j.dump() + "\n"; }

}  // namespace lamlat
