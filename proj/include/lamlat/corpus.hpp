/**
 * @file corpus.hpp
 * @brief Built-in named forms and lattices.
 *
 * HT_L is a definite unimodular 4x4 form with exponent 2; HT_A is HT_L in the basis
 * x1, x1 - x2, x3, x4 and HT_A_inv its inverse. E8 is the standard root-lattice Gram matrix.
 */
#pragma once

#include "covering.hpp"
#include "herm_form.hpp"
#include "zlattice.hpp"

#include <string>
#include <variant>
#include <vector>

namespace lamlat::corpus {

struct CorpusEntry {
    std::string name;
    std::variant<HermitianForm, IntegralLattice> payload;
    std::string provenance;

    bool is_form() const { return std::holds_alternative<HermitianForm>(payload); }
    const HermitianForm& form() const { return std::get<HermitianForm>(payload); }
    const IntegralLattice& lattice() const { return std::get<IntegralLattice>(payload); }
};

inline HermitianForm ht_l() {
    const LaurentPoly f = LaurentPoly::f(), f2 = f * f;
    return HermitianForm::validate(PolyMatrix{
        {1 + f + f2, f + f2, 1 + f, f},
        {f + f2, 1 + f + f2, f, 1 + f},
        {1 + f, f, 2, 0},
        {f, 1 + f, 0, 2},
    });
}

/// Rows are the basis x1, x1 - x2, x3, x4 in the coordinates of HT_L.
inline PolyMatrix ht_basis_change() {
    return PolyMatrix{{1, 0, 0, 0}, {1, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
}

inline HermitianForm ht_a() {
    const LaurentPoly f = LaurentPoly::f(), f2 = f * f;
    return HermitianForm::validate(PolyMatrix{
        {1 + f + f2, 1, 1 + f, f},
        {1, 2, 1, -1},
        {1 + f, 1, 2, 0},
        {f, -1, 0, 2},
    });
}

inline HermitianForm ht_a_inv() {
    const LaurentPoly f = LaurentPoly::f(), f2 = f * f;
    const LaurentPoly u = -1 - 2 * f;
    return HermitianForm::validate(PolyMatrix{
        {4, -2, u, u},
        {-2, 2, f, 1 + f},
        {u, f, 1 + f + f2, f + f2},
        {u, 1 + f, f + f2, 1 + f + f2},
    });
}

inline IntegralLattice e8() {
    // Bourbaki-style Dynkin labelling: chain 1-3-4-5-6-7-8 with 2 attached to 4.
    IntMatrix g(8, 8, 0);
    for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
    const std::size_t edges[][2] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
    for (const auto& e : edges) g(e[0], e[1]) = g(e[1], e[0]) = -1;
    return IntegralLattice::validate(std::move(g));
}

inline std::vector<std::string> names() { return {"HT_L", "HT_A", "HT_A_inv", "identity:<n>", "E8"}; }

inline CorpusEntry get(const std::string& name) {
    if (name == "HT_L") return {name, ht_l(), "definite unimodular rank-4 form L"};
    if (name == "HT_A") return {name, ht_a(), "L in the basis x1, x1-x2, x3, x4"};
    if (name == "HT_A_inv") return {name, ht_a_inv(), "inverse of HT_A"};
    if (name == "E8") return {name, e8(), "E8 root lattice"};
    const std::string prefix = "identity:";
    if (name.rfind(prefix, 0) == 0) {
        const std::string digits = name.substr(prefix.size());
        if (!digits.empty() && digits.size() < 4 && std::all_of(digits.begin(), digits.end(), ::isdigit)) {
            const int n = std::stoi(digits);
            if (n >= 1) return {name, HermitianForm::identity(static_cast<std::size_t>(n)), "identity form"};
        }
    }
    throw UnknownName(name);
}

}  // namespace lamlat::corpus
