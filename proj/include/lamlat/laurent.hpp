/**
 * @file laurent.hpp
 * @brief Integral Laurent polynomials, the ring Z[t, 1/t].
 *
 * A LaurentPoly is kept in canonical sparse form: a map from degree to a
 * nonzero arbitrary-precision coefficient. The empty map is the zero
 * polynomial, which has no degrees at all.
 */
#pragma once

#include "bigint.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace lamlat {

struct DegreeBounds {
    int min_degree;
    int max_degree;
    friend bool operator==(const DegreeBounds&, const DegreeBounds&) = default;
};

class LaurentPoly {
public:
    using Terms = std::map<int, BigInt>;

    LaurentPoly() = default;
    LaurentPoly(long long c) {  // NOLINT: implicit integer embedding
        if (c != 0) terms_.emplace(0, BigInt(c));
    }
    LaurentPoly(const BigInt& c) {  // NOLINT
        if (c != 0) terms_.emplace(0, c);
    }
    /// From (degree, coefficient) pairs; repeated degrees are summed.
    LaurentPoly(std::initializer_list<std::pair<int, long long>> terms) {
        for (auto [d, c] : terms) add_term(d, BigInt(c));
    }

    static LaurentPoly monomial(int degree, const BigInt& c = 1) {
        LaurentPoly p;
        p.add_term(degree, c);
        return p;
    }
    static LaurentPoly t() { return monomial(1); }
    /// f = t + 1/t
    static LaurentPoly f() { return monomial(1) + monomial(-1); }

    /// Builds from dense coefficients starting at `low_degree`.
    static LaurentPoly from_dense(int low_degree, const std::vector<long long>& coeffs) {
        LaurentPoly p;
        for (std::size_t k = 0; k < coeffs.size(); ++k) p.add_term(low_degree + static_cast<int>(k), coeffs[k]);
        return p;
    }

    void add_term(int degree, const BigInt& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(degree, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    BigInt coeff(int degree) const {
        auto it = terms_.find(degree);
        return it == terms_.end() ? BigInt(0) : it->second;
    }
    BigInt constant_term() const { return coeff(0); }

    std::optional<DegreeBounds> degree_bounds() const {
        if (terms_.empty()) return std::nullopt;
        return DegreeBounds{terms_.begin()->first, terms_.rbegin()->first};
    }

    /// The bar involution t -> 1/t.
    LaurentPoly involute() const {
        LaurentPoly r;
        for (const auto& [d, c] : terms_) r.terms_.emplace(-d, c);
        return r;
    }

    bool is_symmetric() const {
        for (const auto& [d, c] : terms_) {
            if (d > 0 && coeff(-d) != c) return false;
            if (d < 0 && coeff(-d) != c) return false;
        }
        return true;
    }

    /// Multiplication by t^k.
    LaurentPoly shifted(int k) const {
        LaurentPoly r;
        for (const auto& [d, c] : terms_) r.terms_.emplace(d + k, c);
        return r;
    }

    BigInt eval_at_one() const {
        BigInt s = 0;
        for (const auto& [d, c] : terms_) s += c;
        return s;
    }

    /// Sum of the coefficients at degrees congruent to r modulo m.
    BigInt coeff_wrap(int m, int r) const {
        if (m < 1 || r < 0 || r >= m) throw std::invalid_argument("coeff_wrap requires m >= 1 and 0 <= r < m");
        BigInt s = 0;
        for (const auto& [d, c] : terms_) {
            int res = d % m;
            if (res < 0) res += m;
            if (res == r) s += c;
        }
        return s;
    }

    /// Sum of squared coefficients, i.e. the constant term of p * involute(p).
    BigInt mass() const {
        BigInt s = 0;
        for (const auto& [d, c] : terms_) s += c * c;
        return s;
    }

    LaurentPoly operator-() const {
        LaurentPoly r = *this;
        for (auto& [d, c] : r.terms_) c = -c;
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [d, c] : o.terms_) add_term(d, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [d, c] : o.terms_) add_term(d, -c);
        return *this;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
        return r;
    }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }

    /// Is this +-t^k for some k?
    bool is_unit() const { return terms_.size() == 1 && (terms_.begin()->second == 1 || terms_.begin()->second == -1); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [d, c] : terms_) {
            BigInt mag = c < 0 ? BigInt(-c) : c;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (d == 0) {
                os << mag;
                continue;
            }
            if (mag != 1) os << mag << "*";
            os << "t";
            if (d != 1) os << "^" << d;
        }
        return os.str();
    }

private:
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

}  // namespace lamlat
