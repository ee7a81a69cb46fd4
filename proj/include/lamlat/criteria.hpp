/**
 * @file criteria.hpp
 * @brief Computable splitting checks for definite forms over Z[t, 1/t].
 *
 * Each search here is a bounded semi-decision: it either returns a
 * certificate that re-verifies exactly, or reports exhaustion at an
 * explicit bound. The battery is aggregated by split_report().
 */
#pragma once

#include "covering.hpp"
#include "herm_form.hpp"
#include "json_io.hpp"
#include "zlattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamlat {

// ---------------------------------------------------------------------------
// Diagonal splittings and the winding bound

/// a = epsilon + a'(t) + a'(1/t) with epsilon in {0, 1} and a' supported in
/// degrees >= 0 with non-negative constant term.
struct DiagonalSplit {
    int epsilon = 0;
    LaurentPoly a_prime;
    friend bool operator==(const DiagonalSplit&, const DiagonalSplit&) = default;
};

inline DiagonalSplit diagonal_split(const LaurentPoly& a) {
    if (!a.is_symmetric()) throw NotSymmetric();
    const BigInt c = a.constant_term();
    if (c < 0) throw NegativeConstant();
    DiagonalSplit s;
    s.epsilon = (c % 2 == 0) ? 0 : 1;
    s.a_prime.add_term(0, (c - s.epsilon) / 2);
    for (const auto& [d, coeff] : a.terms())
        if (d > 0) s.a_prime.add_term(d, coeff);
    return s;
}

struct WindingWitness {
    std::string name;
    LaurentPoly poly;
    friend bool operator==(const WindingWitness&, const WindingWitness&) = default;
};

struct WindingReport {
    int max_deg = 0;
    int min_deg = 0;
    int lambda = 0;
    std::vector<WindingWitness> max_witnesses;
    std::vector<WindingWitness> min_witnesses;
    std::vector<std::size_t> basis_order;  ///< permutation of the basis the report refers to
    friend bool operator==(const WindingReport&, const WindingReport&) = default;
};

/// Candidate polynomials whose degree extremes define the winding bound,
/// with c_ij = sum_{k <= min(i,j)} a~_ik b~_kj built from the truncations
/// that replace diagonal entries by their primed halves.
inline std::vector<WindingWitness> winding_candidates(const HermitianForm& a) {
    const HermitianForm b = inverse(a);
    const std::size_t n = a.rank();
    auto idx = [](std::size_t i, std::size_t j) { return std::to_string(i + 1) + std::to_string(j + 1); };
    PolyMatrix at = a.entries(), bt = b.entries();
    std::vector<WindingWitness> cands{{"1", LaurentPoly(1)}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) cands.push_back({"a" + idx(i, j), a(i, j)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) cands.push_back({"b" + idx(i, j), b(i, j)});
    for (std::size_t i = 0; i < n; ++i) {
        at(i, i) = diagonal_split(a(i, i)).a_prime;
        cands.push_back({"a'" + idx(i, i) + "(t^-1)", at(i, i).involute()});
    }
    for (std::size_t i = 0; i < n; ++i) {
        bt(i, i) = diagonal_split(b(i, i)).a_prime;
        cands.push_back({"b'" + idx(i, i) + "(t)", bt(i, i)});
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            LaurentPoly c;
            for (std::size_t k = 0; k <= std::min(i, j); ++k) c += at(i, k) * bt(k, j);
            cands.push_back({"c" + idx(i, j), c});
        }
    return cands;
}

inline WindingReport winding_bound(const HermitianForm& a) {
    WindingReport r;
    r.basis_order.resize(a.rank());
    std::iota(r.basis_order.begin(), r.basis_order.end(), std::size_t{0});
    const auto cands = winding_candidates(a);
    bool first = true;
    for (const auto& c : cands) {
        const auto b = c.poly.degree_bounds();
        if (!b) continue;
        if (first) {
            r.max_deg = b->max_degree;
            r.min_deg = b->min_degree;
            first = false;
        }
        r.max_deg = std::max(r.max_deg, b->max_degree);
        r.min_deg = std::min(r.min_deg, b->min_degree);
    }
    for (const auto& c : cands) {
        const auto b = c.poly.degree_bounds();
        if (!b) continue;
        if (b->max_degree == r.max_deg) r.max_witnesses.push_back(c);
        if (b->min_degree == r.min_deg) r.min_witnesses.push_back(c);
    }
    r.lambda = r.max_deg - r.min_deg;
    return r;
}

inline HermitianForm permute_basis(const HermitianForm& a, const std::vector<std::size_t>& order) {
    PolyMatrix p(a.rank(), a.rank(), 0);
    for (std::size_t r = 0; r < order.size(); ++r) p(r, order[r]) = 1;
    return change_basis(p, a);
}

/// Smallest winding bound over all orderings of the basis (rank <= max_rank;
/// larger ranks use the given order only).
inline WindingReport winding_bound_sweep(const HermitianForm& a, std::size_t max_rank = 7) {
    std::vector<std::size_t> order(a.rank());
    std::iota(order.begin(), order.end(), std::size_t{0});
    WindingReport best = winding_bound(a);
    if (a.rank() > max_rank) return best;
    while (std::next_permutation(order.begin(), order.end())) {
        WindingReport r = winding_bound(permute_basis(a, order));
        if (r.lambda < best.lambda) {
            r.basis_order = order;
            best = std::move(r);
        }
    }
    return best;
}

// ---------------------------------------------------------------------------
// Hermitian sums of squares

namespace detail {

struct HsosCandidate {
    LaurentPoly poly;
    std::int64_t mass;
    std::vector<std::int64_t> autocorr;  // lags 0..spread_bound
};

/// Normalized polynomials (lowest degree 0, positive lowest coefficient)
/// with degree spread <= spread and squared-coefficient mass <= max_mass.
inline std::vector<HsosCandidate> hsos_candidates(int spread, std::int64_t max_mass) {
    std::vector<HsosCandidate> out;
    std::vector<long long> coeffs;
    const auto w = static_cast<std::size_t>(spread + 1);
    std::function<void(std::int64_t)> grow = [&](std::int64_t room) {
        if (!coeffs.empty() && coeffs.back() != 0) {
            HsosCandidate c;
            c.poly = LaurentPoly::from_dense(0, coeffs);
            c.mass = max_mass - room;
            c.autocorr.assign(w, 0);
            for (std::size_t lag = 0; lag < w; ++lag)
                for (std::size_t k = 0; k + lag < coeffs.size(); ++k) c.autocorr[lag] += coeffs[k] * coeffs[k + lag];
            out.push_back(std::move(c));
        }
        if (coeffs.size() == w) return;
        const bool leading = coeffs.empty();
        for (long long v = leading ? 1 : -static_cast<long long>(std::sqrt(static_cast<double>(room))) ;
             v * v <= room; ++v) {
            if (leading && v == 0) continue;
            coeffs.push_back(v);
            grow(room - v * v);
            coeffs.pop_back();
        }
    };
    grow(max_mass);
    std::sort(out.begin(), out.end(), [](const HsosCandidate& x, const HsosCandidate& y) {
        if (x.mass != y.mass) return x.mass > y.mass;
        return x.poly.str() < y.poly.str();
    });
    return out;
}

/// Depth-first search for multisets of candidates whose autocorrelations sum
/// to `target`; calls `found` on each, stopping when it returns true.
template <class Found>
bool hsos_search(const std::vector<HsosCandidate>& cands, const std::vector<std::int64_t>& target, std::size_t max_parts,
                 Found&& found) {
    std::vector<std::int64_t> acc(target.size(), 0);
    std::vector<std::size_t> chosen;
    std::function<bool(std::size_t, std::int64_t)> dfs = [&](std::size_t start, std::int64_t room) -> bool {
        for (std::size_t lag = 1; lag < target.size(); ++lag)
            if (std::abs(target[lag] - acc[lag]) > room) return false;
        if (room == 0) {
            if (acc != target) return false;
            std::vector<LaurentPoly> parts;
            for (auto i : chosen) parts.push_back(cands[i].poly);
            return found(parts);
        }
        if (chosen.size() == max_parts) return false;
        for (std::size_t i = start; i < cands.size(); ++i) {
            if (cands[i].mass > room) continue;
            chosen.push_back(i);
            for (std::size_t lag = 0; lag < acc.size(); ++lag) acc[lag] += cands[i].autocorr[lag];
            const bool stop = dfs(i, room - cands[i].mass);
            for (std::size_t lag = 0; lag < acc.size(); ++lag) acc[lag] -= cands[i].autocorr[lag];
            chosen.pop_back();
            if (stop) return true;
        }
        return false;
    };
    return dfs(0, target.empty() ? 0 : target[0]);
}

inline std::optional<std::vector<std::int64_t>> hsos_target(const LaurentPoly& a, int spread) {
    if (!a.is_symmetric()) throw NotSymmetric();
    if (a.constant_term() < 0) return std::nullopt;
    const auto b = a.degree_bounds();
    if (b && b->max_degree > spread) return std::nullopt;
    std::vector<std::int64_t> t(static_cast<std::size_t>(spread + 1), 0);
    for (const auto& [d, c] : a.terms())
        if (d >= 0) t[static_cast<std::size_t>(d)] = to_int64(c);
    return t;
}

}  // namespace detail

inline LaurentPoly hsos_value(const std::vector<LaurentPoly>& parts) {
    LaurentPoly s;
    for (const auto& p : parts) s += p * p.involute();
    return s;
}

struct HsosResult {
    std::optional<std::vector<LaurentPoly>> certificate;  ///< empty: none up to the bound
    int spread_bound = 0;
};

/// Searches a = sum_i a_i(t) a_i(1/t) over summands of degree spread <= spread_bound.
/// The constant term of a equals the total squared-coefficient mass of the
/// summands, which makes the search finite.
inline HsosResult hsos(const LaurentPoly& a, int spread_bound) {
    HsosResult r;
    r.spread_bound = spread_bound;
    const auto target = detail::hsos_target(a, spread_bound);
    if (!target) return r;
    if (a.is_zero()) {
        r.certificate = std::vector<LaurentPoly>{};
        return r;
    }
    const auto cands = detail::hsos_candidates(spread_bound, (*target)[0]);
    detail::hsos_search(cands, *target, std::numeric_limits<std::size_t>::max(), [&](const std::vector<LaurentPoly>& p) {
        r.certificate = p;
        return true;
    });
    return r;
}

inline int default_spread(const LaurentPoly& a) {
    const auto b = a.degree_bounds();
    return (b ? b->max_degree : 0) + 2;
}

/// Every hsos decomposition of a with at most max_parts summands.
inline std::vector<std::vector<LaurentPoly>> hsos_all(const LaurentPoly& a, int spread_bound, std::size_t max_parts) {
    std::vector<std::vector<LaurentPoly>> all;
    const auto target = detail::hsos_target(a, spread_bound);
    if (!target) return all;
    if (a.is_zero()) return {{}};
    const auto cands = detail::hsos_candidates(spread_bound, (*target)[0]);
    detail::hsos_search(cands, *target, max_parts, [&](const std::vector<LaurentPoly>& p) {
        all.push_back(p);
        return false;
    });
    return all;
}

// ---------------------------------------------------------------------------
// Factorizations A = bar(C) C^T

inline bool verify_factor(const HermitianForm& a, const PolyMatrix& c) {
    if (c.rows() != a.rank()) return false;
    return involute(c) * c.transposed() == a.entries();
}

struct FactorResult {
    std::optional<PolyMatrix> certificate;
    int spread_bound = 0;
};

/// Row i of C is an hsos decomposition of a_ii spread over distinct columns;
/// entries in columns already used by earlier rows may carry a sign and a
/// shift t^s with |s| <= spread_bound, fresh columns are normalized.
inline FactorResult factor_search(const HermitianForm& a, int spread_bound) {
    const std::size_t n = a.rank();
    FactorResult res;
    res.spread_bound = spread_bound;
    std::vector<std::vector<std::vector<LaurentPoly>>> rows(n);
    for (std::size_t i = 0; i < n; ++i) {
        rows[i] = hsos_all(a(i, i), spread_bound, n);
        if (rows[i].empty()) return res;
    }
    PolyMatrix c(n, n, 0);
    auto row_consistent = [&](std::size_t i) {
        for (std::size_t j = 0; j < i; ++j) {
            LaurentPoly s;
            for (std::size_t k = 0; k < n; ++k)
                if (!c(j, k).is_zero() && !c(i, k).is_zero()) s += c(j, k).involute() * c(i, k);
            if (!(s == a(j, i))) return false;
        }
        return true;
    };
    std::function<bool(std::size_t, std::size_t)> place_row = [&](std::size_t i, std::size_t used) -> bool {
        if (i == n) return true;
        for (const auto& parts : rows[i]) {
            std::vector<char> taken(n, 0);
            std::function<bool(std::size_t, std::size_t)> place = [&](std::size_t p, std::size_t fresh) -> bool {
                if (p == parts.size()) {
                    if (!row_consistent(i)) return false;
                    return place_row(i + 1, used + fresh);
                }
                for (std::size_t col = 0; col < used; ++col) {
                    if (taken[col]) continue;
                    taken[col] = 1;
                    for (int sign : {1, -1})
                        for (int s = -spread_bound; s <= spread_bound; ++s) {
                            c(i, col) = parts[p].shifted(s) * LaurentPoly(sign);
                            if (place(p + 1, fresh)) return true;
                        }
                    c(i, col) = 0;
                    taken[col] = 0;
                }
                if (used + fresh < n) {
                    const std::size_t col = used + fresh;
                    c(i, col) = parts[p];
                    if (place(p + 1, fresh + 1)) return true;
                    c(i, col) = 0;
                }
                return false;
            };
            if (place(0, 0)) return true;
            for (std::size_t k = 0; k < n; ++k) c(i, k) = 0;
        }
        return false;
    };
    if (place_row(0, 0)) {
        if (!verify_factor(a, c)) throw std::logic_error("factor_search produced an invalid certificate");
        res.certificate = c;
    }
    return res;
}

// ---------------------------------------------------------------------------
// Elements of square length one

/// Representative with lowest degree 0 across coordinates and positive
/// leading coefficient in the first nonzero coordinate.
inline LambdaVector normalize_unit_multiple(LambdaVector v) {
    std::optional<int> low;
    for (const auto& p : v)
        if (auto b = p.degree_bounds()) low = low ? std::min(*low, b->min_degree) : b->min_degree;
    if (!low) return v;
    for (auto& p : v) p = p.shifted(-*low);
    for (const auto& p : v) {
        if (p.is_zero()) continue;
        if (p.terms().begin()->second < 0)
            for (auto& q : v) q = -q;
        break;
    }
    return v;
}

/// Square-length-1 elements with all degrees in [-degree_bound, degree_bound]
/// and coefficients bounded by coeff_bound (0 = unbounded), one per unit class.
/// Complete within that window: they are exactly the norm-1 vectors of the
/// window lattice.
inline std::vector<LambdaVector> unit_element_search(const HermitianForm& a, int degree_bound, std::int64_t coeff_bound = 0) {
    const IntegralLattice win = window_gram(a, degree_bound);
    std::map<std::string, LambdaVector> classes;
    for (const auto& v : enumerate_up_to(win, 1).vectors) {
        if (coeff_bound > 0 &&
            std::any_of(v.coords.begin(), v.coords.end(), [&](std::int64_t c) { return std::abs(c) > coeff_bound; }))
            continue;
        LambdaVector y = normalize_unit_multiple(from_window_vector(v.coords, a.rank(), degree_bound));
        std::string key;
        for (const auto& p : y) key += poly_to_json(p).dump() + ";";
        classes.emplace(std::move(key), std::move(y));
    }
    std::vector<LambdaVector> out;
    for (auto& [k, y] : classes) out.push_back(std::move(y));
    return out;
}

// ---------------------------------------------------------------------------
// Lattice-level checks on the cyclic covers

struct SmallGeneratorResult {
    bool pass = false;
    std::size_t vector_count = 0;  ///< vectors of norm <= 2, up to sign
    std::size_t span_rank = 0;
    BigInt span_index = 0;         ///< index of their span (0 if not full rank)
};

/// Do the vectors of norm <= 2 generate the m-fold cover lattice?
inline SmallGeneratorResult small_generator_check(const HermitianForm& a, int m) {
    const IntegralLattice lat = reduce_mod_m(a, m);
    SmallGeneratorResult r;
    const auto vs = enumerate_up_to(lat, 2);
    r.vector_count = vs.vectors.size();
    EchelonSpan span(lat.rank());
    for (const auto& v : vs.vectors) span.add(std::vector<BigInt>(v.coords.begin(), v.coords.end()));
    r.span_rank = span.rank();
    r.span_index = span.index();
    r.pass = r.span_index == 1;
    return r;
}

struct StabilityRecord {
    int m = 0;
    bool is_minimal = false;
    std::int64_t reduced_norm = 0;
    std::int64_t min_lift_norm = 0;
    bool inequality_holds = false;  ///< every lift has |x'|^2 >= |x|^2
    bool strict_holds = false;      ///< every lift has |x'|^2 > |x|^2 - 2
    IntVector lift_witness;
};

/// For each m: minimality of the image of v in the m-fold cover and the
/// minimal norm of its lifts to the 2m-fold cover. Lift norms are congruent
/// to the base norm mod 2, so the two inequalities always agree.
inline std::vector<StabilityRecord> minimal_stability_check(const HermitianForm& a, const LambdaVector& v,
                                                            const std::vector<int>& ms) {
    check_length(a, v);
    if (std::all_of(v.begin(), v.end(), [](const LaurentPoly& p) { return p.is_zero(); })) throw ZeroVector();
    std::vector<StabilityRecord> out;
    for (int m : ms) {
        StabilityRecord rec;
        rec.m = m;
        const IntegralLattice lat = reduce_mod_m(a, m);
        require_definite(lat);
        const IntVector x = reduce_vector(v, m);
        rec.reduced_norm = lat.norm(x);
        rec.is_minimal = rec.reduced_norm > 0 && is_minimal(lat, x);
        const LiftResult lift = lift_min_norm(a, m, x);
        rec.min_lift_norm = lift.min_norm;
        rec.lift_witness = lift.witness;
        rec.inequality_holds = rec.min_lift_norm >= rec.reduced_norm;
        rec.strict_holds = rec.min_lift_norm > rec.reduced_norm - 2;
        if (rec.inequality_holds != rec.strict_holds)
            throw std::logic_error("lift parity violated: base norm " + std::to_string(rec.reduced_norm) +
                                   ", lift norm " + std::to_string(rec.min_lift_norm));
        out.push_back(std::move(rec));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Aggregated report

enum class Verdict { pass, fail, inconclusive };
enum class OverallVerdict { split_certified, obstructed, inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        default: return "inconclusive";
    }
}
inline const char* to_string(OverallVerdict v) {
    switch (v) {
        case OverallVerdict::split_certified: return "split-certified";
        case OverallVerdict::obstructed: return "obstructed";
        default: return "inconclusive";
    }
}

/// Role of a check in the aggregate (stored in the payload under "kind").
enum class CheckKind { precondition, necessary, sufficient };

inline const char* to_string(CheckKind k) {
    switch (k) {
        case CheckKind::precondition: return "precondition";
        case CheckKind::necessary: return "necessary";
        default: return "sufficient";
    }
}

struct SplitCheck {
    std::string name;
    Verdict verdict = Verdict::inconclusive;
    Json payload = Json::object();
    friend bool operator==(const SplitCheck&, const SplitCheck&) = default;
};

struct SplitReport {
    OverallVerdict verdict = OverallVerdict::inconclusive;
    std::vector<SplitCheck> checks;
    friend bool operator==(const SplitReport&, const SplitReport&) = default;
};

struct SplitParams {
    int m_max = 3;                    ///< reductions examined: m = 1..m_max
    std::optional<int> spread;        ///< hsos/factor spread bound (default: max exponent + 2)
    int stability_m_max = 2;          ///< lift checks for m = 1..stability_m_max
    std::optional<int> window;        ///< window half-width (default: 2 * max exponent + 2)
    std::size_t sweep_max_rank = 6;   ///< basis-order sweep of the winding bound up to this rank
};

namespace detail {

inline std::vector<std::uint64_t> theta_of_sum(const std::vector<std::uint64_t>& base, int copies) {
    std::vector<std::uint64_t> acc(base.size(), 0);
    acc[0] = 1;
    for (int c = 0; c < copies; ++c) {
        std::vector<std::uint64_t> next(base.size(), 0);
        for (std::size_t i = 0; i < base.size(); ++i)
            for (std::size_t j = 0; i + j < base.size(); ++j) next[i + j] += acc[i] * base[j];
        acc = std::move(next);
    }
    return acc;
}

inline std::vector<std::size_t> component_ranks(const Decomposition& d) {
    std::vector<std::size_t> r;
    for (const auto& c : d.components) r.push_back(c.rank);
    std::sort(r.begin(), r.end());
    return r;
}

inline OverallVerdict aggregate(const std::vector<SplitCheck>& checks) {
    bool necessary_failed = false, sufficient_passed = false, precondition_failed = false;
    for (const auto& c : checks) {
        const std::string kind = c.payload.value("kind", "");
        if (kind == "precondition" && c.verdict == Verdict::fail) precondition_failed = true;
        if (kind == "necessary" && c.verdict == Verdict::fail) necessary_failed = true;
        if (kind == "sufficient" && c.verdict == Verdict::pass) sufficient_passed = true;
    }
    if (necessary_failed && sufficient_passed)
        throw std::logic_error("split report is inconsistent: a sufficient check passed and a necessary one failed");
    if (precondition_failed) return OverallVerdict::inconclusive;
    if (necessary_failed) return OverallVerdict::obstructed;
    if (sufficient_passed) return OverallVerdict::split_certified;
    return OverallVerdict::inconclusive;
}

inline Json poly_matrix_to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(poly_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json witnesses_to_json(const std::vector<WindingWitness>& ws) {
    Json arr = Json::array();
    for (const auto& w : ws) arr.push_back(Json{{"name", w.name}, {"poly", poly_to_json(w.poly)}});
    return arr;
}

}  // namespace detail

inline Json winding_to_json(const WindingReport& w) {
    return Json{{"max_deg", w.max_deg},
                {"min_deg", w.min_deg},
                {"lambda", w.lambda},
                {"basis_order", w.basis_order},
                {"max_witnesses", detail::witnesses_to_json(w.max_witnesses)},
                {"min_witnesses", detail::witnesses_to_json(w.min_witnesses)}};
}

inline WindingReport winding_from_json(const Json& j) {
    WindingReport w;
    w.max_deg = j.at("max_deg").get<int>();
    w.min_deg = j.at("min_deg").get<int>();
    w.lambda = j.at("lambda").get<int>();
    w.basis_order = j.at("basis_order").get<std::vector<std::size_t>>();
    for (const auto& x : j.at("max_witnesses")) w.max_witnesses.push_back({x.at("name").get<std::string>(), poly_from_json(x.at("poly"))});
    for (const auto& x : j.at("min_witnesses")) w.min_witnesses.push_back({x.at("name").get<std::string>(), poly_from_json(x.at("poly"))});
    return w;
}

/// Runs the battery in a fixed order. A failed necessary check makes the
/// verdict "obstructed", a passed sufficient check "split-certified";
/// otherwise, or when a precondition fails, "inconclusive".
inline SplitReport split_report(const HermitianForm& a, const SplitParams& params = {}) {
    SplitReport report;
    auto& checks = report.checks;
    const std::size_t n = a.rank();
    const int exponent = a.max_exponent();
    const int spread = params.spread.value_or(exponent + 2);
    const int window = params.window.value_or(2 * exponent + 2);
    const int m_max = std::max(1, params.m_max);
    auto new_check = [&](const std::string& name, CheckKind kind) -> SplitCheck& {
        checks.push_back({name, Verdict::inconclusive, Json{{"kind", to_string(kind)}}});
        return checks.back();
    };
    auto finish = [&] {
        report.verdict = detail::aggregate(checks);
        return report;
    };

    std::vector<IntegralLattice> reductions;
    {
        auto& c = new_check("definite_reductions", CheckKind::precondition);
        Json per_m = Json::array();
        bool ok = true;
        for (int m = 1; m <= m_max; ++m) {
            reductions.push_back(reduce_mod_m(a, m));
            const bool pd = is_positive_definite(reductions.back());
            ok = ok && pd;
            per_m.push_back(Json{{"m", m}, {"positive_definite", pd}});
        }
        c.payload["per_m"] = per_m;
        c.verdict = ok ? Verdict::pass : Verdict::fail;
        if (!ok) return finish();
    }
    {
        auto& c = new_check("unimodular", CheckKind::precondition);
        const LaurentPoly det = determinant(a);
        c.payload["det"] = poly_to_json(det);
        c.verdict = det.is_unit() ? Verdict::pass : Verdict::fail;
        if (!det.is_unit()) return finish();
    }

    const IntegralLattice& base = reductions.front();
    const bool base_standard = is_standard(base);
    {
        // A split form has every m-fold reduction isometric to m copies of the
        // 1-fold one; compare invariant fingerprints.
        auto& c = new_check("standard_reductions", CheckKind::necessary);
        const std::int64_t theta_bound = 4;
        const auto base_theta = theta_prefix(base, theta_bound);
        const auto base_ranks = detail::component_ranks(decompose(base));
        const BigInt base_det = determinant(base);
        Json per_m = Json::array();
        bool all_match = true;
        for (int m = 1; m <= m_max; ++m) {
            const auto& lat = reductions[static_cast<std::size_t>(m - 1)];
            Json rec{{"m", m}};
            const BigInt det = determinant(lat);
            BigInt expected_det = 1;
            for (int k = 0; k < m; ++k) expected_det *= base_det;
            bool match = det == expected_det && parity(lat) == parity(base);
            rec["det"] = big_to_json(det);
            rec["parity"] = to_string(parity(lat));
            rec["standard"] = is_standard(lat);
            if (match) {
                const auto theta = theta_prefix(lat, theta_bound);
                rec["theta"] = theta;
                match = theta == detail::theta_of_sum(base_theta, m);
            }
            if (match) {
                auto ranks = detail::component_ranks(decompose(lat));
                std::vector<std::size_t> expected;
                for (int k = 0; k < m; ++k) expected.insert(expected.end(), base_ranks.begin(), base_ranks.end());
                std::sort(expected.begin(), expected.end());
                rec["component_ranks"] = ranks;
                match = ranks == expected;
            }
            rec["matches_base_sum"] = match;
            all_match = all_match && match;
            per_m.push_back(std::move(rec));
        }
        c.payload["base_standard"] = base_standard;
        c.payload["per_m"] = per_m;
        c.verdict = all_match ? Verdict::pass : Verdict::fail;
    }
    {
        auto& c = new_check("integral_matrix", CheckKind::sufficient);
        bool integral = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (auto b = a(i, j).degree_bounds(); b && (b->min_degree != 0 || b->max_degree != 0)) integral = false;
        c.payload["integral"] = integral;
        c.verdict = integral ? Verdict::pass : Verdict::inconclusive;
    }
    {
        auto& c = new_check("lambda_small_generators", CheckKind::sufficient);
        Json sq = Json::array();
        bool small = true;
        for (std::size_t i = 0; i < n; ++i) {
            const BigInt s = a(i, i).constant_term();
            sq.push_back(big_to_json(s));
            small = small && s <= 2;
        }
        c.payload["basis_square_lengths"] = sq;
        c.verdict = small ? Verdict::pass : Verdict::inconclusive;
    }
    {
        auto& c = new_check("small_generators", CheckKind::sufficient);
        std::optional<WindingReport> wind;
        if (parity(base) == Parity::odd) {
            try {
                wind = winding_bound_sweep(a, params.sweep_max_rank);
            } catch (const NegativeConstant&) {
            }
        }
        Json per_m = Json::array();
        bool certified = false;
        for (int m = 1; m <= m_max; ++m) {
            const auto r = small_generator_check(a, m);
            per_m.push_back(Json{{"m", m}, {"pass", r.pass}, {"vectors", r.vector_count}, {"span_rank", r.span_rank},
                                 {"span_index", big_to_json(r.span_index)}});
            if (r.pass && wind && m >= wind->lambda) certified = true;
        }
        c.payload["per_m"] = per_m;
        if (wind) {
            c.payload["winding"] = winding_to_json(*wind);
            c.payload["winding_reached"] = m_max >= wind->lambda;
        } else {
            c.payload["winding"] = nullptr;
            c.payload["winding_reached"] = false;
        }
        c.verdict = certified ? Verdict::pass : Verdict::inconclusive;
    }
    {
        auto& c = new_check("factor", CheckKind::sufficient);
        c.payload["spread_bound"] = spread;
        c.payload["base_standard"] = base_standard;
        if (base_standard) {
            const auto f = factor_search(a, spread);
            if (f.certificate) {
                c.payload["certificate"] = detail::poly_matrix_to_json(*f.certificate);
                c.verdict = Verdict::pass;
            } else {
                c.payload["certificate"] = nullptr;
            }
        }
    }
    {
        // Square lengths of a split form are Hermitian sums of squares; bounded search only.
        auto& c = new_check("hsos_diagonals", CheckKind::necessary);
        Json per_i = Json::array();
        bool all_found = true;
        for (std::size_t i = 0; i < n; ++i) {
            const auto h = hsos(a(i, i), spread);
            Json rec{{"index", i + 1}, {"found", h.certificate.has_value()}};
            if (h.certificate) {
                Json parts = Json::array();
                for (const auto& p : *h.certificate) parts.push_back(poly_to_json(p));
                rec["certificate"] = parts;
            }
            all_found = all_found && h.certificate.has_value();
            per_i.push_back(std::move(rec));
        }
        c.payload["spread_bound"] = spread;
        c.payload["per_basis_vector"] = per_i;
        c.verdict = all_found ? Verdict::pass : Verdict::inconclusive;
    }
    {
        auto& c = new_check("unit_elements", CheckKind::necessary);
        const auto units = unit_element_search(a, window);
        c.payload["window"] = window;
        c.payload["classes"] = units.size();
        c.payload["required"] = n - 1;
        c.verdict = units.size() + 1 >= n ? Verdict::pass : Verdict::inconclusive;
    }
    {
        // Split forms have standard reductions, whose minimal vectors are units
        // and lift to nonzero vectors; so a minimal image with a shorter lift is
        // an obstruction. A basis vector minimal in the window lattice is taken
        // as minimal in the infinite cover (bounded evidence, recorded).
        auto& c = new_check("minimal_stability", CheckKind::necessary);
        const IntegralLattice win = window_gram(a, window);
        std::vector<int> ms;
        for (int m = 1; m <= std::max(1, params.stability_m_max); ++m) ms.push_back(m);
        Json per_i = Json::array();
        bool failed = false;
        for (std::size_t i = 0; i < n; ++i) {
            const LambdaVector e = unit_vector(n, i);
            const bool window_minimal = is_minimal(win, *window_vector(e, window));
            Json recs = Json::array();
            for (const auto& r : minimal_stability_check(a, e, ms)) {
                const bool obstruction = !r.inequality_holds && (r.is_minimal || window_minimal);
                failed = failed || obstruction;
                recs.push_back(Json{{"m", r.m},
                                    {"is_minimal", r.is_minimal},
                                    {"reduced_norm", r.reduced_norm},
                                    {"min_lift_norm", r.min_lift_norm},
                                    {"inequality_holds", r.inequality_holds},
                                    {"obstruction", obstruction}});
            }
            per_i.push_back(Json{{"index", i + 1}, {"window_minimal", window_minimal}, {"records", recs}});
        }
        c.payload["window"] = window;
        c.payload["per_basis_vector"] = per_i;
        c.verdict = failed ? Verdict::fail : Verdict::pass;
    }
    return finish();
}

inline Json report_to_json(const SplitReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"verdict", to_string(c.verdict)}, {"payload", c.payload}});
    return Json{{"verdict", to_string(r.verdict)}, {"checks", std::move(checks)}};
}

inline SplitReport report_from_json(const Json& j) {
    auto verdict = [](const std::string& s) {
        if (s == "pass") return Verdict::pass;
        if (s == "fail") return Verdict::fail;
        if (s == "inconclusive") return Verdict::inconclusive;
        throw ParseError("unknown check verdict '" + s + "'");
    };
    SplitReport r;
    const std::string v = j.at("verdict").get<std::string>();
    if (v == "split-certified")
        r.verdict = OverallVerdict::split_certified;
    else if (v == "obstructed")
        r.verdict = OverallVerdict::obstructed;
    else if (v == "inconclusive")
        r.verdict = OverallVerdict::inconclusive;
    else
        throw ParseError("unknown report verdict '" + v + "'");
    for (const auto& c : j.at("checks"))
        r.checks.push_back({c.at("name").get<std::string>(), verdict(c.at("verdict").get<std::string>()), c.at("payload")});
    return r;
}

/// Text rendering: one line per check plus certificate summaries.
inline std::string render_text(const SplitReport& r) {
    std::string out = "verdict: " + std::string(to_string(r.verdict)) + "\n";
    out += "checks: " + std::to_string(r.checks.size()) + "\n";
    for (const auto& c : r.checks) {
        out += "  [" + std::string(to_string(c.verdict)) + "] " + c.name + " (" + c.payload.value("kind", "") + ")\n";
        if (c.payload.contains("certificate") && !c.payload["certificate"].is_null())
            out += "    certificate: " + c.payload["certificate"].dump() + "\n";
        if (c.payload.contains("winding") && !c.payload["winding"].is_null())
            out += "    winding bound lambda(A) = " + std::to_string(c.payload["winding"]["lambda"].get<int>()) + "\n";
    }
    return out;
}

}  // namespace lamlat
