/**
 * @file errors.hpp
 * @brief Exception types raised by the library.
 *
 * Every error derives from lamlat::Error so callers (the CLI in particular)
 * can map the whole family onto one exit code.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lamlat {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Entry pair (row, col), 1-based, where a_ij(t) != a_ji(1/t).
struct HermitianViolation : Error {
    std::size_t row, col;
    HermitianViolation(std::size_t i, std::size_t j)
        : Error("HermitianViolation(" + std::to_string(i) + "," + std::to_string(j) + ")"), row(i), col(j) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error("DimensionMismatch: " + what) {}
};

struct NotAUnit : Error {
    std::string det;
    explicit NotAUnit(const std::string& d) : Error("NotAUnit(" + d + ")"), det(d) {}
};

struct NotDefinite : Error {
    NotDefinite() : Error("NotDefinite: lattice is not positive definite") {}
};

struct ZeroVector : Error {
    ZeroVector() : Error("ZeroVector: operation requires a nonzero vector") {}
};

struct GeneratorsInsufficient : Error {
    long long suggested_bound;
    explicit GeneratorsInsufficient(long long b)
        : Error("GeneratorsInsufficient: retry with bound " + std::to_string(b)), suggested_bound(b) {}
};

struct NotSymmetric : Error {
    NotSymmetric() : Error("NotSymmetric: polynomial is not invariant under t -> 1/t") {}
    explicit NotSymmetric(const std::string& what) : Error("NotSymmetric: " + what) {}
};

struct NegativeConstant : Error {
    NegativeConstant() : Error("NegativeConstant: constant term is negative") {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& n) : Error("UnknownName: " + n) {}
};

/// Malformed serialized input.
struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("ParseError: " + what) {}
};

}  // namespace lamlat
