#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

namespace hs {

/// 4x4 integer matrix, row-major. Integer routines are exact: every
/// add/multiply is overflow-checked and throws std::overflow_error instead
/// of wrapping.
using IMat4 = std::array<std::int64_t, 16>;

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

inline std::int64_t& iat(IMat4& m, int i, int j) { return m[static_cast<size_t>(4 * i + j)]; }
inline std::int64_t iat(const IMat4& m, int i, int j) { return m[static_cast<size_t>(4 * i + j)]; }

IMat4 izero4();
IMat4 iident4();
IMat4 imul4(const IMat4& a, const IMat4& b);
bool is_antisymmetric(const IMat4& m);

/// Exact determinant by cofactor expansion.
std::int64_t det4_int(const IMat4& m);

/// Pfaffian of a 4x4 antisymmetric integer matrix:
///   Pf(e) = e01*e23 - e02*e13 + e03*e12,
/// the canonical integer square root of det(e) (Pf^2 = det).
/// Throws std::domain_error on non-antisymmetric input.
std::int64_t pfaffian4(const IMat4& e);

struct SnfResult {
    std::array<std::int64_t, 4> divisors{}; // d0 | d1 | d2 | d3, all >= 0
    IMat4 left{};                           // unimodular
    IMat4 right{};                          // unimodular; left * m * right = diag(divisors)
};

/// Smith normal form over the integers by unimodular row/column reduction.
SnfResult smith_normal_form4(const IMat4& m);

} // namespace hs
