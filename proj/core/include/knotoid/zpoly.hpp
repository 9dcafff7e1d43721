#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace knotoid {

/// How an exponent k is brought into range modulo m = |d(c)|.
///
/// Quotient keeps the least non-negative residue, so the result depends only
/// on the residue class. Literal keeps the representative of least absolute
/// value and, when there are two (m even, k = m/2 mod m), the one carrying
/// the sign of k. Literal is the convention behind hand-written tables such
/// as `z^-1` for a residue of 1 mod 2.
enum class ReductionPolicy : std::uint8_t { Quotient, Literal };

std::string_view to_string(ReductionPolicy p) noexcept;
/// Accepts "quotient" or "literal"; throws std::invalid_argument otherwise.
ReductionPolicy parse_policy(std::string_view text);

/// Reduces exponent k modulo m under `policy`. m = 0 leaves k unchanged.
std::int64_t reduce_exponent(std::int64_t k, std::int64_t m, ReductionPolicy policy);

/// Exact Laurent polynomial in z with integer coefficients.
///
/// Stored as (exponent, coefficient) pairs sorted by exponent with no zero
/// coefficients, so equality and ordering are structural.
class ZPoly {
 public:
  using Term = std::pair<std::int64_t, std::int64_t>;  // (exponent, coefficient)

  ZPoly() = default;

  /// Sums like terms and drops zeros; input order is irrelevant.
  static ZPoly from_terms(std::vector<Term> terms);
  static ZPoly monomial(std::int64_t coeff, std::int64_t exponent);
  static ZPoly constant(std::int64_t c) { return monomial(c, 0); }

  std::span<const Term> terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// True for nonzero constants and for zero.
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().first == 0);
  }
  std::int64_t constant_value() const noexcept { return terms_.empty() ? 0 : terms_.front().second; }
  /// Coefficient of z^e.
  std::int64_t coeff(std::int64_t e) const noexcept;

  ZPoly operator-() const;
  friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }
  ZPoly scaled(std::int64_t c) const;

  /// z -> z^-1.
  ZPoly subst_z_inverse() const;
  /// Every exponent reduced through reduce_exponent, like terms merged.
  ZPoly reduced(std::int64_t m, ReductionPolicy policy) const;

  /// Terms ascending by exponent: `-z^-1 + 2`, `3*z^2 - z`, `0`.
  std::string to_string() const;

  friend bool operator==(const ZPoly&, const ZPoly&) = default;
  /// Lexicographic over the (exponent, coefficient) list.
  friend auto operator<=>(const ZPoly&, const ZPoly&) = default;

 private:
  std::vector<Term> terms_;
};

inline ZPoly add(const ZPoly& a, const ZPoly& b) { return a + b; }
inline ZPoly neg(const ZPoly& a) { return -a; }
inline ZPoly scale(const ZPoly& a, std::int64_t c) { return a.scaled(c); }
inline ZPoly subst_z_inverse(const ZPoly& a) { return a.subst_z_inverse(); }
inline ZPoly reduce_poly(const ZPoly& a, std::int64_t m, ReductionPolicy policy) {
  return a.reduced(m, policy);
}

}  // namespace knotoid
