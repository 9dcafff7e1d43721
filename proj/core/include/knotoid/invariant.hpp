#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "knotoid/gauss_diagram.hpp"
#include "knotoid/zpoly.hpp"

namespace knotoid {

/// Identity of one exponential term t^P inside the y^n stratum. `modulus` is
/// |d(c)| of the chord that produced P, or 0 when P is constant (constant
/// exponents are plain monomials t^c and merge across chords).
struct TermKey {
  std::int64_t n = 0;
  std::int64_t modulus = 0;
  ZPoly exponent;

  friend bool operator==(const TermKey&, const TermKey&) = default;
  friend auto operator<=>(const TermKey&, const TermKey&) = default;
};

/// Canonical value of H(t, y, z): a signed multiset of t^P y^n terms plus a
/// constant per y^n. Each chord term sgn(c)(t^P - 1)y^n contributes sgn(c)
/// to the t^P entry and -sgn(c) to the constant of y^n.
class Invariant {
 public:
  explicit Invariant(ReductionPolicy policy = ReductionPolicy::Quotient) : policy_(policy) {}

  ReductionPolicy policy() const noexcept { return policy_; }
  const std::map<TermKey, std::int64_t>& terms() const noexcept { return terms_; }
  const std::map<std::int64_t, std::int64_t>& constants() const noexcept { return constants_; }
  bool is_zero() const noexcept { return terms_.empty() && constants_.empty(); }

  /// Adds coeff * t^P * y^n. P is reduced modulo `modulus`; a constant P
  /// drops its modulus, and P = 0 (t^0 = 1) lands in the constant.
  void add_term(std::int64_t n, std::int64_t modulus, const ZPoly& exponent, std::int64_t coeff);
  void add_constant(std::int64_t n, std::int64_t coeff);

  std::int64_t coeff(const TermKey& key) const;
  std::int64_t constant(std::int64_t n) const;

  /// Throws PolicyMismatch.
  friend bool operator==(const Invariant& a, const Invariant& b);
  friend Invariant operator-(const Invariant& a, const Invariant& b);
  friend Invariant operator+(const Invariant& a, const Invariant& b);
  Invariant operator-() const;

 private:
  ReductionPolicy policy_;
  std::map<TermKey, std::int64_t> terms_;
  std::map<std::int64_t, std::int64_t> constants_;
};

inline bool invariant_equal(const Invariant& a, const Invariant& b) { return a == b; }
inline Invariant invariant_sub(const Invariant& a, const Invariant& b) { return a - b; }
inline Invariant invariant_neg(const Invariant& a) { return -a; }

/// t -> t^-1: every exponent P becomes -P.
Invariant subst_t_inverse(const Invariant& a);
/// z -> z^-1 inside every exponent.
Invariant subst_z_inverse(const Invariant& a);

struct HOptions {
  ReductionPolicy policy = ReductionPolicy::Quotient;
  /// Also sum the n = 0 stratum (pairs of crossing degree-0 chords).
  bool include_n0 = false;
};

/// Left/right partition of the chords crossing c.
struct CrossingPartition {
  std::vector<ChordId> right;
  std::vector<ChordId> left;

  friend bool operator==(const CrossingPartition&, const CrossingPartition&) = default;
};

/// e crosses c when exactly one endpoint of e lies strictly inside c's span;
/// it passes from left to right (e in r(c)) exactly when "over(e) inside the
/// span" agrees with "c points backwards along the arc". Throws UnknownChord.
CrossingPartition crossing_partition(const GaussDiagram& d, ChordId c);

/// d(c) = |r+(c)| - |r-(c)| - |l+(c)| + |l-(c)|. Singular chords in r/l
/// contribute nothing.
std::int64_t degree(const GaussDiagram& d, ChordId c);
/// Degrees of every chord, indexed by id - 1. O(k^2).
std::vector<std::int64_t> degrees(const GaussDiagram& d);

/// gcd on absolute values with gcd(0, x) = |x| and gcd(0, 0) = 0.
std::int64_t degree_gcd(std::int64_t a, std::int64_t b) noexcept;

/// Members of r(c) and l(c) whose degree has gcd n with d(c).
CrossingPartition n_partition(const GaussDiagram& d, ChordId c, std::int64_t n);

/// Ind_c^n(z) = sum_{e in r^n} sgn(e) z^phi(d(e)) - sum_{e in l^n} sgn(e) z^phi(-d(e)),
/// exponents reduced modulo |d(c)|.
ZPoly index_function(const GaussDiagram& d, ChordId c, std::int64_t n, ReductionPolicy policy);

/// H(t, y, z) = sum over chords c and strata n of sgn(c)(t^Ind_c^n(z) - 1) y^n.
/// Throws SingularChordError if d has a singular chord.
Invariant compute_H(const GaussDiagram& d, const HOptions& options = {});
inline Invariant compute_H(const GaussDiagram& d, ReductionPolicy policy) {
  return compute_H(d, HOptions{policy, false});
}

/// True when H(d) != 0, which certifies that the knotoid has nonzero height.
/// A false result proves nothing.
bool nonzero_height_certificate(const GaussDiagram& d, const HOptions& options = {});

enum class RenderFormat : std::uint8_t { Text, Latex, Json };

/// Deterministic rendering, grouped by y^n (ascending), then modulus, then
/// exponent polynomial.
std::string render(const Invariant& a, RenderFormat format = RenderFormat::Text);
/// Reads the Json rendering back. Throws ParseError.
Invariant invariant_from_json(std::string_view json);

}  // namespace knotoid
