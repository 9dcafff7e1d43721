#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "knotoid/gauss_diagram.hpp"
#include "knotoid/invariant.hpp"

namespace knotoid {

/// One crossing-change term a * (t^P + t^Q - 2) * y^n with
/// Q = reduce(-P(z^-1), m).
struct GordianPair {
  std::int64_t n = 0;
  std::int64_t modulus = 0;
  ZPoly exponent;
  std::int64_t a = 0;

  friend bool operator==(const GordianPair&, const GordianPair&) = default;
};

struct GordianDecomposition {
  ReductionPolicy policy = ReductionPolicy::Quotient;
  std::vector<GordianPair> pairs;
  /// n -> sum of |a| over the pairs in y^n.
  std::map<std::int64_t, std::int64_t> bound_per_n;
  /// Max over bound_per_n, 0 when empty.
  std::int64_t bound = 0;
};

/// The partner exponent of P: reduce(-P(z^-1), m).
ZPoly partner_exponent(const ZPoly& p, std::int64_t modulus, ReductionPolicy policy);

/// H(d) - H(crossing_change(d, id)) predicted from chord id alone:
/// sum over n of sgn(c) * (t^Ind + t^partner(Ind) - 2) * y^n.
/// Throws UnknownChord or SingularChordError.
Invariant crossing_change_delta(const GaussDiagram& d, ChordId id, const HOptions& options = {});

/// Splits an invariant difference into crossing-change terms. Throws
/// NotHomotopyForm when a term has no partner, partner coefficients differ,
/// a self-partnered coefficient is odd, or the constants do not match.
GordianDecomposition decompose(const Invariant& delta);

/// Sum of the terms of `g`; equals the decomposed difference exactly.
Invariant reconstruct(const GordianDecomposition& g);

struct GordianResult {
  enum class Status : std::uint8_t { Ok, NotHomotopyForm };
  Status status = Status::Ok;
  GordianDecomposition decomposition;
  /// Why decomposition failed; empty when status is Ok.
  std::string reason;

  bool ok() const noexcept { return status == Status::Ok; }
  std::int64_t bound() const noexcept { return decomposition.bound; }
};

/// Lower bound on the Gordian distance from decompose(H(d1) - H(d2)).
/// Throws SingularChordError for singular input.
GordianResult gordian_lower_bound(const GaussDiagram& d1, const GaussDiagram& d2,
                                  const HOptions& options = {});

/// {"bound", "per_n", "pairs", "status"}; bound is null on failure.
std::string render_json(const GordianResult& r);

}  // namespace knotoid
