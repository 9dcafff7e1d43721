#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "knotoid/gauss_diagram.hpp"
#include "knotoid/invariant.hpp"

namespace knotoid {

/// The two resolutions of singular chord `id`. The first keeps the chord's
/// direction with sign +; the second is its crossing change. Throws
/// SingularChordError when the chord is not singular, UnknownChord when absent.
std::pair<GaussDiagram, GaussDiagram> resolutions(const GaussDiagram& d, ChordId id);

/// Alternating sum of H over all 2^s resolutions of the singular chords,
/// each negative resolution contributing a factor -1. Equals compute_H for s = 0.
Invariant singular_H(const GaussDiagram& d, const HOptions& options);
inline Invariant singular_H(const GaussDiagram& d, ReductionPolicy policy) {
  return singular_H(d, HOptions{policy, false});
}

/// `d` with chords `ids` made singular (their direction is kept).
GaussDiagram make_singular(const GaussDiagram& d, std::span<const ChordId> ids);

struct OrderOneReport {
  std::size_t samples = 0;
  /// 2-singular samples with singular_H != 0; zero when the order bound holds.
  std::size_t failures = 0;
  /// First failing sample, if any.
  std::optional<GaussDiagram> counterexample;
  /// A 1-singular diagram with nonzero singular_H.
  std::optional<GaussDiagram> witness;

  bool passed() const noexcept { return failures == 0 && witness.has_value(); }
};

/// Checks singular_H = 0 on `samples` random 2-singular diagrams with 2 to
/// `max_chords` chords and searches for a 1-singular witness, starting from
/// `witness_hint` when given. Deterministic in its arguments.
OrderOneReport verify_order_one(std::size_t samples, std::size_t max_chords, std::uint64_t seed,
                                ReductionPolicy policy,
                                const std::optional<GaussDiagram>& witness_hint = std::nullopt);

}  // namespace knotoid
