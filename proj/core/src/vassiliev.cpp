#include "knotoid/vassiliev.hpp"

#include <algorithm>
#include <array>
#include <random>

#include "knotoid/error.hpp"

namespace knotoid {

namespace {

GaussDiagram with_sign(const GaussDiagram& d, ChordId id, ChordSign sign) {
  std::vector<ChordSign> signs(d.signs().begin(), d.signs().end());
  signs[id - 1] = sign;
  return GaussDiagram({d.events().begin(), d.events().end()}, std::move(signs));
}

}  // namespace

std::pair<GaussDiagram, GaussDiagram> resolutions(const GaussDiagram& d, ChordId id) {
  if (!d.chord(id).singular()) {
    throw SingularChordError("chord " + std::to_string(id) + " is not singular");
  }
  GaussDiagram plus = with_sign(d, id, ChordSign::Positive);
  GaussDiagram minus = crossing_change(plus, id);
  return {std::move(plus), std::move(minus)};
}

Invariant singular_H(const GaussDiagram& d, const HOptions& options) {
  const std::vector<ChordId> singular = d.singular_chords();
  if (singular.empty()) return compute_H(d, options);
  const auto [plus, minus] = resolutions(d, singular.front());
  return singular_H(plus, options) - singular_H(minus, options);
}

GaussDiagram make_singular(const GaussDiagram& d, std::span<const ChordId> ids) {
  std::vector<ChordSign> signs(d.signs().begin(), d.signs().end());
  for (ChordId id : ids) {
    if (!d.has_chord(id)) throw UnknownChord(id);
    signs[id - 1] = ChordSign::Singular;
  }
  return GaussDiagram({d.events().begin(), d.events().end()}, std::move(signs));
}

OrderOneReport verify_order_one(std::size_t samples, std::size_t max_chords, std::uint64_t seed,
                                ReductionPolicy policy, const std::optional<GaussDiagram>& witness_hint) {
  OrderOneReport report;
  report.samples = samples;
  if (witness_hint && witness_hint->singular_count() == 1 && !singular_H(*witness_hint, policy).is_zero()) {
    report.witness = *witness_hint;
  }

  std::mt19937_64 rng(seed);
  const std::size_t hi = std::max<std::size_t>(max_chords, 2);
  std::uniform_int_distribution<std::size_t> size(2, hi);
  for (std::size_t i = 0; i < samples; ++i) {
    const std::size_t k = size(rng);
    const GaussDiagram base = random_diagram(k, rng());
    std::uniform_int_distribution<ChordId> pick(1, k);
    const ChordId a = pick(rng);
    ChordId b = pick(rng);
    while (b == a) b = pick(rng);
    const std::array<ChordId, 2> pair{a, b};
    const GaussDiagram d = make_singular(base, pair);
    if (!singular_H(d, policy).is_zero()) {
      if (report.failures++ == 0) report.counterexample = d;
    }
    if (!report.witness) {
      const GaussDiagram one = make_singular(base, std::span<const ChordId>(pair.data(), 1));
      if (!singular_H(one, policy).is_zero()) report.witness = one;
    }
  }
  return report;
}

}  // namespace knotoid
