#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotoid/knotoid.hpp"

namespace knotoid::cli {

/// A diagram whose chords are pairwise nested or disjoint, so every degree
/// is 0. Random directions and signs.
GaussDiagram random_nested_diagram(std::size_t k, std::uint64_t seed);

/// One sample of each property. Each returns a description of the failure,
/// or nullopt when the sample passes. Deterministic in the seed.
using TrialResult = std::optional<std::string>;

/// Random start with at most `max_chords` chords, sometimes with a planted
/// R3 configuration that is moved first, then up to `max_moves` moves in
/// total. H must be unchanged after every move.
TrialResult invariance_trial(std::uint64_t seed, std::size_t max_chords, std::size_t max_moves,
                             ReductionPolicy policy);
/// H(reverse d) == H(d) with t -> t^-1.
TrialResult reverse_trial(std::uint64_t seed, std::size_t max_chords, ReductionPolicy policy);
/// H(mirror d) == -H(d) with t -> t^-1 and z -> z^-1.
TrialResult mirror_trial(std::uint64_t seed, std::size_t max_chords, ReductionPolicy policy);
/// Nesting-only diagrams have H == 0.
TrialResult nesting_trial(std::uint64_t seed, std::size_t max_chords, ReductionPolicy policy);
/// Two singular chords give singular_H == 0.
TrialResult order_two_trial(std::uint64_t seed, std::size_t max_chords, ReductionPolicy policy);
/// crossing_change_delta matches the recomputed difference.
TrialResult crossing_change_trial(std::uint64_t seed, std::size_t max_chords, ReductionPolicy policy);
/// j random crossing changes give a Gordian bound of at most j.
TrialResult gordian_changes_trial(std::uint64_t seed, std::size_t max_chords, ReductionPolicy policy);

struct SuiteOptions {
  std::size_t samples = 200;
  std::size_t max_chords = 8;
  std::uint64_t seed = 1;
};

struct PropertyResult {
  std::string name;
  ReductionPolicy policy = ReductionPolicy::Quotient;
  std::size_t samples = 0;
  std::size_t failures = 0;
  /// A failure here fails the suite; otherwise it is only reported.
  bool fatal = true;
  std::optional<std::string> first_failure;

  bool passed() const noexcept { return failures == 0; }
};

std::vector<PropertyResult> run_property_suite(const SuiteOptions& options);
/// One JSON object per line.
std::string to_json_line(const PropertyResult& r);

/// Per-sample seed for property `property` and sample `i`.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t property, std::uint64_t i);

/// The 1-singular diagram of the reference fixtures whose singular_H is nonzero.
GaussDiagram reference_witness();

}  // namespace knotoid::cli
