#include "property_suite.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <future>
#include <random>

#include "json.hpp"

namespace knotoid::cli {

namespace {

std::size_t pick_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, std::max(lo, hi))(rng);
}

std::string describe(const GaussDiagram& d) { return "'" + serialize(d) + "'"; }

// A random diagram with an R3 configuration planted in it; the base has
// `k` chords.
GaussDiagram planted(std::size_t k, std::mt19937_64& rng) {
  GaussDiagram base = random_diagram(k, rng());
  std::uniform_int_distribution<Position> gap(0, base.size());
  std::array<Position, 3> gaps{gap(rng), gap(rng), gap(rng)};
  std::sort(gaps.begin(), gaps.end());
  std::array<R3Strand, 3> order{R3Strand::Top, R3Strand::Middle, R3Strand::Bottom};
  std::shuffle(order.begin(), order.end(), rng);
  return plant_r3(base, gaps, order, std::bernoulli_distribution(0.5)(rng));
}

}  // namespace

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t property, std::uint64_t i) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(property), static_cast<std::uint32_t>(i),
                    static_cast<std::uint32_t>(i >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (std::uint64_t{out[0]} << 32) | out[1];
}

GaussDiagram reference_witness() { return parse_gauss_code("O1- O2* U3 U4 O3+ U1 U2* O4-"); }

GaussDiagram random_nested_diagram(std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  // Random balanced bracket word: each chord's endpoints enclose only whole chords.
  std::vector<EndpointEvent> events;
  std::vector<ChordSign> signs(k);
  std::vector<ChordId> open;
  std::vector<bool> forward(k + 1);
  ChordId next = 1;
  while (events.size() < 2 * k) {
    const bool can_open = next <= k;
    const bool do_open = can_open && (open.empty() || coin(rng));
    if (do_open) {
      forward[next] = coin(rng);
      signs[next - 1] = coin(rng) ? ChordSign::Positive : ChordSign::Negative;
      events.push_back({next, forward[next] ? EventKind::Over : EventKind::Under});
      open.push_back(next++);
    } else {
      const ChordId id = open.back();
      open.pop_back();
      events.push_back({id, forward[id] ? EventKind::Under : EventKind::Over});
    }
  }
  return GaussDiagram(std::move(events), std::move(signs));
}

TrialResult invariance_trial(std::uint64_t seed, std::size_t max_chords, std::size_t max_moves,
                             ReductionPolicy policy) {
  std::mt19937_64 rng(seed);
  GaussDiagram d;
  std::size_t moves_left = pick_size(rng, 1, max_moves);
  std::vector<Move> trace;
  const bool plant = max_chords >= 3 && std::bernoulli_distribution(0.5)(rng);
  if (plant) {
    d = planted(pick_size(rng, 0, max_chords - 3), rng);
  } else {
    d = random_diagram(pick_size(rng, 0, max_chords), rng());
  }
  const GaussDiagram start = d;
  const Invariant h0 = compute_H(d, policy);

  auto check = [&]() -> TrialResult {
    if (compute_H(d, policy) == h0) return std::nullopt;
    std::string moves;
    for (const auto& m : trace) moves += " " + to_json_line(m);
    return "H changed from " + describe(start) + " to " + describe(d) + " via" + moves;
  };

  if (plant) {
    const ChordId k = d.chord_count();
    for (const auto& cfg : detect_r3(d)) {
      if (cfg.top_bottom == k - 2 && cfg.top_middle == k - 1 && cfg.middle_bottom == k) {
        trace.push_back(cfg.move());
        d = r3_apply(d, cfg);
        break;
      }
    }
    --moves_left;
    if (auto failure = check()) return failure;
  }
  for (std::size_t i = 0; i < moves_left; ++i) {
    const WalkResult w = random_walk_traced(d, 1, rng(), all_move_kinds());
    if (w.moves.empty()) break;
    trace.push_back(w.moves.front());
    d = w.diagram;
    if (auto failure = check()) return failure;
  }
  return std::nullopt;
}

TrialResult reverse_trial(std::uint64_t seed, std::size_t max_chords, ReductionPolicy policy) {
  std::mt19937_64 rng(seed);
  const GaussDiagram d = random_diagram(pick_size(rng, 0, max_chords), rng());
  if (compute_H(reverse(d), policy) == subst_t_inverse(compute_H(d, policy))) return std::nullopt;
  return "reverse identity fails on " + describe(d);
}

TrialResult mirror_trial(std::uint64_t seed, std::size_t max_chords, ReductionPolicy policy) {
  std::mt19937_64 rng(seed);
  const GaussDiagram d = random_diagram(pick_size(rng, 0, max_chords), rng());
  if (compute_H(mirror(d), policy) == -subst_z_inverse(subst_t_inverse(compute_H(d, policy)))) {
    return std::nullopt;
  }
  return "mirror identity fails on " + describe(d);
}

TrialResult nesting_trial(std::uint64_t seed, std::size_t max_chords, ReductionPolicy policy) {
  std::mt19937_64 rng(seed);
  const GaussDiagram d = random_nested_diagram(pick_size(rng, 0, max_chords), rng());
  if (!nonzero_height_certificate(d, HOptions{policy, false})) return std::nullopt;
  return "nonzero H on nesting-only " + describe(d);
}

TrialResult order_two_trial(std::uint64_t seed, std::size_t max_chords, ReductionPolicy policy) {
  std::mt19937_64 rng(seed);
  const std::size_t k = pick_size(rng, 2, max_chords);
  const GaussDiagram base = random_diagram(k, rng());
  std::vector<ChordId> ids(k);
  for (ChordId i = 0; i < k; ++i) ids[i] = i + 1;
  std::shuffle(ids.begin(), ids.end(), rng);
  const GaussDiagram d = make_singular(base, std::span<const ChordId>(ids.data(), 2));
  if (singular_H(d, policy).is_zero()) return std::nullopt;
  return "singular_H != 0 on " + describe(d);
}

TrialResult crossing_change_trial(std::uint64_t seed, std::size_t max_chords, ReductionPolicy policy) {
  std::mt19937_64 rng(seed);
  const std::size_t k = pick_size(rng, 1, max_chords);
  const GaussDiagram d = random_diagram(k, rng());
  const ChordId id = std::uniform_int_distribution<ChordId>(1, k)(rng);
  const HOptions options{policy, false};
  const Invariant direct = compute_H(d, options) - compute_H(crossing_change(d, id), options);
  if (crossing_change_delta(d, id, options) == direct) return std::nullopt;
  return "predicted delta differs at chord " + std::to_string(id) + " of " + describe(d);
}

TrialResult gordian_changes_trial(std::uint64_t seed, std::size_t max_chords, ReductionPolicy policy) {
  std::mt19937_64 rng(seed);
  const std::size_t k = pick_size(rng, 1, max_chords);
  const GaussDiagram d = random_diagram(k, rng());
  const std::size_t changes = pick_size(rng, 0, 3);
  GaussDiagram e = d;
  for (std::size_t i = 0; i < changes; ++i) {
    e = crossing_change(e, std::uniform_int_distribution<ChordId>(1, k)(rng));
  }
  const GordianResult r = gordian_lower_bound(d, e, HOptions{policy, false});
  if (!r.ok()) return "not_homotopy_form after crossing changes on " + describe(d) + ": " + r.reason;
  if (static_cast<std::size_t>(r.bound()) <= changes) return std::nullopt;
  return "bound " + std::to_string(r.bound()) + " exceeds " + std::to_string(changes) + " changes on " +
         describe(d);
}

std::vector<PropertyResult> run_property_suite(const SuiteOptions& options) {
  using Trial = std::function<TrialResult(std::uint64_t, ReductionPolicy)>;
  struct Property {
    std::string name;
    Trial trial;
    bool literal_fatal;
  };
  const std::size_t k = options.max_chords;
  const std::vector<Property> properties{
      {"reidemeister_invariance", [k](auto s, auto p) { return invariance_trial(s, k, 10, p); }, false},
      {"reverse_identity", [k](auto s, auto p) { return reverse_trial(s, k, p); }, true},
      {"mirror_identity", [k](auto s, auto p) { return mirror_trial(s, k, p); }, true},
      {"nesting_zero_height", [k](auto s, auto p) { return nesting_trial(s, k, p); }, true},
      {"order_one_vanishing", [k](auto s, auto p) { return order_two_trial(s, k, p); }, true},
      {"crossing_change_delta", [k](auto s, auto p) { return crossing_change_trial(s, k, p); }, false},
      {"gordian_bound_consistency", [k](auto s, auto p) { return gordian_changes_trial(s, k, p); }, false},
  };

  std::vector<std::future<PropertyResult>> jobs;
  std::uint64_t index = 0;
  for (const auto& prop : properties) {
    for (const ReductionPolicy policy : {ReductionPolicy::Quotient, ReductionPolicy::Literal}) {
      jobs.push_back(std::async(std::launch::async, [&options, prop, policy, index] {
        PropertyResult r{prop.name, policy, options.samples, 0,
                         policy == ReductionPolicy::Quotient || prop.literal_fatal, std::nullopt};
        for (std::size_t i = 0; i < options.samples; ++i) {
          if (auto failure = prop.trial(sample_seed(options.seed, index, i), policy)) {
            if (r.failures++ == 0) r.first_failure = std::move(failure);
          }
        }
        return r;
      }));
      ++index;
    }
  }
  std::vector<PropertyResult> out;
  for (auto& job : jobs) out.push_back(job.get());

  for (const ReductionPolicy policy : {ReductionPolicy::Quotient, ReductionPolicy::Literal}) {
    PropertyResult w{"order_one_witness", policy, 1, 0, true, std::nullopt};
    if (singular_H(reference_witness(), policy).is_zero()) {
      w.failures = 1;
      w.first_failure = "reference witness has singular_H == 0";
    }
    out.push_back(std::move(w));
  }
  return out;
}

std::string to_json_line(const PropertyResult& r) {
  nlohmann::ordered_json j;
  j["property"] = r.name;
  j["policy"] = std::string(to_string(r.policy));
  j["samples"] = r.samples;
  j["failures"] = r.failures;
  j["status"] = r.passed() ? "pass" : r.fatal ? "fail" : "reported";
  if (r.first_failure) j["example"] = *r.first_failure;
  return j.dump();
}

}  // namespace knotoid::cli
