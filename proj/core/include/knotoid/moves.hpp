#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "knotoid/gauss_diagram.hpp"

namespace knotoid {

// Reidemeister moves on Gauss diagrams, restricted to the oriented generating
// set {R1a, R1b, R2a, R3a}. A gap g in 0..2k names the slot between the
// events at positions g and g+1 (g = 0 is before the first event).

/// Forward: the Over endpoint comes first along the arc.
enum class R1Direction : std::uint8_t { Forward, Backward };
enum class R2Signs : std::uint8_t { FirstPositive, FirstNegative };

/// Inserts one isolated chord at `gap`. `id` is the new chord's id in the
/// result (0 means k+1); existing ids at or above it shift up by one.
struct R1Insert {
  Position gap = 0;
  R1Direction direction = R1Direction::Forward;
  ChordSign sign = ChordSign::Positive;
  ChordId id = 0;
  friend bool operator==(const R1Insert&, const R1Insert&) = default;
};

struct R1Delete {
  ChordId id = 0;
  friend bool operator==(const R1Delete&, const R1Delete&) = default;
};

/// Inserts two interleaved chords of opposite sign, both running from the
/// pair of Over endpoints at `over_gap` to the pair of Under endpoints at
/// `under_gap`. With equal gaps, `over_first` decides which pair comes first.
/// `first_id`/`second_id` are the result ids of the chords starting first and
/// second along the arc (0 means k+1 and k+2).
struct R2Insert {
  Position over_gap = 0;
  Position under_gap = 0;
  R2Signs signs = R2Signs::FirstPositive;
  bool over_first = true;
  ChordId first_id = 0;
  ChordId second_id = 0;
  friend bool operator==(const R2Insert&, const R2Insert&) = default;
};

struct R2Delete {
  ChordId first = 0;
  ChordId second = 0;
  friend bool operator==(const R2Delete&, const R2Delete&) = default;
};

/// R3 on the three chords of a detected configuration.
struct R3Move {
  ChordId top_bottom = 0;
  ChordId top_middle = 0;
  ChordId middle_bottom = 0;
  friend bool operator==(const R3Move&, const R3Move&) = default;
};

using Move = std::variant<R1Insert, R1Delete, R2Insert, R2Delete, R3Move>;

enum class MoveKind : std::uint8_t { R1Insert, R1Delete, R2Insert, R2Delete, R3 };

MoveKind kind_of(const Move& m) noexcept;
std::string_view to_string(MoveKind k) noexcept;

GaussDiagram r1_insert(const GaussDiagram& d, Position gap, R1Direction direction, ChordSign sign);
/// Throws MoveError unless the chord's endpoints are adjacent.
GaussDiagram r1_delete(const GaussDiagram& d, ChordId id);

GaussDiagram r2_insert(const GaussDiagram& d, Position over_gap, Position under_gap,
                       R2Signs signs);
/// Throws MoveError unless the two chords form the R2 pattern: adjacent Over
/// endpoints, adjacent Under endpoints, interleaved, opposite signs.
GaussDiagram r2_delete(const GaussDiagram& d, ChordId first, ChordId second);

enum class R3Variant : std::uint8_t {
  /// Strand segments met along the arc in the cyclic order top, middle, bottom.
  Omega3a,
  /// The opposite cyclic order.
  Omega3aPrime,
};

/// Three strands of the local picture: top passes over middle and bottom,
/// middle passes over bottom. Each strand segment holds two adjacent endpoints.
/// The chord from top to bottom is negative, the other two are positive.
/// Degrees always satisfy d(top_bottom) = d(top_middle) + d(middle_bottom).
struct R3Config {
  ChordId top_bottom = 0;
  ChordId top_middle = 0;
  ChordId middle_bottom = 0;
  /// First position of each adjacent endpoint pair.
  Position top_pos = 0;
  Position middle_pos = 0;
  Position bottom_pos = 0;
  R3Variant variant = R3Variant::Omega3a;

  R3Move move() const { return {top_bottom, top_middle, middle_bottom}; }
  friend bool operator==(const R3Config&, const R3Config&) = default;
};

/// Every R3 configuration in d.
std::vector<R3Config> detect_r3(const GaussDiagram& d);
/// Swaps the endpoints inside each of the three pairs. Throws MoveError when
/// `config` is not a configuration of d.
GaussDiagram r3_apply(const GaussDiagram& d, const R3Config& config);

enum class R3Strand : std::uint8_t { Top, Middle, Bottom };

/// Inserts a fresh R3 configuration: the three strand segments go into the
/// given gaps (non-decreasing), in `order` along the arc. `swapped` selects
/// the form on the other side of the move. New chords get ids k+1 (top to
/// bottom), k+2 (top to middle), k+3 (middle to bottom).
GaussDiagram plant_r3(const GaussDiagram& d, std::array<Position, 3> gaps,
                      std::array<R3Strand, 3> order, bool swapped);

/// Applies any move. Throws MoveError when it does not apply.
GaussDiagram apply_move(const GaussDiagram& d, const Move& m);
/// The move that undoes `m` on apply_move(d, m), restoring d exactly.
Move inverse_move(const GaussDiagram& d, const Move& m);

/// Move-trace line: {"move": "...", "params": {...}}.
std::string to_json_line(const Move& m);
/// Throws ParseError.
Move move_from_json_line(std::string_view line);

struct WalkResult {
  GaussDiagram diagram;
  std::vector<Move> moves;
  /// inverses[i] undoes moves[i]; apply them in reverse order to return.
  std::vector<Move> inverses;
};

/// Applies `steps` moves, each drawn by picking a uniformly random allowed
/// kind that has an applicable instance, then a uniform instance of it.
/// Deterministic in (d, steps, seed, allowed).
WalkResult random_walk_traced(const GaussDiagram& d, std::size_t steps, std::uint64_t seed,
                              const std::set<MoveKind>& allowed);
GaussDiagram random_walk(const GaussDiagram& d, std::size_t steps, std::uint64_t seed,
                         const std::set<MoveKind>& allowed);

/// All five move kinds.
std::set<MoveKind> all_move_kinds();

}  // namespace knotoid
