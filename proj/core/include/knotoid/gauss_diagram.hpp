#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace knotoid {

/// Chord identifiers are dense: a diagram with k chords uses exactly 1..k.
using ChordId = std::size_t;

/// 1-based rank of an endpoint along the arc from tail to head.
using Position = std::size_t;

enum class EventKind : std::uint8_t { Over, Under };

enum class ChordSign : std::int8_t { Negative = -1, Singular = 0, Positive = 1 };

constexpr int sign_value(ChordSign s) noexcept { return static_cast<int>(s); }

constexpr ChordSign negate(ChordSign s) noexcept {
  return static_cast<ChordSign>(-static_cast<int>(s));
}

constexpr EventKind opposite(EventKind k) noexcept {
  return k == EventKind::Over ? EventKind::Under : EventKind::Over;
}

/// One chord endpoint on the arc. The chord runs from its Over endpoint to
/// its Under endpoint.
struct EndpointEvent {
  ChordId chord = 0;
  EventKind kind = EventKind::Over;

  friend bool operator==(const EndpointEvent&, const EndpointEvent&) = default;
};

struct ChordView {
  ChordId id = 0;
  Position over_pos = 0;
  Position under_pos = 0;
  ChordSign sign = ChordSign::Positive;

  bool singular() const noexcept { return sign == ChordSign::Singular; }
  /// Open interval between the two endpoints.
  Position low() const noexcept { return over_pos < under_pos ? over_pos : under_pos; }
  Position high() const noexcept { return over_pos < under_pos ? under_pos : over_pos; }
  bool contains(Position p) const noexcept { return low() < p && p < high(); }

  friend bool operator==(const ChordView&, const ChordView&) = default;
};

/// Gauss diagram of a (possibly virtual, possibly singular) knotoid diagram:
/// an ordered list of 2k endpoint events along the oriented arc together with
/// one sign per chord. Immutable once constructed.
class GaussDiagram {
 public:
  /// The empty diagram (trivial knotoid).
  GaussDiagram() = default;

  /// Validates and builds a diagram. `signs[i]` is the sign of chord i+1.
  /// Throws InvalidDiagram when an invariant fails.
  GaussDiagram(std::vector<EndpointEvent> events, std::vector<ChordSign> signs);

  std::size_t chord_count() const noexcept { return signs_.size(); }
  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }

  std::span<const EndpointEvent> events() const noexcept { return events_; }
  std::span<const ChordSign> signs() const noexcept { return signs_; }

  /// Event at 1-based position `p`.
  const EndpointEvent& at(Position p) const;

  bool has_chord(ChordId id) const noexcept { return id >= 1 && id <= signs_.size(); }
  /// Throws UnknownChord.
  ChordView chord(ChordId id) const;
  std::vector<ChordView> chords() const;

  std::size_t singular_count() const noexcept;
  std::vector<ChordId> singular_chords() const;

  /// True when e has exactly one endpoint strictly inside c's span.
  bool crosses(ChordId c, ChordId e) const;

  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

 private:
  std::vector<EndpointEvent> events_;
  std::vector<ChordSign> signs_;
  std::vector<Position> over_pos_;
  std::vector<Position> under_pos_;
};

/// Parses whitespace-separated tokens `(O|U)<id><tag>`. The tag is mandatory
/// on Over tokens (`+`, `-` or `*`), optional on Under tokens for signed
/// chords and mandatory (`*`) on both tokens of a singular chord.
/// Throws ParseError.
GaussDiagram parse_gauss_code(std::string_view text);

/// Canonical text with the tag repeated on both tokens. Round-trips through
/// parse_gauss_code.
std::string serialize(const GaussDiagram& d);

/// The inverse knotoid: event order reversed, chords keep sign and direction.
GaussDiagram reverse(const GaussDiagram& d);

/// The mirror image: every chord swaps Over/Under in place and flips sign.
GaussDiagram mirror(const GaussDiagram& d);

/// Switches over and under at one crossing. Throws UnknownChord, or
/// SingularChordError for a singular chord.
GaussDiagram crossing_change(const GaussDiagram& d, ChordId id);

/// Uniform random pairing of 2k positions, uniform signs and directions.
/// Deterministic for a fixed (k, seed).
GaussDiagram random_diagram(std::size_t k, std::uint64_t seed);

}  // namespace knotoid
