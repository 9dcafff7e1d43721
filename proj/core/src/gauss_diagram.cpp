#include "knotoid/gauss_diagram.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <random>

#include "knotoid/error.hpp"

namespace knotoid {

GaussDiagram::GaussDiagram(std::vector<EndpointEvent> events, std::vector<ChordSign> signs)
    : events_(std::move(events)), signs_(std::move(signs)) {
  const std::size_t k = signs_.size();
  if (events_.size() != 2 * k) {
    throw InvalidDiagram("expected " + std::to_string(2 * k) + " endpoint events for " +
                         std::to_string(k) + " chords, got " + std::to_string(events_.size()));
  }
  over_pos_.assign(k, 0);
  under_pos_.assign(k, 0);
  for (std::size_t i = 0; i < events_.size(); ++i) {
    const auto& ev = events_[i];
    if (ev.chord < 1 || ev.chord > k) {
      throw InvalidDiagram("chord id " + std::to_string(ev.chord) + " outside 1.." +
                           std::to_string(k));
    }
    auto& slot = ev.kind == EventKind::Over ? over_pos_[ev.chord - 1] : under_pos_[ev.chord - 1];
    if (slot != 0) {
      throw InvalidDiagram("chord " + std::to_string(ev.chord) + " has two " +
                           (ev.kind == EventKind::Over ? "Over" : "Under") + " endpoints");
    }
    slot = i + 1;
  }
  // Every slot is filled: 2k events, no duplicates, ids in range.
}

const EndpointEvent& GaussDiagram::at(Position p) const {
  if (p < 1 || p > events_.size()) {
    throw std::out_of_range("position " + std::to_string(p) + " outside 1.." +
                            std::to_string(events_.size()));
  }
  return events_[p - 1];
}

ChordView GaussDiagram::chord(ChordId id) const {
  if (!has_chord(id)) throw UnknownChord(id);
  return ChordView{id, over_pos_[id - 1], under_pos_[id - 1], signs_[id - 1]};
}

std::vector<ChordView> GaussDiagram::chords() const {
  std::vector<ChordView> out;
  out.reserve(chord_count());
  for (ChordId id = 1; id <= chord_count(); ++id) out.push_back(chord(id));
  return out;
}

std::size_t GaussDiagram::singular_count() const noexcept {
  return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), ChordSign::Singular));
}

std::vector<ChordId> GaussDiagram::singular_chords() const {
  std::vector<ChordId> out;
  for (ChordId id = 1; id <= signs_.size(); ++id) {
    if (signs_[id - 1] == ChordSign::Singular) out.push_back(id);
  }
  return out;
}

bool GaussDiagram::crosses(ChordId c, ChordId e) const {
  const ChordView cv = chord(c);
  const ChordView ev = chord(e);
  return cv.contains(ev.over_pos) != cv.contains(ev.under_pos);
}

namespace {

struct Token {
  EventKind kind;
  ChordId id;
  std::optional<char> tag;
};

Token parse_token(std::string_view tok, std::size_t index) {
  auto fail = [&](const std::string& why) -> ParseError {
    return ParseError("malformed token '" + std::string(tok) + "': " + why, 0, index);
  };
  if (tok.size() < 2) throw fail("too short");
  Token t{};
  switch (tok.front()) {
    case 'O': t.kind = EventKind::Over; break;
    case 'U': t.kind = EventKind::Under; break;
    default: throw fail("expected O or U");
  }
  std::string_view rest = tok.substr(1);
  const char last = rest.back();
  if (last == '+' || last == '-' || last == '*') {
    t.tag = last;
    rest.remove_suffix(1);
  }
  if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw fail("expected a chord number");
  }
  const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), t.id);
  if (ec != std::errc() || ptr != rest.data() + rest.size()) throw fail("chord number out of range");
  if (t.id == 0) throw fail("chord numbers start at 1");
  return t;
}

ChordSign sign_of_tag(char tag) {
  switch (tag) {
    case '+': return ChordSign::Positive;
    case '-': return ChordSign::Negative;
    default: return ChordSign::Singular;
  }
}

char tag_of_sign(ChordSign s) {
  switch (s) {
    case ChordSign::Positive: return '+';
    case ChordSign::Negative: return '-';
    case ChordSign::Singular: return '*';
  }
  return '?';
}

}  // namespace

GaussDiagram parse_gauss_code(std::string_view text) {
  std::vector<Token> tokens;
  {
    std::size_t i = 0;
    std::size_t index = 0;
    auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r'; };
    while (i < text.size()) {
      while (i < text.size() && is_space(text[i])) ++i;
      if (i >= text.size()) break;
      std::size_t j = i;
      while (j < text.size() && !is_space(text[j])) ++j;
      tokens.push_back(parse_token(text.substr(i, j - i), ++index));
      i = j;
    }
  }
  ChordId max_id = 0;
  for (const auto& t : tokens) max_id = std::max(max_id, t.id);
  if (max_id > tokens.size()) {
    throw ParseError("chord " + std::to_string(max_id) + " exceeds the number of chords; ids must be 1..k");
  }

  std::vector<std::size_t> over_tok(max_id + 1, 0), under_tok(max_id + 1, 0);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto& t = tokens[i];
    auto& slot = t.kind == EventKind::Over ? over_tok[t.id] : under_tok[t.id];
    if (slot != 0) {
      throw ParseError(std::string("duplicate ") + (t.kind == EventKind::Over ? "O" : "U") +
                           " token for chord " + std::to_string(t.id),
                       0, i + 1);
    }
    slot = i + 1;
  }

  std::vector<ChordSign> signs(max_id, ChordSign::Positive);
  for (ChordId id = 1; id <= max_id; ++id) {
    if (over_tok[id] == 0 && under_tok[id] == 0) {
      throw ParseError("chord ids must be 1..k; chord " + std::to_string(id) + " is missing");
    }
    if (over_tok[id] == 0 || under_tok[id] == 0) {
      const std::size_t where = over_tok[id] != 0 ? over_tok[id] : under_tok[id];
      throw ParseError("chord " + std::to_string(id) + " is missing its " +
                           (over_tok[id] == 0 ? "O" : "U") + " partner",
                       0, where);
    }
    const Token& o = tokens[over_tok[id] - 1];
    const Token& u = tokens[under_tok[id] - 1];
    if (!o.tag) {
      throw ParseError("O token of chord " + std::to_string(id) + " needs a sign (+, - or *)", 0,
                       over_tok[id]);
    }
    const bool o_singular = *o.tag == '*';
    if (o_singular && u.tag != '*') {
      throw ParseError("singular chord " + std::to_string(id) + " needs '*' on its U token", 0,
                       under_tok[id]);
    }
    if (u.tag && *u.tag != *o.tag) {
      throw ParseError("sign mismatch between O and U tokens of chord " + std::to_string(id), 0,
                       under_tok[id]);
    }
    signs[id - 1] = sign_of_tag(*o.tag);
  }

  std::vector<EndpointEvent> events;
  events.reserve(tokens.size());
  for (const auto& t : tokens) events.push_back({t.id, t.kind});
  return GaussDiagram(std::move(events), std::move(signs));
}

std::string serialize(const GaussDiagram& d) {
  std::string out;
  for (const auto& ev : d.events()) {
    if (!out.empty()) out += ' ';
    out += ev.kind == EventKind::Over ? 'O' : 'U';
    out += std::to_string(ev.chord);
    out += tag_of_sign(d.signs()[ev.chord - 1]);
  }
  return out;
}

GaussDiagram reverse(const GaussDiagram& d) {
  std::vector<EndpointEvent> events(d.events().rbegin(), d.events().rend());
  return GaussDiagram(std::move(events), {d.signs().begin(), d.signs().end()});
}

GaussDiagram mirror(const GaussDiagram& d) {
  std::vector<EndpointEvent> events(d.events().begin(), d.events().end());
  for (auto& ev : events) ev.kind = opposite(ev.kind);
  std::vector<ChordSign> signs(d.signs().begin(), d.signs().end());
  for (auto& s : signs) s = negate(s);
  return GaussDiagram(std::move(events), std::move(signs));
}

GaussDiagram crossing_change(const GaussDiagram& d, ChordId id) {
  const ChordView c = d.chord(id);
  if (c.singular()) {
    throw SingularChordError("crossing change on singular chord " + std::to_string(id));
  }
  std::vector<EndpointEvent> events(d.events().begin(), d.events().end());
  for (auto& ev : events) {
    if (ev.chord == id) ev.kind = opposite(ev.kind);
  }
  std::vector<ChordSign> signs(d.signs().begin(), d.signs().end());
  signs[id - 1] = negate(signs[id - 1]);
  return GaussDiagram(std::move(events), std::move(signs));
}

GaussDiagram random_diagram(std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Position> slots(2 * k);
  for (std::size_t i = 0; i < slots.size(); ++i) slots[i] = i;
  std::shuffle(slots.begin(), slots.end(), rng);

  std::vector<EndpointEvent> events(2 * k);
  std::vector<ChordSign> signs(k);
  std::bernoulli_distribution coin(0.5);
  for (ChordId id = 1; id <= k; ++id) {
    const Position a = slots[2 * (id - 1)];
    const Position b = slots[2 * (id - 1) + 1];
    const bool forward = coin(rng);
    events[a] = {id, forward ? EventKind::Over : EventKind::Under};
    events[b] = {id, forward ? EventKind::Under : EventKind::Over};
    signs[id - 1] = coin(rng) ? ChordSign::Positive : ChordSign::Negative;
  }
  return GaussDiagram(std::move(events), std::move(signs));
}

}  // namespace knotoid
