#include "knotoid/moves.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "json.hpp"
#include "knotoid/error.hpp"

namespace knotoid {

namespace {

struct NewEndpoint {
  Position gap;
  ChordId id;
  EventKind kind;
};

// Inserts endpoints of new chords. `added` ids are final ids in the result;
// old ids keep their relative order and fill the remaining ids.
GaussDiagram insert_chords(const GaussDiagram& d, const std::vector<NewEndpoint>& added,
                           const std::map<ChordId, ChordSign>& new_signs) {
  const std::size_t k = d.chord_count();
  const std::size_t total = k + new_signs.size();
  for (const auto& [id, sign] : new_signs) {
    if (id < 1 || id > total) throw MoveError("new chord id " + std::to_string(id) + " out of range");
    if (sign == ChordSign::Singular) throw MoveError("moves insert signed chords only");
  }
  for (const auto& ep : added) {
    if (ep.gap > d.size()) {
      throw MoveError("gap " + std::to_string(ep.gap) + " outside 0.." + std::to_string(d.size()));
    }
  }

  std::vector<ChordId> remap(k + 1, 0);
  {
    ChordId next = 1;
    for (ChordId old = 1; old <= k; ++old) {
      while (new_signs.contains(next)) ++next;
      remap[old] = next++;
    }
  }

  std::vector<ChordSign> signs(total, ChordSign::Positive);
  for (ChordId old = 1; old <= k; ++old) signs[remap[old] - 1] = d.signs()[old - 1];
  for (const auto& [id, sign] : new_signs) signs[id - 1] = sign;

  std::vector<EndpointEvent> events;
  events.reserve(2 * total);
  for (Position g = 0; g <= d.size(); ++g) {
    for (const auto& ep : added) {
      if (ep.gap == g) events.push_back({ep.id, ep.kind});
    }
    if (g < d.size()) {
      const auto& ev = d.events()[g];
      events.push_back({remap[ev.chord], ev.kind});
    }
  }
  return GaussDiagram(std::move(events), std::move(signs));
}

GaussDiagram delete_chords(const GaussDiagram& d, const std::vector<ChordId>& removed) {
  const std::size_t k = d.chord_count();
  std::vector<ChordId> remap(k + 1, 0);
  ChordId next = 1;
  for (ChordId id = 1; id <= k; ++id) {
    if (std::find(removed.begin(), removed.end(), id) == removed.end()) remap[id] = next++;
  }
  std::vector<ChordSign> signs;
  for (ChordId id = 1; id <= k; ++id) {
    if (remap[id] != 0) signs.push_back(d.signs()[id - 1]);
  }
  std::vector<EndpointEvent> events;
  for (const auto& ev : d.events()) {
    if (remap[ev.chord] != 0) events.push_back({remap[ev.chord], ev.kind});
  }
  return GaussDiagram(std::move(events), std::move(signs));
}

bool adjacent(Position a, Position b) { return a + 1 == b || b + 1 == a; }

void require_r1_pattern(const GaussDiagram& d, ChordId id) {
  const ChordView c = d.chord(id);
  if (c.singular()) throw MoveError("R1 on singular chord " + std::to_string(id));
  if (!adjacent(c.over_pos, c.under_pos)) {
    throw MoveError("chord " + std::to_string(id) + " does not have adjacent endpoints");
  }
}

// Returns the pair ordered by Over position.
std::pair<ChordView, ChordView> require_r2_pattern(const GaussDiagram& d, ChordId a, ChordId b) {
  if (a == b) throw MoveError("R2 needs two distinct chords");
  ChordView x = d.chord(a);
  ChordView y = d.chord(b);
  if (x.singular() || y.singular()) throw MoveError("R2 on a singular chord");
  if (x.over_pos > y.over_pos) std::swap(x, y);
  if (!adjacent(x.over_pos, y.over_pos) || !adjacent(x.under_pos, y.under_pos)) {
    throw MoveError("chords " + std::to_string(a) + " and " + std::to_string(b) +
                    " do not have adjacent endpoint pairs");
  }
  if (x.under_pos > y.under_pos) {
    throw MoveError("chords " + std::to_string(a) + " and " + std::to_string(b) + " do not interleave");
  }
  if (x.sign == y.sign) {
    throw MoveError("chords " + std::to_string(a) + " and " + std::to_string(b) + " have the same sign");
  }
  return {x, y};
}

R3Variant variant_of(Position top, Position middle, Position bottom) {
  // Cyclic order top -> middle -> bottom along the arc.
  const bool cyclic = (top < middle && middle < bottom) || (middle < bottom && bottom < top) ||
                      (bottom < top && top < middle);
  return cyclic ? R3Variant::Omega3a : R3Variant::Omega3aPrime;
}

struct Resolved {
  ChordId first;
  ChordId second;
};

Resolved resolve_r2_ids(const GaussDiagram& d, const R2Insert& m) {
  const ChordId k = d.chord_count();
  Resolved r{m.first_id != 0 ? m.first_id : k + 1, m.second_id != 0 ? m.second_id : k + 2};
  if (r.first == r.second) throw MoveError("R2 chords need distinct ids");
  return r;
}

}  // namespace

MoveKind kind_of(const Move& m) noexcept { return static_cast<MoveKind>(m.index()); }

std::string_view to_string(MoveKind k) noexcept {
  switch (k) {
    case MoveKind::R1Insert: return "r1_insert";
    case MoveKind::R1Delete: return "r1_delete";
    case MoveKind::R2Insert: return "r2_insert";
    case MoveKind::R2Delete: return "r2_delete";
    case MoveKind::R3: return "r3";
  }
  return "?";
}

std::set<MoveKind> all_move_kinds() {
  return {MoveKind::R1Insert, MoveKind::R1Delete, MoveKind::R2Insert, MoveKind::R2Delete, MoveKind::R3};
}

GaussDiagram r1_insert(const GaussDiagram& d, Position gap, R1Direction direction, ChordSign sign) {
  return apply_move(d, R1Insert{gap, direction, sign, 0});
}

GaussDiagram r1_delete(const GaussDiagram& d, ChordId id) { return apply_move(d, R1Delete{id}); }

GaussDiagram r2_insert(const GaussDiagram& d, Position over_gap, Position under_gap, R2Signs signs) {
  return apply_move(d, R2Insert{over_gap, under_gap, signs, true, 0, 0});
}

GaussDiagram r2_delete(const GaussDiagram& d, ChordId first, ChordId second) {
  return apply_move(d, R2Delete{first, second});
}

std::vector<R3Config> detect_r3(const GaussDiagram& d) {
  std::vector<R3Config> out;
  const Position n = d.size();
  auto event = [&](Position p) -> const EndpointEvent* { return p >= 1 && p <= n ? &d.at(p) : nullptr; };
  auto sign = [&](ChordId id) { return d.signs()[id - 1]; };

  for (Position p = 1; p < n; ++p) {
    const auto& x = d.at(p);
    const auto& y = d.at(p + 1);
    if (x.kind != EventKind::Over || y.kind != EventKind::Over) continue;
    // swapped == false: top reads (O_tb, O_tm), middle (U_tm, O_mb), bottom (U_mb, U_tb).
    // swapped == true: every pair reversed.
    for (const bool swapped : {false, true}) {
      const ChordId tb = swapped ? y.chord : x.chord;
      const ChordId tm = swapped ? x.chord : y.chord;
      if (sign(tb) != ChordSign::Negative || sign(tm) != ChordSign::Positive) continue;

      const Position u_tm = d.chord(tm).under_pos;
      const Position o_mb = swapped ? u_tm - 1 : u_tm + 1;
      const EndpointEvent* mid = event(o_mb);
      if (mid == nullptr || mid->kind != EventKind::Over) continue;
      const ChordId mb = mid->chord;
      if (mb == tb || mb == tm || sign(mb) != ChordSign::Positive) continue;

      const Position u_tb = d.chord(tb).under_pos;
      const Position u_mb = swapped ? u_tb + 1 : u_tb - 1;
      const EndpointEvent* bot = event(u_mb);
      if (bot == nullptr || bot->kind != EventKind::Under || bot->chord != mb) continue;

      R3Config cfg;
      cfg.top_bottom = tb;
      cfg.top_middle = tm;
      cfg.middle_bottom = mb;
      cfg.top_pos = p;
      cfg.middle_pos = std::min(u_tm, o_mb);
      cfg.bottom_pos = std::min(u_tb, u_mb);
      cfg.variant = variant_of(cfg.top_pos, cfg.middle_pos, cfg.bottom_pos);
      out.push_back(cfg);
    }
  }
  return out;
}

GaussDiagram r3_apply(const GaussDiagram& d, const R3Config& config) {
  const auto found = detect_r3(d);
  if (std::find(found.begin(), found.end(), config) == found.end()) {
    throw MoveError("stale R3 configuration on chords " + std::to_string(config.top_bottom) + ", " +
                    std::to_string(config.top_middle) + ", " + std::to_string(config.middle_bottom));
  }
  std::vector<EndpointEvent> events(d.events().begin(), d.events().end());
  for (const Position p : {config.top_pos, config.middle_pos, config.bottom_pos}) {
    std::swap(events[p - 1], events[p]);
  }
  return GaussDiagram(std::move(events), {d.signs().begin(), d.signs().end()});
}

GaussDiagram plant_r3(const GaussDiagram& d, std::array<Position, 3> gaps,
                      std::array<R3Strand, 3> order, bool swapped) {
  if (!std::is_sorted(gaps.begin(), gaps.end())) throw MoveError("R3 gaps must be non-decreasing");
  {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array{R3Strand::Top, R3Strand::Middle, R3Strand::Bottom}) {
      throw MoveError("R3 strand order must name each strand once");
    }
  }
  const ChordId k = d.chord_count();
  const ChordId tb = k + 1, tm = k + 2, mb = k + 3;
  auto segment = [&](R3Strand s) -> std::array<EndpointEvent, 2> {
    std::array<EndpointEvent, 2> seg{};
    switch (s) {
      case R3Strand::Top: seg = {{{tb, EventKind::Over}, {tm, EventKind::Over}}}; break;
      case R3Strand::Middle: seg = {{{tm, EventKind::Under}, {mb, EventKind::Over}}}; break;
      case R3Strand::Bottom: seg = {{{mb, EventKind::Under}, {tb, EventKind::Under}}}; break;
    }
    if (swapped) std::swap(seg[0], seg[1]);
    return seg;
  };
  std::vector<NewEndpoint> added;
  for (std::size_t i = 0; i < 3; ++i) {
    for (const auto& ev : segment(order[i])) added.push_back({gaps[i], ev.chord, ev.kind});
  }
  return insert_chords(d, added,
                       {{tb, ChordSign::Negative}, {tm, ChordSign::Positive}, {mb, ChordSign::Positive}});
}

GaussDiagram apply_move(const GaussDiagram& d, const Move& m) {
  struct Visitor {
    const GaussDiagram& d;

    GaussDiagram operator()(const R1Insert& mv) const {
      const ChordId id = mv.id != 0 ? mv.id : d.chord_count() + 1;
      const bool fwd = mv.direction == R1Direction::Forward;
      return insert_chords(d,
                           {{mv.gap, id, fwd ? EventKind::Over : EventKind::Under},
                            {mv.gap, id, fwd ? EventKind::Under : EventKind::Over}},
                           {{id, mv.sign}});
    }
    GaussDiagram operator()(const R1Delete& mv) const {
      require_r1_pattern(d, mv.id);
      return delete_chords(d, {mv.id});
    }
    GaussDiagram operator()(const R2Insert& mv) const {
      const Resolved ids = resolve_r2_ids(d, mv);
      const bool first_positive = mv.signs == R2Signs::FirstPositive;
      const std::vector<NewEndpoint> over_pair{{mv.over_gap, ids.first, EventKind::Over},
                                               {mv.over_gap, ids.second, EventKind::Over}};
      const std::vector<NewEndpoint> under_pair{{mv.under_gap, ids.first, EventKind::Under},
                                                {mv.under_gap, ids.second, EventKind::Under}};
      std::vector<NewEndpoint> added;
      const bool over_before = mv.over_gap != mv.under_gap ? mv.over_gap < mv.under_gap : mv.over_first;
      for (const auto* pair : over_before ? std::array{&over_pair, &under_pair} : std::array{&under_pair, &over_pair}) {
        added.insert(added.end(), pair->begin(), pair->end());
      }
      return insert_chords(d, added,
                           {{ids.first, first_positive ? ChordSign::Positive : ChordSign::Negative},
                            {ids.second, first_positive ? ChordSign::Negative : ChordSign::Positive}});
    }
    GaussDiagram operator()(const R2Delete& mv) const {
      require_r2_pattern(d, mv.first, mv.second);
      return delete_chords(d, {mv.first, mv.second});
    }
    GaussDiagram operator()(const R3Move& mv) const {
      for (const auto& cfg : detect_r3(d)) {
        if (cfg.move() == mv) return r3_apply(d, cfg);
      }
      throw MoveError("no R3 configuration on chords " + std::to_string(mv.top_bottom) + ", " +
                      std::to_string(mv.top_middle) + ", " + std::to_string(mv.middle_bottom));
    }
  };
  return std::visit(Visitor{d}, m);
}

Move inverse_move(const GaussDiagram& d, const Move& m) {
  struct Visitor {
    const GaussDiagram& d;

    Move operator()(const R1Insert& mv) const {
      return R1Delete{mv.id != 0 ? mv.id : d.chord_count() + 1};
    }
    Move operator()(const R1Delete& mv) const {
      require_r1_pattern(d, mv.id);
      const ChordView c = d.chord(mv.id);
      return R1Insert{std::min(c.over_pos, c.under_pos) - 1,
                      c.over_pos < c.under_pos ? R1Direction::Forward : R1Direction::Backward, c.sign,
                      mv.id};
    }
    Move operator()(const R2Insert& mv) const {
      const Resolved ids = resolve_r2_ids(d, mv);
      return R2Delete{ids.first, ids.second};
    }
    Move operator()(const R2Delete& mv) const {
      const auto [x, y] = require_r2_pattern(d, mv.first, mv.second);
      R2Insert ins;
      ins.signs = x.sign == ChordSign::Positive ? R2Signs::FirstPositive : R2Signs::FirstNegative;
      ins.first_id = x.id;
      ins.second_id = y.id;
      ins.over_first = x.over_pos < x.under_pos;
      // Gaps are counted after the four endpoints are gone.
      if (ins.over_first) {
        ins.over_gap = x.over_pos - 1;
        ins.under_gap = x.under_pos - 1 - 2;
      } else {
        ins.under_gap = x.under_pos - 1;
        ins.over_gap = x.over_pos - 1 - 2;
      }
      return ins;
    }
    Move operator()(const R3Move& mv) const { return mv; }
  };
  return std::visit(Visitor{d}, m);
}

namespace {

using nlohmann::json;

std::string sign_text(ChordSign s) {
  return s == ChordSign::Positive ? "+" : s == ChordSign::Negative ? "-" : "*";
}

ChordSign sign_from_text(const std::string& s) {
  if (s == "+") return ChordSign::Positive;
  if (s == "-") return ChordSign::Negative;
  throw ParseError("bad chord sign '" + s + "' in move trace");
}

}  // namespace

std::string to_json_line(const Move& m) {
  struct Visitor {
    json operator()(const R1Insert& mv) const {
      return {{"gap", mv.gap},
              {"direction", mv.direction == R1Direction::Forward ? "forward" : "backward"},
              {"sign", sign_text(mv.sign)},
              {"id", mv.id}};
    }
    json operator()(const R1Delete& mv) const { return {{"id", mv.id}}; }
    json operator()(const R2Insert& mv) const {
      return {{"over_gap", mv.over_gap},
              {"under_gap", mv.under_gap},
              {"signs", mv.signs == R2Signs::FirstPositive ? "first_positive" : "first_negative"},
              {"over_first", mv.over_first},
              {"first_id", mv.first_id},
              {"second_id", mv.second_id}};
    }
    json operator()(const R2Delete& mv) const { return {{"first", mv.first}, {"second", mv.second}}; }
    json operator()(const R3Move& mv) const {
      return {{"top_bottom", mv.top_bottom}, {"top_middle", mv.top_middle}, {"middle_bottom", mv.middle_bottom}};
    }
  };
  json j;
  j["move"] = std::string(to_string(kind_of(m)));
  j["params"] = std::visit(Visitor{}, m);
  return j.dump();
}

Move move_from_json_line(std::string_view line) {
  try {
    const json j = json::parse(line);
    const std::string name = j.at("move").get<std::string>();
    const json& p = j.at("params");
    if (name == "r1_insert") {
      const std::string dir = p.at("direction").get<std::string>();
      if (dir != "forward" && dir != "backward") throw ParseError("bad R1 direction '" + dir + "'");
      return R1Insert{p.at("gap").get<Position>(),
                      dir == "forward" ? R1Direction::Forward : R1Direction::Backward,
                      sign_from_text(p.at("sign").get<std::string>()), p.value("id", ChordId{0})};
    }
    if (name == "r1_delete") return R1Delete{p.at("id").get<ChordId>()};
    if (name == "r2_insert") {
      const std::string signs = p.at("signs").get<std::string>();
      if (signs != "first_positive" && signs != "first_negative") throw ParseError("bad R2 signs '" + signs + "'");
      return R2Insert{p.at("over_gap").get<Position>(),
                      p.at("under_gap").get<Position>(),
                      signs == "first_positive" ? R2Signs::FirstPositive : R2Signs::FirstNegative,
                      p.value("over_first", true),
                      p.value("first_id", ChordId{0}),
                      p.value("second_id", ChordId{0})};
    }
    if (name == "r2_delete") return R2Delete{p.at("first").get<ChordId>(), p.at("second").get<ChordId>()};
    if (name == "r3") {
      return R3Move{p.at("top_bottom").get<ChordId>(), p.at("top_middle").get<ChordId>(),
                    p.at("middle_bottom").get<ChordId>()};
    }
    throw ParseError("unknown move '" + name + "'");
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed move trace line: ") + e.what());
  }
}

namespace {

std::vector<Move> candidates(const GaussDiagram& d, MoveKind kind, std::mt19937_64& rng) {
  std::vector<Move> out;
  switch (kind) {
    case MoveKind::R1Insert: {
      std::uniform_int_distribution<Position> gap(0, d.size());
      std::bernoulli_distribution coin(0.5);
      const R1Direction dir = coin(rng) ? R1Direction::Forward : R1Direction::Backward;
      const ChordSign sign = coin(rng) ? ChordSign::Positive : ChordSign::Negative;
      out.push_back(R1Insert{gap(rng), dir, sign, 0});
      break;
    }
    case MoveKind::R1Delete:
      for (const auto& c : d.chords()) {
        if (!c.singular() && adjacent(c.over_pos, c.under_pos)) out.push_back(R1Delete{c.id});
      }
      break;
    case MoveKind::R2Insert: {
      std::uniform_int_distribution<Position> gap(0, d.size());
      std::bernoulli_distribution coin(0.5);
      R2Insert mv;
      mv.over_gap = gap(rng);
      mv.under_gap = gap(rng);
      mv.signs = coin(rng) ? R2Signs::FirstPositive : R2Signs::FirstNegative;
      mv.over_first = coin(rng);
      out.push_back(mv);
      break;
    }
    case MoveKind::R2Delete:
      for (Position p = 1; p < d.size(); ++p) {
        const auto& a = d.at(p);
        const auto& b = d.at(p + 1);
        if (a.kind != EventKind::Over || b.kind != EventKind::Over) continue;
        try {
          require_r2_pattern(d, a.chord, b.chord);
          out.push_back(R2Delete{a.chord, b.chord});
        } catch (const MoveError&) {
        }
      }
      break;
    case MoveKind::R3:
      for (const auto& cfg : detect_r3(d)) out.push_back(cfg.move());
      break;
  }
  return out;
}

}  // namespace

WalkResult random_walk_traced(const GaussDiagram& d, std::size_t steps, std::uint64_t seed,
                              const std::set<MoveKind>& allowed) {
  std::mt19937_64 rng(seed);
  WalkResult result{d, {}, {}};
  for (std::size_t step = 0; step < steps; ++step) {
    std::vector<std::vector<Move>> options;
    for (MoveKind kind : allowed) {
      auto found = candidates(result.diagram, kind, rng);
      if (!found.empty()) options.push_back(std::move(found));
    }
    if (options.empty()) break;
    const auto& pool = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    const Move& mv = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    result.inverses.push_back(inverse_move(result.diagram, mv));
    result.diagram = apply_move(result.diagram, mv);
    result.moves.push_back(mv);
  }
  return result;
}

GaussDiagram random_walk(const GaussDiagram& d, std::size_t steps, std::uint64_t seed,
                         const std::set<MoveKind>& allowed) {
  return random_walk_traced(d, steps, seed, allowed).diagram;
}

}  // namespace knotoid
