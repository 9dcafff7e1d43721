#include "oracle.hpp"

#include <cstdlib>
#include <set>

namespace oracle {

std::vector<Chord> chords(const knotoid::GaussDiagram& d) {
  std::vector<Chord> out(d.chord_count());
  const auto events = d.events();
  for (std::size_t p = 0; p < events.size(); ++p) {
    Chord& c = out[events[p].chord - 1];
    (events[p].kind == knotoid::EventKind::Over ? c.over : c.under) = p + 1;
  }
  for (std::size_t i = 0; i < out.size(); ++i) out[i].sign = knotoid::sign_value(d.signs()[i]);
  return out;
}

int side(const Chord& c, const Chord& e) {
  const std::size_t lo = std::min(c.over, c.under), hi = std::max(c.over, c.under);
  auto inside = [&](std::size_t p) { return lo < p && p < hi; };
  if (inside(e.over) == inside(e.under)) return 0;
  // c drawn from left to right when it points forward along the arc; e then
  // passes left to right exactly when its head lies inside the span.
  const bool head_inside = inside(e.under);
  const bool c_forward = c.over < c.under;
  return head_inside == c_forward ? 1 : -1;
}

std::int64_t degree(const std::vector<Chord>& cs, std::size_t c) {
  std::int64_t r_pos = 0, r_neg = 0, l_pos = 0, l_neg = 0;
  for (std::size_t e = 0; e < cs.size(); ++e) {
    if (e == c) continue;
    const int s = side(cs[c], cs[e]);
    if (s > 0) (cs[e].sign > 0 ? r_pos : r_neg) += cs[e].sign != 0;
    if (s < 0) (cs[e].sign > 0 ? l_pos : l_neg) += cs[e].sign != 0;
  }
  return r_pos - r_neg - l_pos + l_neg;
}

std::int64_t reduce(std::int64_t k, std::int64_t m, bool literal) {
  if (m == 0) return k;
  std::int64_t r = ((k % m) + m) % m;
  if (!literal) return r;
  if (2 * r > m) r -= m;
  if (2 * r == m && k < 0) r -= m;
  return r;
}

namespace {

std::int64_t gcd0(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void add(Poly& p, std::int64_t e, std::int64_t c) {
  if ((p[e] += c) == 0) p.erase(e);
}

}  // namespace

Poly index_function(const std::vector<Chord>& cs, std::size_t c, std::int64_t n, bool literal) {
  Poly p;
  const std::int64_t dc = degree(cs, c);
  const std::int64_t m = std::llabs(dc);
  for (std::size_t e = 0; e < cs.size(); ++e) {
    if (e == c) continue;
    const int s = side(cs[c], cs[e]);
    if (s == 0) continue;
    const std::int64_t de = degree(cs, e);
    if (gcd0(dc, de) != n) continue;
    if (s > 0) add(p, reduce(de, m, literal), cs[e].sign);
    if (s < 0) add(p, reduce(-de, m, literal), -cs[e].sign);
  }
  return p;
}

H compute(const knotoid::GaussDiagram& d, bool literal, bool include_n0) {
  const auto cs = chords(d);
  H h;
  auto add_const = [&](std::int64_t n, std::int64_t c) {
    if ((h.consts[n] += c) == 0) h.consts.erase(n);
  };
  for (std::size_t c = 0; c < cs.size(); ++c) {
    std::set<std::int64_t> strata;
    for (std::size_t e = 0; e < cs.size(); ++e) {
      if (e != c && side(cs[c], cs[e]) != 0) strata.insert(gcd0(degree(cs, c), degree(cs, e)));
    }
    for (const std::int64_t n : strata) {
      if (n == 0 && !include_n0) continue;
      const Poly ind = index_function(cs, c, n, literal);
      if (ind.empty()) continue;
      std::int64_t m = std::llabs(degree(cs, c));
      std::vector<std::pair<std::int64_t, std::int64_t>> terms(ind.begin(), ind.end());
      if (terms.size() == 1 && terms[0].first == 0) {
        m = 0;
      }
      const Key key{n, m, terms};
      if ((h.terms[key] += cs[c].sign) == 0) h.terms.erase(key);
      add_const(n, -cs[c].sign);
    }
  }
  return h;
}

H from_invariant(const knotoid::Invariant& a) {
  H h;
  for (const auto& [key, c] : a.terms()) {
    std::vector<std::pair<std::int64_t, std::int64_t>> terms(key.exponent.terms().begin(),
                                                              key.exponent.terms().end());
    h.terms[{key.n, key.modulus, terms}] = c;
  }
  for (const auto& [n, c] : a.constants()) h.consts[n] = c;
  return h;
}

}  // namespace oracle
