#include "knotoid/invariant.hpp"

#include <numeric>

#include "knotoid/error.hpp"

namespace knotoid {

void Invariant::add_term(std::int64_t n, std::int64_t modulus, const ZPoly& exponent,
                         std::int64_t coeff) {
  if (coeff == 0) return;
  ZPoly p = exponent.reduced(modulus, policy_);
  if (p.is_zero()) {
    add_constant(n, coeff);
    return;
  }
  if (p.is_constant()) modulus = 0;
  TermKey key{n, modulus, std::move(p)};
  auto [it, inserted] = terms_.try_emplace(std::move(key), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void Invariant::add_constant(std::int64_t n, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = constants_.try_emplace(n, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) constants_.erase(it);
  }
}

std::int64_t Invariant::coeff(const TermKey& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Invariant::constant(std::int64_t n) const {
  auto it = constants_.find(n);
  return it == constants_.end() ? 0 : it->second;
}

bool operator==(const Invariant& a, const Invariant& b) {
  if (a.policy_ != b.policy_) throw PolicyMismatch();
  return a.terms_ == b.terms_ && a.constants_ == b.constants_;
}

Invariant operator+(const Invariant& a, const Invariant& b) {
  if (a.policy_ != b.policy_) throw PolicyMismatch();
  Invariant out = a;
  for (const auto& [key, c] : b.terms_) out.add_term(key.n, key.modulus, key.exponent, c);
  for (const auto& [n, c] : b.constants_) out.add_constant(n, c);
  return out;
}

Invariant Invariant::operator-() const {
  Invariant out = *this;
  for (auto& [key, c] : out.terms_) c = -c;
  for (auto& [n, c] : out.constants_) c = -c;
  return out;
}

Invariant operator-(const Invariant& a, const Invariant& b) { return a + (-b); }

Invariant subst_t_inverse(const Invariant& a) {
  Invariant out(a.policy());
  for (const auto& [key, c] : a.terms()) out.add_term(key.n, key.modulus, -key.exponent, c);
  for (const auto& [n, c] : a.constants()) out.add_constant(n, c);
  return out;
}

Invariant subst_z_inverse(const Invariant& a) {
  Invariant out(a.policy());
  for (const auto& [key, c] : a.terms()) {
    out.add_term(key.n, key.modulus, key.exponent.subst_z_inverse(), c);
  }
  for (const auto& [n, c] : a.constants()) out.add_constant(n, c);
  return out;
}

std::int64_t degree_gcd(std::int64_t a, std::int64_t b) noexcept { return std::gcd(a, b); }

CrossingPartition crossing_partition(const GaussDiagram& d, ChordId c) {
  const ChordView cv = d.chord(c);
  const bool backwards = cv.over_pos > cv.under_pos;
  CrossingPartition out;
  for (ChordId e = 1; e <= d.chord_count(); ++e) {
    if (e == c) continue;
    const ChordView ev = d.chord(e);
    const bool over_inside = cv.contains(ev.over_pos);
    if (over_inside == cv.contains(ev.under_pos)) continue;
    (over_inside == backwards ? out.right : out.left).push_back(e);
  }
  return out;
}

std::int64_t degree(const GaussDiagram& d, ChordId c) {
  const CrossingPartition p = crossing_partition(d, c);
  std::int64_t deg = 0;
  for (ChordId e : p.right) deg += sign_value(d.signs()[e - 1]);
  for (ChordId e : p.left) deg -= sign_value(d.signs()[e - 1]);
  return deg;
}

namespace {

// Endpoint positions as flat arrays; the hot loops below avoid the bounds
// checks in GaussDiagram::chord.
struct Layout {
  std::vector<Position> over;
  std::vector<Position> under;
  std::vector<int> sign;

  explicit Layout(const GaussDiagram& d) {
    const std::size_t k = d.chord_count();
    over.resize(k);
    under.resize(k);
    sign.resize(k);
    for (ChordId id = 1; id <= k; ++id) {
      const ChordView v = d.chord(id);
      over[id - 1] = v.over_pos;
      under[id - 1] = v.under_pos;
      sign[id - 1] = sign_value(v.sign);
    }
  }

  // +1 if e is in r(c), -1 if e is in l(c), 0 if e does not cross c.
  int side(std::size_t c, std::size_t e) const {
    const Position lo = std::min(over[c], under[c]);
    const Position hi = std::max(over[c], under[c]);
    const bool over_inside = lo < over[e] && over[e] < hi;
    const bool under_inside = lo < under[e] && under[e] < hi;
    if (over_inside == under_inside) return 0;
    return over_inside == (over[c] > under[c]) ? 1 : -1;
  }
};

}  // namespace

std::vector<std::int64_t> degrees(const GaussDiagram& d) {
  const Layout layout(d);
  const std::size_t k = d.chord_count();
  std::vector<std::int64_t> out(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    std::int64_t deg = 0;
    for (std::size_t e = 0; e < k; ++e) {
      if (e != c) deg += layout.side(c, e) * layout.sign[e];
    }
    out[c] = deg;
  }
  return out;
}

CrossingPartition n_partition(const GaussDiagram& d, ChordId c, std::int64_t n) {
  const CrossingPartition all = crossing_partition(d, c);
  const std::int64_t dc = degree(d, c);
  CrossingPartition out;
  for (ChordId e : all.right) {
    if (degree_gcd(dc, degree(d, e)) == n) out.right.push_back(e);
  }
  for (ChordId e : all.left) {
    if (degree_gcd(dc, degree(d, e)) == n) out.left.push_back(e);
  }
  return out;
}

ZPoly index_function(const GaussDiagram& d, ChordId c, std::int64_t n, ReductionPolicy policy) {
  const CrossingPartition part = n_partition(d, c, n);
  const std::int64_t m = std::abs(degree(d, c));
  std::vector<ZPoly::Term> terms;
  for (ChordId e : part.right) {
    terms.emplace_back(reduce_exponent(degree(d, e), m, policy), sign_value(d.signs()[e - 1]));
  }
  for (ChordId e : part.left) {
    terms.emplace_back(reduce_exponent(-degree(d, e), m, policy), -sign_value(d.signs()[e - 1]));
  }
  return ZPoly::from_terms(std::move(terms));
}

Invariant compute_H(const GaussDiagram& d, const HOptions& options) {
  if (d.singular_count() != 0) {
    throw SingularChordError("H is defined on diagrams without singular chords; chord " +
                             std::to_string(d.singular_chords().front()) + " is singular");
  }
  const Layout layout(d);
  const std::vector<std::int64_t> deg = degrees(d);
  const std::size_t k = d.chord_count();

  Invariant out(options.policy);
  // Per chord: stratum n -> accumulated (exponent, coefficient) terms.
  std::map<std::int64_t, std::vector<ZPoly::Term>> strata;
  for (std::size_t c = 0; c < k; ++c) {
    strata.clear();
    const std::int64_t m = std::abs(deg[c]);
    for (std::size_t e = 0; e < k; ++e) {
      if (e == c) continue;
      const int side = layout.side(c, e);
      if (side == 0) continue;
      const std::int64_t n = degree_gcd(deg[c], deg[e]);
      if (n == 0 && !options.include_n0) continue;
      const std::int64_t exponent = reduce_exponent(side > 0 ? deg[e] : -deg[e], m, options.policy);
      strata[n].emplace_back(exponent, side * layout.sign[e]);
    }
    for (auto& [n, terms] : strata) {
      const ZPoly ind = ZPoly::from_terms(std::move(terms));
      if (ind.is_zero()) continue;
      out.add_term(n, m, ind, layout.sign[c]);
      out.add_constant(n, -layout.sign[c]);
    }
  }
  return out;
}

bool nonzero_height_certificate(const GaussDiagram& d, const HOptions& options) {
  return !compute_H(d, options).is_zero();
}

}  // namespace knotoid
