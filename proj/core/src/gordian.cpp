#include "knotoid/gordian.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "knotoid/error.hpp"

namespace knotoid {

ZPoly partner_exponent(const ZPoly& p, std::int64_t modulus, ReductionPolicy policy) {
  return (-p.subst_z_inverse()).reduced(modulus, policy);
}

Invariant crossing_change_delta(const GaussDiagram& d, ChordId id, const HOptions& options) {
  const ChordView c = d.chord(id);
  if (c.singular()) throw SingularChordError("crossing change at singular chord " + std::to_string(id));
  const std::vector<std::int64_t> deg = degrees(d);
  const std::int64_t dc = deg[id - 1];
  const std::int64_t m = std::abs(dc);
  const CrossingPartition part = crossing_partition(d, id);

  std::map<std::int64_t, std::vector<ZPoly::Term>> strata;
  auto collect = [&](const std::vector<ChordId>& side, int dir) {
    for (ChordId e : side) {
      const std::int64_t n = degree_gcd(dc, deg[e - 1]);
      if (n == 0 && !options.include_n0) continue;
      const std::int64_t k = reduce_exponent(dir * deg[e - 1], m, options.policy);
      strata[n].emplace_back(k, dir * sign_value(d.signs()[e - 1]));
    }
  };
  collect(part.right, 1);
  collect(part.left, -1);

  const int eps = sign_value(c.sign);
  Invariant out(options.policy);
  for (auto& [n, terms] : strata) {
    const ZPoly ind = ZPoly::from_terms(std::move(terms));
    if (ind.is_zero()) continue;
    out.add_term(n, m, ind, eps);
    out.add_term(n, m, partner_exponent(ind, m, options.policy), eps);
    out.add_constant(n, -2 * eps);
  }
  return out;
}

GordianDecomposition decompose(const Invariant& delta) {
  GordianDecomposition g;
  g.policy = delta.policy();
  std::map<std::int64_t, std::int64_t> expected_const;
  std::set<TermKey> used;

  for (const auto& [key, c] : delta.terms()) {
    if (used.contains(key)) continue;
    const ZPoly q = partner_exponent(key.exponent, key.modulus, g.policy);
    const TermKey partner{key.n, q.is_constant() ? 0 : key.modulus, q};
    std::int64_t a = 0;
    if (partner == key) {
      if (c % 2 != 0) {
        throw NotHomotopyForm("self-partnered term t^(" + key.exponent.to_string() + ") in y^" +
                              std::to_string(key.n) + " has odd coefficient " + std::to_string(c));
      }
      a = c / 2;
    } else {
      const std::int64_t cq = delta.coeff(partner);
      if (cq == 0) {
        throw NotHomotopyForm("term t^(" + key.exponent.to_string() + ") in y^" + std::to_string(key.n) +
                              " has no partner t^(" + q.to_string() + ")");
      }
      if (cq != c) {
        throw NotHomotopyForm("partner terms t^(" + key.exponent.to_string() + ") and t^(" + q.to_string() +
                              ") in y^" + std::to_string(key.n) + " have coefficients " + std::to_string(c) +
                              " and " + std::to_string(cq));
      }
      a = c;
      used.insert(partner);
    }
    used.insert(key);
    g.pairs.push_back({key.n, key.modulus, key.exponent, a});
    g.bound_per_n[key.n] += std::abs(a);
    expected_const[key.n] -= 2 * a;
  }

  std::set<std::int64_t> strata;
  for (const auto& [n, c] : expected_const) strata.insert(n);
  for (const auto& [n, c] : delta.constants()) strata.insert(n);
  for (std::int64_t n : strata) {
    const std::int64_t want = expected_const.contains(n) ? expected_const.at(n) : 0;
    if (delta.constant(n) != want) {
      throw NotHomotopyForm("constant of y^" + std::to_string(n) + " is " + std::to_string(delta.constant(n)) +
                            ", crossing-change terms need " + std::to_string(want));
    }
  }
  for (const auto& [n, b] : g.bound_per_n) g.bound = std::max(g.bound, b);
  return g;
}

Invariant reconstruct(const GordianDecomposition& g) {
  Invariant out(g.policy);
  for (const auto& p : g.pairs) {
    out.add_term(p.n, p.modulus, p.exponent, p.a);
    out.add_term(p.n, p.modulus, partner_exponent(p.exponent, p.modulus, g.policy), p.a);
    out.add_constant(p.n, -2 * p.a);
  }
  return out;
}

GordianResult gordian_lower_bound(const GaussDiagram& d1, const GaussDiagram& d2, const HOptions& options) {
  const Invariant delta = compute_H(d1, options) - compute_H(d2, options);
  GordianResult r;
  try {
    r.decomposition = decompose(delta);
  } catch (const NotHomotopyForm& e) {
    r.status = GordianResult::Status::NotHomotopyForm;
    r.decomposition = GordianDecomposition{options.policy, {}, {}, 0};
    r.reason = e.what();
  }
  return r;
}

std::string render_json(const GordianResult& r) {
  nlohmann::ordered_json j;
  if (r.ok()) {
    j["bound"] = r.decomposition.bound;
  } else {
    j["bound"] = nullptr;
  }
  j["per_n"] = nlohmann::ordered_json::object();
  for (const auto& [n, b] : r.decomposition.bound_per_n) j["per_n"][std::to_string(n)] = b;
  j["pairs"] = nlohmann::ordered_json::array();
  for (const auto& p : r.decomposition.pairs) {
    nlohmann::ordered_json poly = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.exponent.terms()) poly.push_back({e, c});
    j["pairs"].push_back({{"n", p.n}, {"m", p.modulus}, {"P", poly}, {"a", p.a}});
  }
  j["status"] = r.ok() ? "ok" : "not_homotopy_form";
  return j.dump();
}

}  // namespace knotoid
