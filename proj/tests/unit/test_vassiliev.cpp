#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace knotoid;
using enum ReductionPolicy;
using fixtures::parse;

namespace {

// Expands the singular chords highest id first, the reverse of singular_H.
Invariant expand_reversed(const GaussDiagram& d, ReductionPolicy policy) {
  const auto singular = d.singular_chords();
  if (singular.empty()) return compute_H(d, policy);
  const auto [plus, minus] = resolutions(d, singular.back());
  return expand_reversed(plus, policy) - expand_reversed(minus, policy);
}

GaussDiagram random_singular(std::mt19937_64& rng, std::size_t s, std::size_t max_chords) {
  const std::size_t k = std::uniform_int_distribution<std::size_t>(s, max_chords)(rng);
  const GaussDiagram base = random_diagram(k, rng());
  std::vector<ChordId> ids(k);
  std::iota(ids.begin(), ids.end(), ChordId{1});
  std::shuffle(ids.begin(), ids.end(), rng);
  return make_singular(base, std::span<const ChordId>(ids.data(), s));
}

}  // namespace

TEST_CASE("resolutions of the reference singular diagram") {
  const GaussDiagram d = parse(fixtures::singular_kc);
  CHECK(d.singular_chords() == std::vector<ChordId>{2});
  const auto [plus, minus] = resolutions(d, 2);
  CHECK(degrees(plus) == std::vector<std::int64_t>{-2, -2, 1, 1});
  CHECK(degrees(minus) == std::vector<std::int64_t>{-2, 2, 1, 1});
  CHECK(minus == crossing_change(plus, 2));
  CHECK(plus.chord(2).over_pos == d.chord(2).over_pos);
  CHECK(plus.chord(2).sign == ChordSign::Positive);
  for (const auto policy : {Quotient, Literal}) CHECK(compute_H(plus, policy).is_zero());
}

TEST_CASE("resolution errors") {
  CHECK_THROWS_AS(resolutions(parse(fixtures::k2_2), 1), SingularChordError);
  CHECK_THROWS_AS(resolutions(parse(fixtures::singular_kc), 9), UnknownChord);
}

TEST_CASE("singular_H of the reference singular diagram") {
  const GaussDiagram d = parse(fixtures::singular_kc);
  // (t^-z - 1)y + (t^-1 - 1)y^2 + (t^z - 1)y + (t - 1)y^2
  Invariant expected(Quotient);
  expected.add_term(1, 2, ZPoly::monomial(-1, 1), 1);
  expected.add_term(1, 2, ZPoly::monomial(1, 1), 1);
  expected.add_constant(1, -2);
  expected.add_term(2, 0, ZPoly::constant(-1), 1);
  expected.add_term(2, 0, ZPoly::constant(1), 1);
  expected.add_constant(2, -2);
  CHECK(singular_H(d, Quotient) == expected);
  CHECK(render(singular_H(d, Literal)) == "(t^(z^-1) + t^(-z) - 2)*y + (t^-1 + t - 2)*y^2");
  for (const auto policy : {Quotient, Literal}) CHECK_FALSE(singular_H(d, policy).is_zero());
}

TEST_CASE("skein identities") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 300; ++i) {
    for (const auto policy : {Quotient, Literal}) {
      const GaussDiagram d0 = random_diagram(i % 7, rng());
      CHECK(singular_H(d0, policy) == compute_H(d0, policy));

      const GaussDiagram d1 = random_singular(rng, 1, 7);
      const auto [plus, minus] = resolutions(d1, d1.singular_chords().front());
      CHECK(singular_H(d1, policy) == compute_H(plus, policy) - compute_H(minus, policy));

      const GaussDiagram d2 = random_singular(rng, 2 + i % 2, 8);
      CHECK(singular_H(d2, policy).is_zero());
      CHECK(expand_reversed(d2, policy) == singular_H(d2, policy));
    }
  }
}

TEST_CASE("verify_order_one") {
  for (const auto policy : {Quotient, Literal}) {
    const OrderOneReport r = verify_order_one(1000, 8, 4, policy, parse(fixtures::singular_kc));
    CHECK(r.samples == 1000);
    CHECK(r.failures == 0);
    REQUIRE(r.witness.has_value());
    CHECK(*r.witness == parse(fixtures::singular_kc));
    CHECK(r.passed());
  }
  const OrderOneReport searched = verify_order_one(200, 6, 9, Quotient);
  CHECK(searched.witness.has_value());
  CHECK(verify_order_one(0, 8, 1, Quotient).failures == 0);
}
