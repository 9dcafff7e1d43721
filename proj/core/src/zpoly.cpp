#include "knotoid/zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace knotoid {

std::string_view to_string(ReductionPolicy p) noexcept {
  return p == ReductionPolicy::Quotient ? "quotient" : "literal";
}

ReductionPolicy parse_policy(std::string_view text) {
  if (text == "quotient") return ReductionPolicy::Quotient;
  if (text == "literal") return ReductionPolicy::Literal;
  throw std::invalid_argument("unknown reduction policy '" + std::string(text) +
                              "' (expected quotient or literal)");
}

std::int64_t reduce_exponent(std::int64_t k, std::int64_t m, ReductionPolicy policy) {
  if (m < 0) throw std::invalid_argument("modulus must be non-negative");
  if (m == 0) return k;
  std::int64_t r = k % m;
  if (r < 0) r += m;
  if (policy == ReductionPolicy::Quotient) return r;
  if (2 * r < m) return r;
  if (2 * r > m) return r - m;
  return k > 0 ? r : r - m;
}

ZPoly ZPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  ZPoly out;
  for (const auto& [e, c] : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == e) {
      out.terms_.back().second += c;
    } else {
      out.terms_.emplace_back(e, c);
    }
  }
  std::erase_if(out.terms_, [](const Term& t) { return t.second == 0; });
  return out;
}

ZPoly ZPoly::monomial(std::int64_t coeff, std::int64_t exponent) {
  ZPoly out;
  if (coeff != 0) out.terms_.emplace_back(exponent, coeff);
  return out;
}

std::int64_t ZPoly::coeff(std::int64_t e) const noexcept {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, std::int64_t x) { return t.first < x; });
  return it != terms_.end() && it->first == e ? it->second : 0;
}

ZPoly ZPoly::operator-() const {
  ZPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
  ZPoly out;
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto i = a.terms_.begin();
  auto j = b.terms_.begin();
  while (i != a.terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
      out.terms_.push_back(*i++);
    } else if (i == a.terms_.end() || j->first < i->first) {
      out.terms_.push_back(*j++);
    } else {
      if (const auto c = i->second + j->second; c != 0) out.terms_.emplace_back(i->first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

ZPoly ZPoly::scaled(std::int64_t c) const {
  if (c == 0) return {};
  ZPoly out = *this;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

ZPoly ZPoly::subst_z_inverse() const {
  ZPoly out;
  out.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) out.terms_.emplace_back(-it->first, it->second);
  return out;
}

ZPoly ZPoly::reduced(std::int64_t m, ReductionPolicy policy) const {
  if (m == 0) return *this;
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& [e, c] : terms_) terms.emplace_back(reduce_exponent(e, m, policy), c);
  return from_terms(std::move(terms));
}

std::string ZPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += 'z';
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace knotoid
