#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "knotoid/error.hpp"
#include "knotoid/invariant.hpp"

namespace knotoid {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string latex_zpoly(const ZPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
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
    if (mag != 1) out += std::to_string(mag);
    out += 'z';
    if (e != 1) out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

std::string t_power(const ZPoly& exponent, RenderFormat format) {
  if (exponent.is_constant()) {
    const std::int64_t c = exponent.constant_value();
    if (c == 1) return "t";
    return format == RenderFormat::Latex ? "t^{" + std::to_string(c) + "}" : "t^" + std::to_string(c);
  }
  if (format == RenderFormat::Latex) return "t^{" + latex_zpoly(exponent) + "}";
  return "t^(" + exponent.to_string() + ")";
}

std::string y_power(std::int64_t n, RenderFormat format) {
  if (n == 1) return "y";
  return format == RenderFormat::Latex ? "y^{" + std::to_string(n) + "}" : "y^" + std::to_string(n);
}

// One signed summand: magnitude/base pair, joined later with " + " / " - ".
struct Summand {
  std::int64_t coeff;
  std::string base;  // empty for a bare constant
};

std::string join(const std::vector<Summand>& items, RenderFormat format) {
  std::string out;
  bool first = true;
  for (const auto& [c, base] : items) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (base.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + (format == RenderFormat::Text ? "*" : "");
      out += base;
    }
  }
  return out;
}

std::string render_json(const Invariant& a) {
  ordered_json j;
  j["policy"] = std::string(to_string(a.policy()));
  j["terms"] = ordered_json::array();
  for (const auto& [key, c] : a.terms()) {
    ordered_json p = ordered_json::array();
    for (const auto& [e, pc] : key.exponent.terms()) p.push_back({e, pc});
    j["terms"].push_back({{"n", key.n}, {"m", key.modulus}, {"P", p}, {"coeff", c}});
  }
  j["consts"] = ordered_json::array();
  for (const auto& [n, c] : a.constants()) j["consts"].push_back({{"n", n}, {"coeff", c}});
  return j.dump();
}

}  // namespace

std::string render(const Invariant& a, RenderFormat format) {
  if (format == RenderFormat::Json) return render_json(a);
  if (a.is_zero()) return "0";

  std::map<std::int64_t, std::vector<Summand>> groups;
  for (const auto& [key, c] : a.terms()) groups[key.n].push_back({c, t_power(key.exponent, format)});
  for (const auto& [n, c] : a.constants()) groups[n].push_back({c, ""});

  std::string out;
  bool first = true;
  for (const auto& [n, items] : groups) {
    if (!first) out += " + ";
    first = false;
    if (format == RenderFormat::Latex) {
      out += "\\left(" + join(items, format) + "\\right) " + y_power(n, format);
    } else {
      out += "(" + join(items, format) + ")*" + y_power(n, format);
    }
  }
  return out;
}

Invariant invariant_from_json(std::string_view text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid invariant JSON: ") + e.what());
  }
  try {
    Invariant out(parse_policy(j.at("policy").get<std::string>()));
    for (const auto& t : j.at("terms")) {
      std::vector<ZPoly::Term> terms;
      for (const auto& pair : t.at("P")) {
        terms.emplace_back(pair.at(0).get<std::int64_t>(), pair.at(1).get<std::int64_t>());
      }
      out.add_term(t.at("n").get<std::int64_t>(), t.at("m").get<std::int64_t>(),
                   ZPoly::from_terms(std::move(terms)), t.at("coeff").get<std::int64_t>());
    }
    for (const auto& c : j.at("consts")) {
      out.add_constant(c.at("n").get<std::int64_t>(), c.at("coeff").get<std::int64_t>());
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed invariant JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace knotoid
