#pragma once

#include <string_view>

#include "knotoid/knotoid.hpp"

namespace fixtures {

inline constexpr std::string_view k2_2 = "O1+ O2- U1 U2";
inline constexpr std::string_view k5_1_28 = "O1+ U2 U3 O4- O5+ U4 O2+ U1 O3- U5";
inline constexpr std::string_view k5_1_28_reverse = "U5 O3- U1 O2+ U4 O5+ O4- U3 U2 O1+";
inline constexpr std::string_view singular_kc = "O1- O2* U3 U4 O3+ U1 U2* O4-";

inline knotoid::GaussDiagram parse(std::string_view code) { return knotoid::parse_gauss_code(code); }

/// Exponent polynomial from (exponent, coefficient) pairs.
inline knotoid::ZPoly poly(std::vector<knotoid::ZPoly::Term> terms) {
  return knotoid::ZPoly::from_terms(std::move(terms));
}

}  // namespace fixtures
