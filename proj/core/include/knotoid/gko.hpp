#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "knotoid/gauss_diagram.hpp"

namespace knotoid {

/// One entry of a `.gko` diagram collection.
struct NamedDiagram {
  std::string name;
  GaussDiagram diagram;

  friend bool operator==(const NamedDiagram&, const NamedDiagram&) = default;
};

/// `.gko` format: one `name: gauss-code` per line, `#` starts a comment that
/// runs to end of line, blank lines are ignored. ParseError carries the
/// 1-based line number.
std::vector<NamedDiagram> parse_gko(std::string_view text);
std::vector<NamedDiagram> read_gko_file(const std::filesystem::path& path);
std::string write_gko(const std::vector<NamedDiagram>& entries);

}  // namespace knotoid
