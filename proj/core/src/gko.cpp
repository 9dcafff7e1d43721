#include "knotoid/gko.hpp"

#include <fstream>
#include <sstream>

#include "knotoid/error.hpp"

namespace knotoid {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::vector<NamedDiagram> parse_gko(std::string_view text) {
  std::vector<NamedDiagram> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'name: gauss-code'", line_no);
    const std::string_view name = trim(line.substr(0, colon));
    if (name.empty()) throw ParseError("empty diagram name", line_no);
    try {
      out.push_back({std::string(name), parse_gauss_code(line.substr(colon + 1))});
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), line_no, e.token());
    } catch (const InvalidDiagram& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  return out;
}

std::vector<NamedDiagram> read_gko_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_gko(buf.str());
}

std::string write_gko(const std::vector<NamedDiagram>& entries) {
  std::string out;
  for (const auto& e : entries) {
    out += e.name;
    out += ": ";
    out += serialize(e.diagram);
    out += '\n';
  }
  return out;
}

}  // namespace knotoid
