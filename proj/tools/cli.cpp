#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "knotoid/knotoid.hpp"
#include "property_suite.hpp"

namespace knotoid::cli {

namespace {

RenderFormat parse_format(const std::string& s) {
  return s == "json" ? RenderFormat::Json : s == "latex" ? RenderFormat::Latex : RenderFormat::Text;
}

CLI::Option* add_mode(CLI::App* app, std::string& mode) {
  return app->add_option("--mode", mode, "Exponent reduction policy")
      ->check(CLI::IsMember({"quotient", "literal"}))
      ->capture_default_str();
}

/// H of a diagram, expanding singular chords through their resolutions.
Invariant invariant_of(const GaussDiagram& d, const HOptions& options) {
  return d.singular_count() == 0 ? compute_H(d, options) : singular_H(d, options);
}

/// Renders every entry on worker threads; results keep input order.
std::vector<std::string> render_batch(const std::vector<NamedDiagram>& entries, const HOptions& options,
                                      RenderFormat format) {
  std::vector<std::string> out(entries.size());
  const std::size_t workers = std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < std::min(workers, entries.size()); ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < entries.size(); i += workers) {
        out[i] = render(invariant_of(entries[i].diagram, options), format);
      }
    }));
  }
  for (auto& job : jobs) job.get();
  return out;
}

struct ComputeArgs {
  std::optional<std::string> code;
  std::optional<std::string> file;
  std::string mode = "quotient";
  std::string format = "text";
  bool include_n0 = false;
};

int cmd_compute(const ComputeArgs& a, std::ostream& out) {
  const HOptions options{parse_policy(a.mode), a.include_n0};
  const RenderFormat format = parse_format(a.format);
  if (a.code) {
    out << render(invariant_of(parse_gauss_code(*a.code), options), format) << '\n';
    return kOk;
  }
  const auto entries = read_gko_file(*a.file);
  const auto rendered = render_batch(entries, options, format);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (format == RenderFormat::Json) {
      out << R"({"name":)" << nlohmann::json(entries[i].name).dump() << R"(,"H":)" << rendered[i] << "}\n";
    } else {
      out << entries[i].name << ": " << rendered[i] << '\n';
    }
  }
  return kOk;
}

struct CompareArgs {
  std::string a;
  std::string b;
  std::string mode = "quotient";
  std::string check = "none";
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
  const Invariant ha = compute_H(parse_gauss_code(a.a), parse_policy(a.mode));
  const Invariant hb = compute_H(parse_gauss_code(a.b), parse_policy(a.mode));
  out << (ha == hb ? "equal" : "distinct") << '\n';
  if (a.check == "none") return kOk;
  const Invariant expected =
      a.check == "reverse" ? subst_t_inverse(ha) : -subst_z_inverse(subst_t_inverse(ha));
  const bool holds = hb == expected;
  out << (holds ? "identity holds" : "identity fails") << '\n';
  return holds ? kOk : kPropertyFailure;
}

struct GordianArgs {
  std::string a;
  std::string b;
  std::string mode = "quotient";
  bool json = false;
};

int cmd_gordian(const GordianArgs& a, std::ostream& out, std::ostream& err) {
  const GordianResult r = gordian_lower_bound(parse_gauss_code(a.a), parse_gauss_code(a.b), HOptions{parse_policy(a.mode), false});
  if (a.json) {
    out << render_json(r) << '\n';
  } else if (r.ok()) {
    out << "bound: " << r.bound() << '\n';
  } else {
    out << "not_homotopy_form\n";
  }
  if (!r.ok()) err << r.reason << '\n';
  return kOk;
}

struct WalkArgs {
  std::string code;
  std::size_t steps = 10;
  std::uint64_t seed = 1;
};

int cmd_walk(const WalkArgs& a, std::ostream& out) {
  const WalkResult w = random_walk_traced(parse_gauss_code(a.code), a.steps, a.seed, all_move_kinds());
  for (const auto& m : w.moves) out << to_json_line(m) << '\n';
  out << "result: " << serialize(w.diagram) << '\n';
  return kOk;
}

int cmd_replay(const std::string& code, const std::string& trace_file, std::ostream& out) {
  std::ifstream in(trace_file);
  if (!in) throw Error("cannot open " + trace_file);
  GaussDiagram d = parse_gauss_code(code);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      d = apply_move(d, move_from_json_line(line));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), line_no);
    }
  }
  out << serialize(d) << '\n';
  return kOk;
}

int cmd_selftest(const SuiteOptions& options, std::ostream& out) {
  bool ok = true;
  for (const auto& r : run_property_suite(options)) {
    out << to_json_line(r) << '\n';
    if (r.fatal && !r.passed()) ok = false;
  }
  out << R"({"status":")" << (ok ? "pass" : "fail") << "\"}\n";
  return ok ? kOk : kPropertyFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Knotoid invariant H(t, y, z) of Gauss diagrams", "knotoid"};
  app.require_subcommand(1);

  ComputeArgs compute;
  auto* c = app.add_subcommand("compute", "Print H for one code or every diagram of a .gko file");
  auto* code_opt = c->add_option("--code", compute.code, "Gauss code");
  auto* file_opt = c->add_option("--file", compute.file, ".gko file")->check(CLI::ExistingFile);
  code_opt->excludes(file_opt);
  add_mode(c, compute.mode);
  c->add_option("--format", compute.format)->check(CLI::IsMember({"text", "json", "latex"}))->capture_default_str();
  c->add_flag("--include-n0", compute.include_n0, "Also sum the n = 0 stratum");

  CompareArgs compare;
  auto* cmp = app.add_subcommand("compare", "Compare H of two codes");
  cmp->add_option("codeA", compare.a)->required();
  cmp->add_option("codeB", compare.b)->required();
  add_mode(cmp, compare.mode);
  cmp->add_option("--check", compare.check, "Also check that B is the reverse or mirror image of A")
      ->check(CLI::IsMember({"reverse", "mirror", "none"}));

  GordianArgs gordian;
  auto* g = app.add_subcommand("gordian", "Lower bound on the Gordian distance of two codes");
  g->add_option("codeA", gordian.a)->required();
  g->add_option("codeB", gordian.b)->required();
  add_mode(g, gordian.mode);
  g->add_flag("--json", gordian.json);

  SuiteOptions suite;
  auto* s = app.add_subcommand("selftest", "Run the property suite");
  s->add_option("--samples", suite.samples)->capture_default_str();
  s->add_option("--max-chords", suite.max_chords)->capture_default_str();
  s->add_option("--seed", suite.seed)->capture_default_str();

  WalkArgs walk;
  auto* w = app.add_subcommand("walk", "Random Reidemeister walk, printed as a move trace");
  w->add_option("code", walk.code)->required();
  w->add_option("--steps", walk.steps)->capture_default_str();
  w->add_option("--seed", walk.seed)->capture_default_str();

  std::string replay_code;
  std::string replay_trace;
  auto* r = app.add_subcommand("replay", "Apply a move trace to a code");
  r->add_option("code", replay_code)->required();
  r->add_option("trace", replay_trace, "File of move-trace lines")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (c->parsed()) {
      if (!compute.code && !compute.file) {
        err << "compute: one of --code or --file is required\n";
        return kUsageError;
      }
      return cmd_compute(compute, out);
    }
    if (cmp->parsed()) return cmd_compare(compare, out);
    if (g->parsed()) return cmd_gordian(gordian, out, err);
    if (s->parsed()) return cmd_selftest(suite, out);
    if (w->parsed()) return cmd_walk(walk, out);
    if (r->parsed()) return cmd_replay(replay_code, replay_trace, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace knotoid::cli
