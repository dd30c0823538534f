#pragma once

// Command-line front end. run() takes the arguments after the program name
// and returns the exit status: 0 success, 1 mismatch, 2 usage or parse error.

#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "seaweed.hpp"

namespace seaweed::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kEnumerateCap = 12;
inline constexpr int kOracleCap = 6;

enum class Command { Analyze, Enumerate, Verify, Render };
enum class Format { Text, Json, Dot, Tikz };

struct CliConfig {
  Command command = Command::Analyze;
  std::string spec_text;
  int n = 0;
  std::string kind;
  bool json = false;
  bool dot = false;
  bool tikz = false;
  bool oracle = false;
  bool parts_le_2 = false;
  bool parabolic = false;
  bool type_a = false;
  std::string out_path;
  FieldConfig field;

  Format format() const {
    if (json) return Format::Json;
    if (tikz) return Format::Tikz;
    if (dot) return Format::Dot;
    return Format::Text;
  }
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void print_report(const InvariantReport& r, std::ostream& os) {
  auto line = [&os](const char* key, const auto& value) { os << std::left << std::setw(16) << key << "= " << value << '\n'; };
  line("spec", to_string(r.spec));
  line("N", r.n);
  line("dim", r.dim);
  line("ind s", r.index_seaweed);
  line("|Cen(s)|", r.n_central);
  line("dim center", r.center_dim);
  line("total weight", r.total_weight);
  line("ind n(s)", r.index_nilradical);
  line("lower bound", r.lower_bound);
  line("|E_1(s)|", r.e1_count);
  line("breadth", r.breadth_seaweed);
  if (r.closed_form) line("closed form", r.closed_form->tag + " = " + std::to_string(r.closed_form->value));
  if (r.oracle) {
    const auto& o = *r.oracle;
    line("oracle ind s", o.index_seaweed_oracle);
    line("oracle ind n(s)", o.index_nilradical_oracle);
    line("oracle center", o.center_oracle);
    line("oracle breadth", o.breadth_oracle);
    line("nilpotent", o.nilpotency_ok ? "yes" : "no");
    line("ideal", o.ideal_ok ? "yes" : "no");
  }
}

inline SeaweedSpec spec_from(const CliConfig& cfg) {
  auto s = parse_spec(cfg.spec_text);
  return cfg.type_a ? s.with_flavor(Flavor::SL) : s;
}

inline int cmd_analyze(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto s = spec_from(cfg);
  if (cfg.oracle) cfg.field.validate(s.n());
  const auto r = cfg.oracle ? report_with_escalation(s, cfg.field) : full_report(s);
  if (cfg.format() == Format::Json)
    out << to_json(r).dump() << '\n';
  else
    print_report(r, out);
  if (!r.oracle_agrees()) {
    err << "oracle disagrees with the formulas for " << to_string(s) << '\n';
    return kExitMismatch;
  }
  return kExitOk;
}

inline void check_size(const CliConfig& cfg) {
  const int cap = cfg.oracle || cfg.command == Command::Verify ? kOracleCap : kEnumerateCap;
  if (cfg.n < 1 || cfg.n > cap)
    throw UsageError("N must lie in 1.." + std::to_string(cap) + (cap == kOracleCap ? " with the oracle" : ""));
}

inline int cmd_enumerate(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  check_size(cfg);
  if (cfg.oracle) cfg.field.validate(cfg.n);
  EnumerationFilter filter{.flavor = cfg.type_a ? Flavor::SL : Flavor::GL,
                           .parts_le_2 = cfg.parts_le_2,
                           .parabolic = cfg.parabolic};
  int status = kExitOk;
  for_each_spec(cfg.n, filter, [&](const SeaweedSpec& s) {
    const auto r = cfg.oracle ? report_with_escalation(s, cfg.field) : full_report(s);
    out << to_json(r).dump() << '\n';
    if (!r.oracle_agrees()) {
      err << "oracle disagrees with the formulas for " << to_string(s) << '\n';
      status = kExitMismatch;
    }
  });
  return status;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  check_size(cfg);
  cfg.field.validate(cfg.n);
  const auto summary = verify_all(cfg.n, cfg.field);
  for (const auto& t : summary.tallies)
    out << std::left << std::setw(22) << t.name << " passed " << std::setw(6) << t.passed << " failed " << t.failed
        << '\n';
  for (const auto& m : summary.mismatches)
    err << "mismatch " << m.check << " on " << m.subject << ": formula " << m.formula << ", other " << m.other
        << '\n';
  out << (summary.ok() ? "all checks passed" : "verification FAILED") << '\n';
  return summary.ok() ? kExitOk : kExitMismatch;
}

inline int cmd_render(const CliConfig& cfg, std::ostream& out) {
  const auto s = spec_from(cfg);
  const bool tikz = cfg.format() == Format::Tikz;
  if (cfg.kind == "meander")
    out << (tikz ? meander_tikz(build_meander(s)) : meander_dot(build_meander(s)));
  else if (cfg.kind == "weighted")
    out << (tikz ? weighted_tikz(build_weighted(s)) : weighted_dot(build_weighted(s)));
  else if (cfg.kind == "blocks")
    out << (tikz ? block_diagram_tikz(build_block_diagram(s)) : block_diagram_dot(build_block_diagram(s)));
  else if (cfg.kind == "hasse") {
    const auto p = poset_from_diagram(build_block_diagram(s));
    out << (tikz ? hasse_tikz(p) : hasse_dot(p));
  } else
    throw UsageError("unknown diagram kind '" + cfg.kind + "'");
  return kExitOk;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Invariants of seaweed subalgebras of gl(N) and sl(N)", "seaweed"};
  app.require_subcommand(1);

  auto add_field = [&cfg](CLI::App* sub) {
    sub->add_flag("--oracle", cfg.oracle, "Cross-check against the matrix oracle");
    sub->add_option("--prime", cfg.field.prime, "Prime modulus for the oracle");
    sub->add_option("--trials", cfg.field.trials, "Random trials per oracle estimate");
    sub->add_option("--seed", cfg.field.seed, "Seed for the oracle's random draws");
    sub->add_option("--out", cfg.out_path, "Write output to this file");
  };

  auto* analyze = app.add_subcommand("analyze", "Report every invariant of one spec");
  analyze->add_option("spec", cfg.spec_text, "Spec such as \"p 2|4/1|2|3\"")->required();
  analyze->add_flag("--json", cfg.json, "Emit JSON");
  analyze->add_flag("--type-a", cfg.type_a, "Use the sl flavor");
  add_field(analyze);

  auto* enumerate = app.add_subcommand("enumerate", "Report every spec of size N as JSON lines");
  enumerate->add_option("N", cfg.n, "Size")->required();
  enumerate->add_flag("--json", cfg.json, "Emit JSON (always on)");
  enumerate->add_flag("--parts-le-2", cfg.parts_le_2, "Only parts in {1,2}");
  enumerate->add_flag("--parabolic", cfg.parabolic, "Only bottom composition (N)");
  enumerate->add_flag("--type-a", cfg.type_a, "Use the sl flavor");
  add_field(enumerate);

  auto* verify = app.add_subcommand("verify", "Cross-check all formulas for every spec up to size N");
  verify->add_option("N", cfg.n, "Largest size")->required();
  add_field(verify);

  auto* render = app.add_subcommand("render", "Emit a diagram as DOT or TikZ");
  render->add_option("spec", cfg.spec_text, "Spec")->required();
  render->add_option("kind", cfg.kind, "meander, weighted, blocks or hasse")
      ->required()
      ->check(CLI::IsMember({"meander", "weighted", "blocks", "hasse"}));
  auto* dot = render->add_flag("--dot", cfg.dot, "Graphviz DOT (default)");
  render->add_flag("--tikz", cfg.tikz, "TikZ")->excludes(dot);
  render->add_flag("--type-a", cfg.type_a, "Use the sl flavor");
  render->add_option("--out", cfg.out_path, "Write output to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << e.what() << '\n';
    return kExitUsage;
  }

  if (analyze->parsed()) cfg.command = Command::Analyze;
  if (enumerate->parsed()) cfg.command = Command::Enumerate;
  if (verify->parsed()) cfg.command = Command::Verify;
  if (render->parsed()) cfg.command = Command::Render;

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "cannot open " << cfg.out_path << '\n';
      return kExitUsage;
    }
    sink = &file;
  }

  try {
    switch (cfg.command) {
      case Command::Analyze: return cmd_analyze(cfg, *sink, err);
      case Command::Enumerate: return cmd_enumerate(cfg, *sink, err);
      case Command::Verify: return cmd_verify(cfg, *sink, err);
      case Command::Render: return cmd_render(cfg, *sink);
    }
  } catch (const SumMismatch& e) {
    err << "SumMismatch: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "ParseError: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace seaweed::cli
