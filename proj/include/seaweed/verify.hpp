#pragma once

// Cross-checks every formula against the matrix oracle or an alternative
// formula over all specs up to a given size.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "block_poset.hpp"
#include "enumerate.hpp"
#include "invariants.hpp"
#include "matrix_oracle.hpp"
#include "meander.hpp"
#include "poset.hpp"
#include "weighted_meander.hpp"

namespace seaweed {

/// Randomized oracle runs that disagree with the formula are repeated with
/// 16 trials, first over the configured prime and then over a second one.
/// Returns the value of the last run made.
inline std::int64_t oracle_with_escalation(std::int64_t expected, const FieldConfig& cfg,
                                           const std::function<std::int64_t(const FieldConfig&)>& oracle) {
  std::int64_t got = oracle(cfg);
  if (got == expected) return got;
  FieldConfig more = cfg;
  more.trials = std::max(cfg.trials, 16);
  got = oracle(more);
  if (got == expected) return got;
  more.prime = cfg.prime == kSecondPrime ? kDefaultPrime : kSecondPrime;
  return oracle(more);
}

/// full_report with the oracle section, rerun under the escalation policy
/// while the oracle disagrees with the formulas.
inline InvariantReport report_with_escalation(const SeaweedSpec& s, const FieldConfig& cfg) {
  auto r = full_report(s, true, cfg);
  if (r.oracle_agrees()) return r;
  FieldConfig more = cfg;
  more.trials = std::max(cfg.trials, 16);
  r.oracle = oracle_section(s, more);
  if (r.oracle_agrees()) return r;
  more.prime = cfg.prime == kSecondPrime ? kDefaultPrime : kSecondPrime;
  r.oracle = oracle_section(s, more);
  return r;
}

struct CheckTally {
  std::string name;
  std::int64_t passed = 0;
  std::int64_t failed = 0;
};

struct Mismatch {
  std::string check;
  std::string subject;
  std::int64_t formula = 0;
  std::int64_t other = 0;
};

struct VerifySummary {
  std::vector<CheckTally> tallies;
  std::vector<Mismatch> mismatches;

  bool ok() const { return mismatches.empty(); }

  void record(const std::string& check, const std::string& subject, std::int64_t formula, std::int64_t other) {
    auto it = std::find_if(tallies.begin(), tallies.end(), [&](const CheckTally& t) { return t.name == check; });
    if (it == tallies.end()) it = tallies.insert(tallies.end(), CheckTally{check});
    if (formula == other) {
      ++it->passed;
    } else {
      ++it->failed;
      mismatches.push_back({check, subject, formula, other});
    }
  }

  void record_bool(const std::string& check, const std::string& subject, bool holds) {
    record(check, subject, 1, holds ? 1 : 0);
  }
};

inline constexpr const char* kCheckNames[] = {
    "seaweed-index",  "central-gaps", "nilradical-index", "center-dim",       "nilradical-structure",
    "lower-bound",    "breadth",      "poset-index",      "weight-sum",       "in-out-roundtrip",
    "chain-recursion"};

/// Whether gluing the in/out decomposition of each component of P_s gives
/// back that component.
inline bool in_out_roundtrip_holds(const SeaweedSpec& s) {
  const auto bd = build_block_diagram(s);
  const Poset ps = poset_from_diagram(bd);
  const auto comps = bd.components();
  const auto decs = decompose_in_out(bd);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    std::vector<int> elements;
    for (int v = bd.blocks[comps[i].first].lo; v <= bd.blocks[comps[i].second].hi; ++v) elements.push_back(v);
    if (!poset_isomorphic(glue_in_out(decs[i]), ps.induced(elements))) return false;
  }
  return true;
}

/// Every check on one spec. The oracle checks are skipped when `with_oracle`
/// is false.
inline void verify_spec(const SeaweedSpec& s, const FieldConfig& cfg, bool with_oracle, VerifySummary& out) {
  const std::string name = to_string(s);
  const auto report = full_report(s);
  const std::int64_t sl = s.is_sl() ? 1 : 0;

  out.record("central-gaps", name, report.n_central, count_central_by_gaps(build_meander(s)));
  out.record_bool("lower-bound", name, report.index_nilradical >= report.lower_bound);

  if (with_oracle) {
    const auto sw = seaweed_basis(s);
    const auto nil = nilradical_basis(s);
    out.record("seaweed-index", name, report.index_seaweed,
               oracle_with_escalation(report.index_seaweed, cfg, [&](const FieldConfig& c) {
                 return static_cast<std::int64_t>(index_randomized(sw, c));
               }));
    out.record("nilradical-index", name, report.index_nilradical,
               oracle_with_escalation(report.index_nilradical, cfg, [&](const FieldConfig& c) {
                 return static_cast<std::int64_t>(index_randomized(nil, c));
               }));
    out.record("center-dim", name, report.n_central - sl,
               oracle_with_escalation(report.n_central - sl, cfg, [&](const FieldConfig& c) {
                 return static_cast<std::int64_t>(center_dim_oracle(sw, c.prime));
               }));
    out.record_bool("nilradical-structure", name, is_ideal(nil, sw, cfg.prime) && is_nilpotent(nil, cfg.prime));
    out.record("breadth", name, report.breadth_seaweed,
               oracle_with_escalation(report.breadth_seaweed, cfg, [&](const FieldConfig& c) {
                 return static_cast<std::int64_t>(breadth_randomized(sw, c));
               }));
  }

  if (s.is_sl()) return;
  const Poset ps = poset_from_diagram(build_block_diagram(s));
  const std::int64_t poset_index = index_nilpotent_poset(ps);
  out.record("weight-sum", name, report.total_weight, poset_index);
  out.record_bool("in-out-roundtrip", name, in_out_roundtrip_holds(s));
  if (with_oracle) {
    const auto pb = poset_algebra_basis(ps);
    out.record("poset-index", name, poset_index, oracle_with_escalation(poset_index, cfg, [&](const FieldConfig& c) {
                 return static_cast<std::int64_t>(index_randomized(pb, c));
               }));
  }
}

/// Runs the full matrix over every spec of size 1..max_n in both flavors
/// and every composition of those sizes.
inline VerifySummary verify_all(int max_n, const FieldConfig& cfg, bool with_oracle = true) {
  VerifySummary out;
  for (const char* check : kCheckNames) out.tallies.push_back(CheckTally{check});
  for (int n = 1; n <= max_n; ++n) {
    for (Flavor flavor : {Flavor::GL, Flavor::SL})
      for_each_spec(n, EnumerationFilter{.flavor = flavor},
                    [&](const SeaweedSpec& s) { verify_spec(s, cfg, with_oracle, out); });
    for_each_composition(n, [&](const Composition& c) {
      out.record("chain-recursion", to_string(c), index_chain_block_recursive(c),
                 index_nilpotent_poset(chain_block_poset(c)));
    });
  }
  return out;
}

}  // namespace seaweed
