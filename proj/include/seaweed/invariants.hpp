#pragma once

// Closed formulas tying the meander, weighted meander and poset together,
// plus a per-spec report with an optional matrix cross-check.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "block_poset.hpp"
#include "matrix_oracle.hpp"
#include "meander.hpp"
#include "notation.hpp"
#include "weighted_meander.hpp"

namespace seaweed {

/// |Cen(s)| + total arc weight, minus one for sl.
inline std::int64_t index_nilradical(const SeaweedSpec& s) {
  return static_cast<std::int64_t>(central_components(s).size()) + total_weight(build_weighted(s)) -
         (s.is_sl() ? 1 : 0);
}

/// |E_1(s)| + |Cen(s)|, minus one for sl.
inline std::int64_t lower_bound_nilradical(const SeaweedSpec& s) {
  return static_cast<std::int64_t>(simple_edges(build_meander(s)).size() + central_components(s).size()) -
         (s.is_sl() ? 1 : 0);
}

struct ClosedForm {
  std::string tag;
  std::int64_t value = 0;
  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;
};

/// Literal shape match for sl seaweeds a|b/N, a|b/c|d (value ab) and
/// a|b|c/N (value ac + b|a - c|).
inline std::optional<ClosedForm> closed_form_special(const SeaweedSpec& s) {
  if (!s.is_sl()) return std::nullopt;
  const auto& top = s.top();
  const auto& bottom = s.bottom();
  if (top.size() == 2 && (bottom.size() == 1 || bottom.size() == 2))
    return ClosedForm{"ab", static_cast<std::int64_t>(top[0]) * top[1]};
  if (top.size() == 3 && bottom.size() == 1) {
    const std::int64_t a = top[0], b = top[1], c = top[2];
    return ClosedForm{"ac+b|a-c|", a * c + b * std::llabs(a - c)};
  }
  return std::nullopt;
}

/// dim s - N for gl, dim s - N + 1 for sl.
inline std::int64_t breadth_seaweed(const SeaweedSpec& s) {
  return dim_seaweed(s) - s.n() + (s.is_sl() ? 1 : 0);
}

struct OracleSection {
  std::int64_t index_seaweed_oracle = 0;
  std::int64_t index_nilradical_oracle = 0;
  std::int64_t center_oracle = 0;
  bool nilpotency_ok = false;
  bool ideal_ok = false;
  std::int64_t breadth_oracle = 0;
};

struct InvariantReport {
  SeaweedSpec spec;
  int n = 0;
  std::int64_t dim = 0;
  std::int64_t index_seaweed = 0;
  std::int64_t center_dim = 0;
  std::int64_t n_central = 0;
  std::int64_t total_weight = 0;
  std::int64_t index_nilradical = 0;
  std::int64_t lower_bound = 0;
  std::int64_t e1_count = 0;
  std::int64_t breadth_seaweed = 0;
  std::optional<ClosedForm> closed_form;
  std::optional<OracleSection> oracle;

  /// Whether every oracle value agrees with its formula counterpart.
  bool oracle_agrees() const {
    if (!oracle) return true;
    const auto& o = *oracle;
    return o.index_seaweed_oracle == index_seaweed && o.index_nilradical_oracle == index_nilradical &&
           o.center_oracle == center_dim && o.nilpotency_ok && o.ideal_ok && o.breadth_oracle == breadth_seaweed;
  }
};

class ReportInvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline OracleSection oracle_section(const SeaweedSpec& s, const FieldConfig& cfg) {
  const auto sw = seaweed_basis(s);
  const auto nil = nilradical_basis(s);
  OracleSection o;
  o.index_seaweed_oracle = static_cast<std::int64_t>(index_randomized(sw, cfg));
  o.index_nilradical_oracle = static_cast<std::int64_t>(index_randomized(nil, cfg));
  o.center_oracle = static_cast<std::int64_t>(center_dim_oracle(sw, cfg.prime));
  o.nilpotency_ok = is_nilpotent(nil, cfg.prime);
  o.ideal_ok = is_ideal(nil, sw, cfg.prime);
  o.breadth_oracle = static_cast<std::int64_t>(breadth_randomized(sw, cfg));
  return o;
}

/// All formula values for `s`; with `with_oracle` also the matrix
/// computations. Throws ReportInvariantError if the formulas contradict
/// each other.
inline InvariantReport full_report(const SeaweedSpec& s, bool with_oracle = false, const FieldConfig& cfg = {}) {
  const auto cen = central_components(s);
  const auto weighted = build_weighted(s);
  const std::int64_t sl = s.is_sl() ? 1 : 0;

  const auto n_central = static_cast<std::int64_t>(cen.size());
  InvariantReport r{.spec = s,
                    .n = s.n(),
                    .dim = dim_seaweed(s),
                    .index_seaweed = index_seaweed(s),
                    .center_dim = n_central - sl,
                    .n_central = n_central,
                    .total_weight = total_weight(weighted),
                    .index_nilradical = index_nilradical(s),
                    .lower_bound = lower_bound_nilradical(s),
                    .e1_count = static_cast<std::int64_t>(simple_edges(weighted.base()).size()),
                    .breadth_seaweed = breadth_seaweed(s),
                    .closed_form = closed_form_special(s),
                    .oracle = std::nullopt};

  if (r.index_nilradical != r.n_central + r.total_weight - sl)
    throw ReportInvariantError("nilradical index disagrees with |Cen| + weight for " + to_string(s));
  if (r.index_nilradical < r.lower_bound)
    throw ReportInvariantError("nilradical index below the edge bound for " + to_string(s));

  if (with_oracle) r.oracle = oracle_section(s, cfg);
  return r;
}

inline nlohmann::ordered_json to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["spec"] = to_string(r.spec);
  j["N"] = r.n;
  j["dim"] = r.dim;
  j["index_seaweed"] = r.index_seaweed;
  j["center_dim"] = r.center_dim;
  j["n_central"] = r.n_central;
  j["total_weight"] = r.total_weight;
  j["index_nilradical"] = r.index_nilradical;
  j["lower_bound"] = r.lower_bound;
  j["e1_count"] = r.e1_count;
  j["breadth_seaweed"] = r.breadth_seaweed;
  if (r.closed_form) j["closed_form"] = {{"tag", r.closed_form->tag}, {"value", r.closed_form->value}};
  if (r.oracle) {
    const auto& o = *r.oracle;
    j["oracle"] = {{"index_seaweed_oracle", o.index_seaweed_oracle},
                   {"index_nilradical_oracle", o.index_nilradical_oracle},
                   {"center_oracle", o.center_oracle},
                   {"nilpotency_ok", o.nilpotency_ok},
                   {"ideal_ok", o.ideal_ok},
                   {"breadth_oracle", o.breadth_oracle}};
  }
  return j;
}

}  // namespace seaweed
