// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "seaweed.hpp"

using namespace seaweed;

namespace {

// Wall-clock budgets in seconds; results are exact (zero tolerance).
constexpr double kFixtureBudget = 1.0;
constexpr double kOracleBudget = 120.0;
constexpr double kPosetBudget = 30.0;
constexpr double kBoundBudget = 30.0;
constexpr double kUnbudgeted = 0.0;

constexpr int kOracleMaxN = 6;
constexpr int kRecursionMaxSum = 9;
constexpr int kWeightMaxN = 8;
constexpr int kBoundMaxN = 8;
constexpr int kTightMaxN = 10;
constexpr int kClosedFormMaxN = 9;
constexpr int kBreadthMaxN = 5;
constexpr int kRoundTripMaxN = 7;
constexpr std::size_t kShownFailures = 5;

class Criterion {
 public:
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (shown_.size() < kShownFailures) shown_.push_back(what);
  }

  template <class T>
  void expect_eq(const T& got, const T& want, const std::string& what) {
    check(got == want, what + ": got " + std::to_string(got) + ", want " + std::to_string(want));
  }

  bool report(double seconds, double budget) const {
    const bool in_time = budget <= 0 || seconds <= budget;
    const bool ok = failures_ == 0 && in_time;
    std::printf("%s %s: %lld checks, %lld failed, %.2fs", ok ? "PASS" : "FAIL", name_.c_str(),
                static_cast<long long>(checks_), static_cast<long long>(failures_), seconds);
    if (budget > 0) std::printf(" (budget %.0fs)", budget);
    std::printf("\n");
    for (const auto& s : shown_) std::printf("    %s\n", s.c_str());
    if (failures_ > static_cast<std::int64_t>(shown_.size()))
      std::printf("    ... %lld more\n", static_cast<long long>(failures_ - static_cast<std::int64_t>(shown_.size())));
    return ok;
  }

 private:
  std::string name_;
  std::int64_t checks_ = 0;
  std::int64_t failures_ = 0;
  std::vector<std::string> shown_;
};

bool timed(const std::string& name, double budget, const std::function<void(Criterion&)>& body) {
  Criterion c(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return c.report(elapsed.count(), budget);
}

void for_each_spec_both(int max_n, const std::function<void(const SeaweedSpec&)>& f) {
  for (int n = 1; n <= max_n; ++n)
    for (Flavor flavor : {Flavor::GL, Flavor::SL}) for_each_spec(n, {.flavor = flavor}, f);
}

void fixtures(Criterion& c) {
  struct Fixture {
    const char* spec;
    std::int64_t cen, weight, ind_gl, ind_sl;
  };
  for (const auto& f : {Fixture{"p 2|3|1|2|2/7|3", 1, 6, 7, 6}, Fixture{"p 3|3|5|2/6|2|1|2|2", 3, 13, 16, 15}}) {
    const auto s = parse_spec(f.spec);
    c.expect_eq<std::int64_t>(central_components(s).size(), f.cen, std::string(f.spec) + " |Cen|");
    c.expect_eq(total_weight(build_weighted(s)), f.weight, std::string(f.spec) + " total weight");
    c.expect_eq(index_nilradical(s), f.ind_gl, std::string(f.spec) + " ind n");
    c.expect_eq(index_nilradical(s.with_flavor(Flavor::SL)), f.ind_sl, std::string(f.spec) + " type-A ind n");
  }

  using W = std::map<Edge, int>;
  const W five_blocks{{{Side::Bottom, 1, 7}, 2}, {{Side::Bottom, 2, 6}, 1}, {{Side::Bottom, 3, 5}, 0},
               {{Side::Bottom, 8, 10}, 2}, {{Side::Top, 1, 2}, 0},     {{Side::Top, 3, 5}, 0},
               {{Side::Top, 7, 8}, 1},     {{Side::Top, 9, 10}, 0}};
  c.check(build_weighted(parse_spec("p 2|3|1|2|2/7|3")).weights() == five_blocks, "per-edge weights of p 2|3|1|2|2/7|3");
  W nested;
  for (const auto& e : build_meander(parse_spec("p 3|3|5|2/6|2|1|2|2")).edges()) nested[e] = 0;
  for (auto [lo, hi] : {std::pair{1, 6}, {2, 5}, {3, 4}}) nested[{Side::Bottom, lo, hi}] = 3;
  for (auto [lo, hi] : {std::pair{7, 11}, {8, 10}}) nested[{Side::Top, lo, hi}] = 2;
  c.check(build_weighted(parse_spec("p 3|3|5|2/6|2|1|2|2")).weights() == nested,
          "per-edge weights of p 3|3|5|2/6|2|1|2|2");

  c.check(central_components(parse_spec("p 2|2|3|1|1|3/4|3|5")).intervals ==
              std::vector<Interval>{{1, 4}, {5, 7}, {8, 12}},
          "central components of p 2|2|3|1|1|3/4|3|5");

  const auto bd = build_block_diagram(parse_spec("p 2|3|1|2|2/7|3"));
  c.check(bd.arrows == std::vector<Arrow>{Arrow::Forward, Arrow::Forward, Arrow::Forward, Arrow::Backward,
                                          Arrow::Forward},
          "arrows of p 2|3|1|2|2/7|3");
  c.check(bd.blocks == std::vector<Interval>{{1, 2}, {3, 5}, {6, 6}, {7, 7}, {8, 8}, {9, 10}},
          "blocks of p 2|3|1|2|2/7|3");
  std::vector<std::pair<int, int>> rel;
  auto below = [&](std::vector<int> lo, std::vector<int> hi) {
    for (int a : lo)
      for (int b : hi) rel.emplace_back(a, b);
  };
  below({1, 2}, {3, 4, 5});
  below({3, 4, 5}, {6});
  below({6}, {7});
  below({8}, {7});
  below({8}, {9, 10});
  c.check(poset_from_diagram(bd) == Poset(10, rel), "strict order of P_s for p 2|3|1|2|2/7|3");

  c.expect_eq<std::int64_t>(index_nilradical(parse_spec("p 1|2|1/4")), 2, "ind n(p 1|2|1/4)");
  c.expect_eq(index_seaweed(parse_spec("p 1|2|1/4")), 3, "ind s(p 1|2|1/4)");
  c.expect_eq<std::int64_t>(index_nilradical(parse_spec("p 1|2/2|1")), 3, "ind n(p 1|2/2|1)");
  c.expect_eq(index_seaweed(parse_spec("p 1|2/2|1")), 2, "ind s(p 1|2/2|1)");
}

void oracle_equivalence(Criterion& c) {
  const FieldConfig cfg{};
  for_each_spec_both(kOracleMaxN, [&](const SeaweedSpec& s) {
    const auto name = to_string(s);
    const auto sw = seaweed_basis(s);
    const auto nil = nilradical_basis(s);
    const std::int64_t ind_s = index_seaweed(s);
    const std::int64_t ind_n = index_nilradical(s);
    const std::int64_t center = static_cast<std::int64_t>(central_components(s).size()) - (s.is_sl() ? 1 : 0);
    c.expect_eq(oracle_with_escalation(ind_s, cfg, [&](const FieldConfig& k) {
                  return static_cast<std::int64_t>(index_randomized(sw, k));
                }),
                ind_s, name + " seaweed index");
    c.expect_eq(oracle_with_escalation(ind_n, cfg, [&](const FieldConfig& k) {
                  return static_cast<std::int64_t>(index_randomized(nil, k));
                }),
                ind_n, name + " nilradical index");
    c.expect_eq(static_cast<std::int64_t>(center_dim_oracle(sw)), center, name + " center dimension");
    c.check(is_ideal(nil, sw), name + " nilradical is an ideal");
    c.check(is_nilpotent(nil), name + " nilradical is nilpotent");
  });
}

void poset_suite(Criterion& c) {
  const FieldConfig cfg{};
  for (int n = 1; n <= kOracleMaxN; ++n)
    for_each_spec(n, {}, [&](const SeaweedSpec& s) {
      const auto p = poset_from_diagram(build_block_diagram(s));
      const std::int64_t formula = index_nilpotent_poset(p);
      const auto basis = poset_algebra_basis(p);
      c.expect_eq(oracle_with_escalation(formula, cfg, [&](const FieldConfig& k) {
                    return static_cast<std::int64_t>(index_randomized(basis, k));
                  }),
                  formula, to_string(s) + " poset index");
    });
  for (int n = 1; n <= kRecursionMaxSum; ++n)
    for_each_composition(n, [&](const Composition& comp) {
      c.expect_eq(index_chain_block_recursive(comp), index_nilpotent_poset(chain_block_poset(comp)),
                  to_string(comp) + " recursion");
    });
  for (int n = 1; n <= kWeightMaxN; ++n)
    for_each_spec(n, {}, [&](const SeaweedSpec& s) {
      c.expect_eq(total_weight(build_weighted(s)), index_nilpotent_poset(poset_from_diagram(build_block_diagram(s))),
                  to_string(s) + " total weight");
    });
}

void bound_suite(Criterion& c) {
  for_each_spec_both(kBoundMaxN, [&](const SeaweedSpec& s) {
    const auto ind = index_nilradical(s), bound = lower_bound_nilradical(s);
    c.check(ind >= bound, to_string(s) + ": " + std::to_string(ind) + " < bound " + std::to_string(bound));
  });
  for (int n = 1; n <= kTightMaxN; ++n)
    for (bool parabolic : {false, true})
      for (Flavor flavor : {Flavor::GL, Flavor::SL})
        for_each_spec(n, {.flavor = flavor, .parts_le_2 = true, .parabolic = parabolic}, [&](const SeaweedSpec& s) {
          c.expect_eq(index_nilradical(s), lower_bound_nilradical(s), to_string(s) + " tightness");
        });
}

void closed_forms(Criterion& c) {
  for (int n = 1; n <= kClosedFormMaxN; ++n)
    for_each_spec(n, {.flavor = Flavor::SL}, [&](const SeaweedSpec& s) {
      const auto cf = closed_form_special(s);
      if (!cf) return;
      c.expect_eq(index_nilradical(s), cf->value, to_string(s) + " [" + cf->tag + "] ind n");
    });
}

void breadth_suite(Criterion& c) {
  const FieldConfig cfg{};
  for_each_spec_both(kBreadthMaxN, [&](const SeaweedSpec& s) {
    const auto b = seaweed_basis(s);
    const std::int64_t formula = breadth_seaweed(s);
    c.expect_eq(oracle_with_escalation(formula, cfg, [&](const FieldConfig& k) {
                  return static_cast<std::int64_t>(breadth_randomized(b, k));
                }),
                formula, to_string(s) + " breadth");
  });
}

void round_trip(Criterion& c) {
  for (int n = 1; n <= kRoundTripMaxN; ++n)
    for_each_spec(n, {}, [&](const SeaweedSpec& s) { c.check(in_out_roundtrip_holds(s), to_string(s)); });
}

}  // namespace

int main() {
  int failed = 0;
  failed += !timed("1 fixtures", kFixtureBudget, fixtures);
  failed += !timed("2 oracle equivalence N<=6", kOracleBudget, oracle_equivalence);
  failed += !timed("3 poset formulas", kPosetBudget, poset_suite);
  failed += !timed("4 lower bound and tightness", kBoundBudget, bound_suite);
  failed += !timed("5 closed forms N<=9", kUnbudgeted, closed_forms);
  failed += !timed("6 breadth N<=5", kUnbudgeted, breadth_suite);
  failed += !timed("7 in/out round trip N<=7", kUnbudgeted, round_trip);
  std::printf("%d of 7 criteria failed\n", failed);
  return failed;
}
