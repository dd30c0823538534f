#pragma once

// Edge-weighted meander. Blocks are processed top row first, then bottom
// row, each left to right. Inside a block B the still-unweighted vertices
// are split by the opposite row's blocks into V_1..V_l:
//   l == 1: every remaining arc of B gets weight 0;
//   l  > 1: the m = min(|V_1|,|V_l|) outermost remaining arcs get weight
//           max(|V_1|,|V_l|), and the round repeats on what is left.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "meander.hpp"

namespace seaweed {

class WeightedMeander {
 public:
  WeightedMeander(Meander base, std::map<Edge, int> weights)
      : base_(std::move(base)), weights_(std::move(weights)) {
    if (weights_.size() != base_.edge_count())
      throw std::logic_error("weighted meander: weight count differs from edge count");
    for (const auto& [e, w] : weights_) {
      if (!base_.has_edge(e)) throw std::logic_error("weighted meander: weight on a missing edge");
      if (w < 0) throw std::logic_error("weighted meander: negative weight");
    }
  }

  const Meander& base() const { return base_; }
  const std::map<Edge, int>& weights() const { return weights_; }
  int weight(const Edge& e) const { return weights_.at(e); }

 private:
  Meander base_;
  std::map<Edge, int> weights_;
};

namespace detail {

inline void weigh_block(const Meander& base, Side side, const Interval& block,
                        const std::vector<Interval>& opposite, std::map<Edge, int>& weights) {
  std::vector<int> remaining;
  for (int v = block.lo; v <= block.hi; ++v) remaining.push_back(v);

  // Each round removes at least one vertex from each end.
  int fuel = block.size();
  while (remaining.size() >= 2) {
    if (fuel-- <= 0) throw std::logic_error("weighting did not terminate");

    // Partition of the remaining vertices by the opposite row's blocks.
    std::vector<std::vector<int>> parts;
    std::size_t current = opposite.size();
    for (int v : remaining) {
      std::size_t owner = 0;
      while (!opposite[owner].contains(v)) ++owner;
      if (owner != current) {
        parts.emplace_back();
        current = owner;
      }
      parts.back().push_back(v);
    }

    if (parts.size() == 1) {
      for (std::size_t k = 0; k < remaining.size() / 2; ++k) {
        Edge e{side, remaining[k], remaining[remaining.size() - 1 - k]};
        if (!base.has_edge(e)) throw std::logic_error("weighting: arc missing from meander");
        weights[e] = 0;
      }
      return;
    }

    const auto& first = parts.front();
    const auto& last = parts.back();
    const int big = static_cast<int>(std::max(first.size(), last.size()));
    const std::size_t m = std::min(first.size(), last.size());
    for (std::size_t k = 0; k < m; ++k) {
      Edge e{side, first[k], last[last.size() - 1 - k]};
      if (!base.has_edge(e)) throw std::logic_error("weighting: arc missing from meander");
      weights[e] = big;
    }
    remaining.erase(remaining.end() - static_cast<std::ptrdiff_t>(m), remaining.end());
    remaining.erase(remaining.begin(), remaining.begin() + static_cast<std::ptrdiff_t>(m));
  }
}

}  // namespace detail

inline WeightedMeander build_weighted(const SeaweedSpec& s) {
  Meander base = build_meander(s);
  const auto top = blocks(s.top());
  const auto bottom = blocks(s.bottom());
  std::map<Edge, int> weights;
  for (const auto& b : top) detail::weigh_block(base, Side::Top, b, bottom, weights);
  for (const auto& b : bottom) detail::weigh_block(base, Side::Bottom, b, top, weights);
  return WeightedMeander(std::move(base), std::move(weights));
}

inline std::int64_t total_weight(const WeightedMeander& wm) {
  std::int64_t t = 0;
  for (const auto& [e, w] : wm.weights()) t += w;
  return t;
}

}  // namespace seaweed
