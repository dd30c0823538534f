#pragma once

// Exhaustive enumeration of compositions and seaweed specs.

#include <functional>
#include <stdexcept>
#include <vector>

#include "notation.hpp"

namespace seaweed {

struct EnumerationFilter {
  Flavor flavor = Flavor::GL;
  bool parts_le_2 = false;  // parts in {1, 2}; with `parabolic` only the top is restricted
  bool parabolic = false;   // bottom composition is (N)
};

namespace detail {

inline void compositions_rec(int remaining, int max_part, std::vector<int>& prefix,
                             const std::function<void(const Composition&)>& visit) {
  if (remaining == 0) {
    visit(Composition(prefix));
    return;
  }
  for (int first = 1; first <= remaining && first <= max_part; ++first) {
    prefix.push_back(first);
    compositions_rec(remaining - first, max_part, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Visits every composition of n in lexicographic order of its parts.
/// Parts larger than `max_part` are skipped.
inline void for_each_composition(int n, const std::function<void(const Composition&)>& visit, int max_part = 0) {
  if (n < 1) throw std::invalid_argument("compositions need a positive sum");
  std::vector<int> prefix;
  detail::compositions_rec(n, max_part > 0 ? max_part : n, prefix, visit);
}

inline std::vector<Composition> compositions(int n, int max_part = 0) {
  std::vector<Composition> out;
  for_each_composition(n, [&](const Composition& c) { out.push_back(c); }, max_part);
  return out;
}

/// Visits every spec of size n passing `filter`, ordered by top then bottom
/// composition.
inline void for_each_spec(int n, const EnumerationFilter& filter, const std::function<void(const SeaweedSpec&)>& visit) {
  const int max_part = filter.parts_le_2 ? 2 : 0;
  const auto tops = compositions(n, max_part);
  std::vector<Composition> bottoms;
  if (filter.parabolic)
    bottoms.push_back(Composition{n});
  else
    bottoms = compositions(n, max_part);
  for (const auto& top : tops)
    for (const auto& bottom : bottoms) visit(SeaweedSpec(top, bottom, filter.flavor));
}

}  // namespace seaweed
