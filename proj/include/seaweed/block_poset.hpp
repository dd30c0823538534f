#pragma once

// Directed block diagram of a seaweed and the poset P_s it induces.
//
// The line 1..N is cut after every partial sum of either composition. The
// resulting blocks C_1..C_l are joined left to right by arrows: a cut made
// only by the top composition points C_i -> C_{i+1}, a cut made only by the
// bottom one points C_{i+1} -> C_i, and a cut made by both leaves no arrow.
// p < q in P_s iff a directed path leads from p's block to q's block.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "notation.hpp"
#include "poset.hpp"

namespace seaweed {

enum class Arrow { Forward, Backward, None };

struct BlockDiagram {
  std::vector<Interval> blocks;
  std::vector<Arrow> arrows;  // arrows[i] sits between blocks[i] and blocks[i+1]

  int n() const { return blocks.empty() ? 0 : blocks.back().hi; }

  /// Maximal runs of blocks joined by arrows, as [first, last] block indices.
  std::vector<std::pair<std::size_t, std::size_t>> components() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i] == Arrow::None) {
        out.emplace_back(start, i);
        start = i + 1;
      }
    out.emplace_back(start, blocks.size() - 1);
    return out;
  }
};

inline BlockDiagram build_block_diagram(const SeaweedSpec& s) {
  const auto ps_top = partial_sums(s.top());
  const auto ps_bottom = partial_sums(s.bottom());
  BlockDiagram bd;
  int lo = 1;
  for (int cut = 1; cut < s.n(); ++cut) {
    const bool top = ps_top.contains(cut), bottom = ps_bottom.contains(cut);
    if (!top && !bottom) continue;
    bd.blocks.push_back({lo, cut});
    bd.arrows.push_back(top && bottom ? Arrow::None : top ? Arrow::Forward : Arrow::Backward);
    lo = cut + 1;
  }
  bd.blocks.push_back({lo, s.n()});
  return bd;
}

inline Poset poset_from_diagram(const BlockDiagram& bd) {
  std::vector<std::pair<int, int>> covers;
  for (std::size_t i = 0; i < bd.arrows.size(); ++i) {
    if (bd.arrows[i] == Arrow::None) continue;
    const auto& below = bd.arrows[i] == Arrow::Forward ? bd.blocks[i] : bd.blocks[i + 1];
    const auto& above = bd.arrows[i] == Arrow::Forward ? bd.blocks[i + 1] : bd.blocks[i];
    for (int p = below.lo; p <= below.hi; ++p)
      for (int q = above.lo; q <= above.hi; ++q) covers.emplace_back(p, q);
  }
  return Poset(bd.n(), covers);
}

enum class Orientation { In, Out };

inline const char* to_string(Orientation o) { return o == Orientation::In ? "in" : "out"; }

/// A connected P_s written as layered posets P(c) glued alternately along
/// shared maximal and minimal layers. Every segment lists its layers from
/// the minimal one upward. Out: segments 1,2 share their maximal layer,
/// 2,3 their minimal layer, and so on; In starts with a shared minimal layer.
struct InOutDecomposition {
  Orientation orientation = Orientation::Out;
  std::vector<Composition> segments;

  friend bool operator==(const InOutDecomposition&, const InOutDecomposition&) = default;
};

class GlueError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One decomposition per arrow-connected component, left to right.
inline std::vector<InOutDecomposition> decompose_in_out(const BlockDiagram& bd) {
  std::vector<InOutDecomposition> out;
  for (auto [first, last] : bd.components()) {
    InOutDecomposition d;
    if (first == last) {
      d.orientation = Orientation::Out;
      d.segments.push_back(Composition{bd.blocks[first].size()});
      out.push_back(std::move(d));
      continue;
    }
    d.orientation = bd.arrows[first] == Arrow::Forward ? Orientation::Out : Orientation::In;
    std::size_t run_start = first;
    while (run_start < last) {
      const Arrow dir = bd.arrows[run_start];
      std::size_t run_end = run_start + 1;
      while (run_end < last && bd.arrows[run_end] == dir) ++run_end;
      std::vector<int> layers;
      for (std::size_t i = run_start; i <= run_end; ++i) layers.push_back(bd.blocks[i].size());
      if (dir == Arrow::Backward) std::reverse(layers.begin(), layers.end());
      d.segments.emplace_back(std::move(layers));
      run_start = run_end;
    }
    out.push_back(std::move(d));
  }
  return out;
}

/// Rebuilds the glued poset. Elements are numbered along the line the
/// segments would occupy in a block diagram, so decompose/glue round-trips
/// exactly up to that labelling.
inline Poset glue_in_out(const InOutDecomposition& d) {
  if (d.segments.empty()) throw GlueError("no segments to glue");
  // Run j (0-based) points forward when it starts at a source.
  auto forward = [&](std::size_t j) { return (d.orientation == Orientation::Out) == (j % 2 == 0); };

  for (std::size_t j = 0; j + 1 < d.segments.size(); ++j) {
    const auto& lhs = d.segments[j].parts();
    const auto& rhs = d.segments[j + 1].parts();
    if (lhs.size() < 2 || rhs.size() < 2) throw GlueError("glued segments need two layers");
    // A forward run ends at a sink (its maximal layer); a backward run ends
    // at a source (its minimal layer).
    const bool shared_max = forward(j);
    const int l = shared_max ? lhs.back() : lhs.front();
    const int r = shared_max ? rhs.back() : rhs.front();
    if (l != r)
      throw GlueError("segments " + std::to_string(j + 1) + " and " + std::to_string(j + 2) +
                      " disagree on the glued layer size");
  }

  // Lay the blocks out along the line; consecutive runs share a block.
  std::vector<int> sizes;
  std::vector<Arrow> arrows;
  for (std::size_t j = 0; j < d.segments.size(); ++j) {
    std::vector<int> layers = d.segments[j].parts();
    const bool fwd = forward(j);
    if (!fwd) std::reverse(layers.begin(), layers.end());
    if (j == 0) sizes.push_back(layers.front());
    for (std::size_t i = 1; i < layers.size(); ++i) {
      sizes.push_back(layers[i]);
      arrows.push_back(fwd ? Arrow::Forward : Arrow::Backward);
    }
  }

  BlockDiagram bd;
  int lo = 1;
  for (int sz : sizes) {
    bd.blocks.push_back({lo, lo + sz - 1});
    lo += sz;
  }
  bd.arrows = std::move(arrows);

  // Each run contributes every pair of its layers in order.
  std::vector<std::pair<int, int>> rel;
  std::size_t block = 0;
  for (std::size_t j = 0; j < d.segments.size(); ++j) {
    const std::size_t len = d.segments[j].size();
    for (std::size_t x = block; x < block + len; ++x)
      for (std::size_t y = x + 1; y < block + len; ++y) {
        const auto& lower = forward(j) ? bd.blocks[x] : bd.blocks[y];
        const auto& upper = forward(j) ? bd.blocks[y] : bd.blocks[x];
        for (int p = lower.lo; p <= lower.hi; ++p)
          for (int q = upper.lo; q <= upper.hi; ++q) rel.emplace_back(p, q);
      }
    block += len - 1;
  }
  return Poset(bd.n(), rel);
}

}  // namespace seaweed
