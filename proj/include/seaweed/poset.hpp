#pragma once

// Finite posets on {1..n} stored as the full strict relation.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "notation.hpp"

namespace seaweed {

class PosetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Poset {
 public:
  Poset() = default;

  /// Transitive closure of `relations`; throws PosetError if it has a cycle.
  Poset(int size, const std::vector<std::pair<int, int>>& relations) : n_(size), less_(cells(size), 0) {
    if (size < 0) throw PosetError("negative poset size");
    for (auto [p, q] : relations) {
      if (p < 1 || q < 1 || p > n_ || q > n_) throw PosetError("relation outside the ground set");
      at(p, q) = 1;
    }
    // Warshall
    for (int k = 1; k <= n_; ++k)
      for (int i = 1; i <= n_; ++i)
        if (at(i, k))
          for (int j = 1; j <= n_; ++j)
            if (at(k, j)) at(i, j) = 1;
    for (int i = 1; i <= n_; ++i)
      if (at(i, i)) throw PosetError("relation has a cycle");
  }

  int size() const { return n_; }

  /// p strictly below q.
  bool less(int p, int q) const { return less_[index(p, q)] != 0; }
  bool comparable(int p, int q) const { return less(p, q) || less(q, p); }

  std::vector<std::pair<int, int>> relations() const {
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p <= n_; ++p)
      for (int q = 1; q <= n_; ++q)
        if (less(p, q)) out.emplace_back(p, q);
    return out;
  }

  std::int64_t rel_count() const {
    return std::count(less_.begin(), less_.end(), std::uint8_t{1});
  }

  /// |{q : q < p}|
  int down(int p) const {
    int c = 0;
    for (int q = 1; q <= n_; ++q) c += less(q, p);
    return c;
  }

  /// |{q : p < q}|
  int up(int p) const {
    int c = 0;
    for (int q = 1; q <= n_; ++q) c += less(p, q);
    return c;
  }

  /// Subposet on `elements`, relabelled 1..k in the given order.
  Poset induced(const std::vector<int>& elements) const {
    std::vector<std::pair<int, int>> rel;
    for (std::size_t i = 0; i < elements.size(); ++i)
      for (std::size_t j = 0; j < elements.size(); ++j)
        if (less(elements[i], elements[j])) rel.emplace_back(static_cast<int>(i + 1), static_cast<int>(j + 1));
    return Poset(static_cast<int>(elements.size()), rel);
  }

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  static std::size_t cells(int n) { return n > 0 ? static_cast<std::size_t>(n) * n : 0; }
  std::size_t index(int p, int q) const { return static_cast<std::size_t>(p - 1) * n_ + (q - 1); }
  std::uint8_t& at(int p, int q) { return less_[index(p, q)]; }

  int n_ = 0;
  std::vector<std::uint8_t> less_;
};

struct PosetStats {
  std::int64_t rel_count = 0;
  std::vector<int> min_set;
  std::vector<int> max_set;
  std::vector<int> ext_set;
  std::vector<int> down_counts;  // index 0 unused
  std::vector<int> up_counts;    // index 0 unused
  std::vector<std::pair<int, int>> covering_relations;
  std::vector<std::vector<int>> connected_components;
};

inline std::vector<std::pair<int, int>> covering_relations(const Poset& p) {
  std::vector<std::pair<int, int>> out;
  const int n = p.size();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (!p.less(a, b)) continue;
      bool cover = true;
      for (int c = 1; c <= n && cover; ++c)
        if (p.less(a, c) && p.less(c, b)) cover = false;
      if (cover) out.emplace_back(a, b);
    }
  return out;
}

/// Maximal connected subposets, each sorted, ordered by least element.
inline std::vector<std::vector<int>> connected_components(const Poset& p) {
  const int n = p.size();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      if (p.less(a, b)) parent[find(a)] = find(b);
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n + 1, -1);
  for (int v = 1; v <= n; ++v) {
    int r = find(v);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(v);
  }
  return out;
}

inline PosetStats poset_stats(const Poset& p) {
  PosetStats s;
  const int n = p.size();
  s.rel_count = p.rel_count();
  s.down_counts.assign(n + 1, 0);
  s.up_counts.assign(n + 1, 0);
  for (int v = 1; v <= n; ++v) {
    s.down_counts[v] = p.down(v);
    s.up_counts[v] = p.up(v);
    if (s.down_counts[v] == 0) s.min_set.push_back(v);
    if (s.up_counts[v] == 0) s.max_set.push_back(v);
    if (s.down_counts[v] == 0 || s.up_counts[v] == 0) s.ext_set.push_back(v);
  }
  s.covering_relations = covering_relations(p);
  s.connected_components = connected_components(p);
  return s;
}

/// |Rel(P)| - 2 * sum over non-extremal p of min(D(p), U(p)).
inline std::int64_t index_nilpotent_poset(const Poset& p) {
  std::int64_t sum = 0;
  for (int v = 1; v <= p.size(); ++v) {
    int d = p.down(v), u = p.up(v);
    if (d > 0 && u > 0) sum += std::min(d, u);
  }
  return p.rel_count() - 2 * sum;
}

/// Layered poset P(a_1,...,a_l): layer j is an antichain of size a_j and
/// lies below every later layer.
inline Poset chain_block_poset(const Composition& c) {
  const auto layers = blocks(c);
  std::vector<std::pair<int, int>> covers;
  for (std::size_t j = 0; j + 1 < layers.size(); ++j)
    for (int p = layers[j].lo; p <= layers[j].hi; ++p)
      for (int q = layers[j + 1].lo; q <= layers[j + 1].hi; ++q) covers.emplace_back(p, q);
  return Poset(c.sum(), covers);
}

/// Index of the layered poset algebra by peeling the outer layers:
/// m = 1 gives 0, m = 2 gives a_1 a_2, otherwise a_1 a_m plus the index of
/// the shortened composition.
inline std::int64_t index_chain_block_recursive(const Composition& c) {
  std::vector<std::int64_t> a(c.parts().begin(), c.parts().end());
  std::int64_t acc = 0;
  for (;;) {
    const std::size_t m = a.size();
    if (m == 1) return acc;
    if (m == 2) return acc + a[0] * a[1];
    const std::int64_t first = a.front(), last = a.back();
    acc += first * last;
    if (first == last) {
      a.pop_back();
      a.erase(a.begin());
    } else if (first > last) {
      a.pop_back();
      a.front() = first - last;
    } else {
      a.erase(a.begin());
      a.back() = last - first;
    }
  }
}

class SizeLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kIsomorphismCap = 14;

namespace detail {

struct IsoSearch {
  const Poset& a;
  const Poset& b;
  std::vector<std::int64_t> sig_a, sig_b;
  std::vector<int> map;   // a-element -> b-element
  std::vector<bool> used;

  IsoSearch(const Poset& pa, const Poset& pb) : a(pa), b(pb) {}

  static std::vector<int> heights(const Poset& p) {
    std::vector<int> h(p.size() + 1, 0);
    // Height = length of the longest chain ending at v; elements sorted by down-count
    // form a linear extension.
    std::vector<int> order(p.size());
    std::iota(order.begin(), order.end(), 1);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return p.down(x) < p.down(y); });
    for (int v : order)
      for (int w = 1; w <= p.size(); ++w)
        if (p.less(w, v)) h[v] = std::max(h[v], h[w] + 1);
    return h;
  }

  static std::vector<std::int64_t> signatures(const Poset& p) {
    auto h = heights(p);
    std::vector<std::int64_t> s(p.size() + 1, 0);
    for (int v = 1; v <= p.size(); ++v)
      s[v] = (static_cast<std::int64_t>(p.down(v)) * 64 + p.up(v)) * 64 + h[v];
    return s;
  }

  bool extend(int v) {
    if (v > a.size()) return true;
    for (int w = 1; w <= b.size(); ++w) {
      if (used[w] || sig_a[v] != sig_b[w]) continue;
      bool ok = true;
      for (int u = 1; u < v && ok; ++u)
        ok = a.less(u, v) == b.less(map[u], w) && a.less(v, u) == b.less(w, map[u]);
      if (!ok) continue;
      map[v] = w;
      used[w] = true;
      if (extend(v + 1)) return true;
      used[w] = false;
    }
    return false;
  }

  bool run() {
    sig_a = signatures(a);
    sig_b = signatures(b);
    auto sa = sig_a, sb = sig_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
    map.assign(a.size() + 1, 0);
    used.assign(b.size() + 1, false);
    return extend(1);
  }
};

}  // namespace detail

/// Order isomorphism by backtracking over (down, up, height) classes.
inline bool poset_isomorphic(const Poset& p, const Poset& q, int cap = kIsomorphismCap) {
  if (p.size() > cap || q.size() > cap)
    throw SizeLimit("isomorphism check limited to " + std::to_string(cap) + " elements");
  if (p.size() != q.size() || p.rel_count() != q.rel_count()) return false;
  return detail::IsoSearch(p, q).run();
}

}  // namespace seaweed
