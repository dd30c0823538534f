#pragma once

// Explicit matrix Lie algebras over Z/pZ. Nothing here uses the meander
// formulas: index, center, nilpotency, ideal membership and breadth are
// computed straight from a basis and the commutator.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "meander.hpp"
#include "modular.hpp"
#include "notation.hpp"
#include "poset.hpp"

namespace seaweed {

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1
inline constexpr std::uint64_t kSecondPrime = 2147483629;   // 2^31 - 19

struct Elementary {
  int row = 1;
  int col = 1;
  friend bool operator==(const Elementary&, const Elementary&) = default;
};

struct Diagonal {
  std::vector<std::int64_t> coeffs;  // length N, entry i-1 is the (i,i) coefficient
  friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

struct MatrixEntry {
  int row;
  int col;
  std::int64_t value;
};

/// Sparse integer matrix, 1-based (row, col) keys, zero entries omitted.
using SparseMatrix = std::map<std::pair<int, int>, std::int64_t>;

class BasisElement {
 public:
  BasisElement(Elementary e) : kind_(e) {}
  BasisElement(Diagonal d) : kind_(std::move(d)) {}

  static BasisElement elementary(int row, int col) { return Elementary{row, col}; }
  static BasisElement diagonal(std::vector<std::int64_t> coeffs) { return Diagonal{std::move(coeffs)}; }

  bool is_elementary() const { return std::holds_alternative<Elementary>(kind_); }
  const Elementary& as_elementary() const { return std::get<Elementary>(kind_); }
  const Diagonal& as_diagonal() const { return std::get<Diagonal>(kind_); }

  std::vector<MatrixEntry> entries() const {
    if (is_elementary()) {
      const auto& e = as_elementary();
      return {{e.row, e.col, 1}};
    }
    std::vector<MatrixEntry> out;
    const auto& c = as_diagonal().coeffs;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) out.push_back({static_cast<int>(i + 1), static_cast<int>(i + 1), c[i]});
    return out;
  }

  friend bool operator==(const BasisElement&, const BasisElement&) = default;

 private:
  std::variant<Elementary, Diagonal> kind_;
};

/// Exact commutator xy - yx.
inline SparseMatrix bracket(const BasisElement& x, const BasisElement& y) {
  SparseMatrix out;
  const auto ex = x.entries(), ey = y.entries();
  // [E_ij, E_kl] = d_jk E_il - d_li E_kj
  for (const auto& a : ex)
    for (const auto& b : ey) {
      if (a.col == b.row) out[{a.row, b.col}] += a.value * b.value;
      if (b.col == a.row) out[{b.row, a.col}] -= a.value * b.value;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

class BracketNotClosed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotASubspace : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Linearly independent spanning set of an N x N matrix algebra. The
/// echelon form over the default prime is built on construction.
class AlgebraBasis {
 public:
  AlgebraBasis(int n, std::vector<BasisElement> elements) : n_(n), elements_(std::move(elements)) {
    if (n_ < 1) throw std::invalid_argument("matrix size must be positive");
    for (const auto& e : elements_) {
      if (e.is_elementary()) {
        const auto& el = e.as_elementary();
        if (el.row < 1 || el.col < 1 || el.row > n_ || el.col > n_)
          throw std::invalid_argument("elementary matrix index out of range");
      } else {
        const auto& c = e.as_diagonal().coeffs;
        if (c.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("diagonal has wrong length");
        if (std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; }))
          throw std::invalid_argument("diagonal element is zero");
      }
    }
    span_ = build_span(kDefaultPrime);
  }

  int n() const { return n_; }
  std::size_t dim() const { return elements_.size(); }
  const std::vector<BasisElement>& elements() const { return elements_; }

  /// Flattened (row, col) -> row * n + col coordinate vector.
  FpVector to_vector(const SparseMatrix& m, const PrimeField& f) const {
    FpVector v(static_cast<std::size_t>(n_) * n_, 0);
    for (const auto& [rc, val] : m) v[flat(rc.first, rc.second)] = f.add(v[flat(rc.first, rc.second)], f.from_int(val));
    return v;
  }

  FpVector to_vector(const BasisElement& e, const PrimeField& f) const {
    FpVector v(static_cast<std::size_t>(n_) * n_, 0);
    for (const auto& en : e.entries()) v[flat(en.row, en.col)] = f.from_int(en.value);
    return v;
  }

  std::size_t flat(int row, int col) const { return static_cast<std::size_t>(row - 1) * n_ + (col - 1); }

  /// Echelonized span over F_p; cached for the default prime.
  std::shared_ptr<const EchelonSpan> span(std::uint64_t prime = kDefaultPrime) const {
    return prime == kDefaultPrime ? span_ : build_span(prime);
  }

  /// Stable hash of the basis, used to decorrelate random draws between
  /// instances.
  std::uint64_t fingerprint() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t v) {
      for (int i = 0; i < 8; ++i) {
        h ^= (v >> (8 * i)) & 0xff;
        h *= 1099511628211ull;
      }
    };
    mix(static_cast<std::uint64_t>(n_));
    for (const auto& e : elements_) {
      mix(e.is_elementary() ? 1 : 2);
      for (const auto& en : e.entries()) {
        mix(static_cast<std::uint64_t>(en.row));
        mix(static_cast<std::uint64_t>(en.col));
        mix(static_cast<std::uint64_t>(en.value));
      }
    }
    return h;
  }

 private:
  std::shared_ptr<const EchelonSpan> build_span(std::uint64_t prime) const {
    PrimeField f(prime);
    auto s = std::make_shared<EchelonSpan>(static_cast<std::size_t>(n_) * n_, f);
    for (const auto& e : elements_)
      if (!s->insert(to_vector(e, f))) throw std::invalid_argument("basis elements are linearly dependent");
    return s;
  }

  int n_;
  std::vector<BasisElement> elements_;
  std::shared_ptr<const EchelonSpan> span_;
};

struct FieldConfig {
  std::uint64_t prime = kDefaultPrime;
  int trials = 3;
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument unless prime is prime, prime > 2N^2 and
  /// trials >= 1.
  void validate(int n) const {
    if (!PrimeField::is_prime(prime) || prime < 3) throw std::invalid_argument("field modulus is not an odd prime");
    if (prime <= 2ull * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n))
      throw std::invalid_argument("field modulus must exceed 2N^2");
    if (trials < 1) throw std::invalid_argument("at least one trial is required");
  }
};

/// Structure constants: [x_i, x_j] = sum_k c(i, j)_k x_k.
struct StructureConstants {
  std::size_t dim = 0;
  std::vector<std::vector<std::pair<std::size_t, Fp>>> table;  // index i * dim + j

  const std::vector<std::pair<std::size_t, Fp>>& at(std::size_t i, std::size_t j) const {
    return table[i * dim + j];
  }
};

inline StructureConstants structure_constants(const AlgebraBasis& b, std::uint64_t prime = kDefaultPrime) {
  const PrimeField f(prime);
  const auto span = b.span(prime);
  StructureConstants sc;
  sc.dim = b.dim();
  sc.table.resize(sc.dim * sc.dim);
  const auto& el = b.elements();
  for (std::size_t i = 0; i < sc.dim; ++i)
    for (std::size_t j = i + 1; j < sc.dim; ++j) {
      std::vector<std::pair<std::size_t, Fp>> sparse;
      for (const auto& [rc, val] : bracket(el[i], el[j])) sparse.emplace_back(b.flat(rc.first, rc.second), f.from_int(val));
      auto coords = span->sparse_coordinates(sparse);
      if (!coords)
        throw BracketNotClosed("bracket of basis elements " + std::to_string(i) + " and " + std::to_string(j) +
                               " leaves the span");
      auto neg = *coords;
      for (auto& [k, v] : neg) v = f.neg(v);
      sc.table[i * sc.dim + j] = std::move(*coords);
      sc.table[j * sc.dim + i] = std::move(neg);
    }
  return sc;
}

namespace detail {

// Uniform draws that depend only on (seed, instance, trial, stream).
inline FpVector random_vector(std::size_t len, const FieldConfig& cfg, std::uint64_t fingerprint, int trial,
                              std::uint32_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(fingerprint), static_cast<std::uint32_t>(fingerprint >> 32),
                    static_cast<std::uint32_t>(trial), stream};
  std::mt19937_64 gen(seq);
  std::uniform_int_distribution<std::uint64_t> dist(0, cfg.prime - 1);
  FpVector v(len);
  for (auto& x : v) x = dist(gen);
  return v;
}

inline constexpr std::uint32_t kFunctionalStream = 1;
inline constexpr std::uint32_t kElementStream = 2;

}  // namespace detail

/// Corank of F([x_i, x_j]) for one random functional F per trial.
/// Every entry is an upper bound on the index.
inline std::vector<std::size_t> index_trials(const AlgebraBasis& b, const FieldConfig& cfg) {
  cfg.validate(b.n());
  const std::size_t dim = b.dim();
  if (dim == 0) return std::vector<std::size_t>(cfg.trials, 0);
  const PrimeField f(cfg.prime);
  const auto sc = structure_constants(b, cfg.prime);
  std::vector<std::size_t> out;
  for (int t = 0; t < cfg.trials; ++t) {
    const FpVector functional = detail::random_vector(dim, cfg, b.fingerprint(), t, detail::kFunctionalStream);
    std::vector<FpVector> form(dim, FpVector(dim, 0));
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        Fp acc = 0;
        for (auto [k, c] : sc.at(i, j)) acc = f.add(acc, f.mul(functional[k], c));
        form[i][j] = acc;
      }
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        if (f.add(form[i][j], form[j][i]) != 0) throw std::logic_error("bilinear form is not antisymmetric");
    out.push_back(dim - matrix_rank(std::move(form), f));
  }
  return out;
}

/// dim - max rank over trials of F([-,-]).
inline std::size_t index_randomized(const AlgebraBasis& b, const FieldConfig& cfg) {
  const auto t = index_trials(b, cfg);
  return *std::min_element(t.begin(), t.end());
}

/// Lower central series g_k = [g, g_{k-1}] until it vanishes or stalls.
inline bool is_nilpotent(const AlgebraBasis& b, std::uint64_t prime = kDefaultPrime) {
  const std::size_t dim = b.dim();
  if (dim == 0) return true;
  const PrimeField f(prime);
  const auto sc = structure_constants(b, prime);
  std::vector<FpVector> current;
  for (std::size_t i = 0; i < dim; ++i) {
    FpVector e(dim, 0);
    e[i] = 1;
    current.push_back(std::move(e));
  }
  for (;;) {
    EchelonSpan next(dim, f, false);
    for (std::size_t i = 0; i < dim && next.rank() < current.size(); ++i)
      for (const auto& y : current) {
        FpVector v(dim, 0);
        for (std::size_t j = 0; j < dim; ++j) {
          if (y[j] == 0) continue;
          for (auto [k, c] : sc.at(i, j)) v[k] = f.add(v[k], f.mul(y[j], c));
        }
        next.insert(std::move(v));
      }
    if (next.rank() == 0) return true;
    if (next.rank() == current.size()) return false;
    current = next.rows();
  }
}

/// Whether span(sub) is an ideal of span(ambient).
inline bool is_ideal(const AlgebraBasis& sub, const AlgebraBasis& ambient, std::uint64_t prime = kDefaultPrime) {
  if (sub.n() != ambient.n()) throw std::invalid_argument("matrix sizes differ");
  const PrimeField f(prime);
  const auto amb = ambient.span(prime);
  const auto own = sub.span(prime);
  for (const auto& s : sub.elements())
    if (!amb->contains(sub.to_vector(s, f))) throw NotASubspace("subalgebra element outside the ambient span");
  for (const auto& a : ambient.elements())
    for (const auto& s : sub.elements())
      if (!own->contains(sub.to_vector(bracket(a, s), f))) return false;
  return true;
}

/// Dimension of {x in span : [x, y] = 0 for every basis element y}.
inline std::size_t center_dim_oracle(const AlgebraBasis& b, std::uint64_t prime = kDefaultPrime) {
  const std::size_t dim = b.dim();
  if (dim == 0) return 0;
  const PrimeField f(prime);
  const auto sc = structure_constants(b, prime);
  // x = sum c_i x_i is central iff sum_i c_i [x_i, x_k] = 0 for each k, i.e.
  // c is orthogonal to every row r_{k,m}[i] = c(i, k)_m.
  EchelonSpan constraints(dim, f, false);
  for (std::size_t k = 0; k < dim && constraints.rank() < dim; ++k) {
    std::map<std::size_t, FpVector> rows;
    for (std::size_t i = 0; i < dim; ++i)
      for (auto [m, c] : sc.at(i, k)) {
        auto& r = rows.try_emplace(m, FpVector(dim, 0)).first->second;
        r[i] = c;
      }
    for (auto& [m, r] : rows) constraints.insert(std::move(r));
  }
  return dim - constraints.rank();
}

/// Max over trials of rank(ad_x) for a random x in the span; each trial is
/// a lower bound on the breadth.
inline std::size_t breadth_randomized(const AlgebraBasis& b, const FieldConfig& cfg) {
  cfg.validate(b.n());
  const std::size_t dim = b.dim();
  if (dim == 0) return 0;
  const PrimeField f(cfg.prime);
  const auto sc = structure_constants(b, cfg.prime);
  std::size_t best = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    const FpVector x = detail::random_vector(dim, cfg, b.fingerprint(), t, detail::kElementStream);
    std::vector<FpVector> ad(dim, FpVector(dim, 0));  // ad[m][k]: coefficient of x_m in [x, x_k]
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < dim; ++k)
        for (auto [m, c] : sc.at(i, k)) ad[m][k] = f.add(ad[m][k], f.mul(x[i], c));
    best = std::max(best, matrix_rank(std::move(ad), f));
  }
  return best;
}

/// Whether E_{p,q} (p != q) belongs to the seaweed: p > q inside a top
/// block or p < q inside a bottom block.
inline bool seaweed_contains(const SeaweedSpec& s, int p, int q) {
  const auto& side = p > q ? s.top() : s.bottom();
  for (const auto& blk : blocks(side))
    if (blk.contains(p)) return blk.contains(q);
  return false;
}

/// The spanning set of the seaweed: diagonal part (E_jj for gl,
/// E_11 - E_jj for sl), then lower triangles of top blocks, then upper
/// triangles of bottom blocks.
inline AlgebraBasis seaweed_basis(const SeaweedSpec& s) {
  const int n = s.n();
  std::vector<BasisElement> el;
  if (s.is_sl()) {
    for (int j = 2; j <= n; ++j) {
      std::vector<std::int64_t> c(n, 0);
      c[0] = 1;
      c[j - 1] = -1;
      el.push_back(BasisElement::diagonal(std::move(c)));
    }
  } else {
    for (int j = 1; j <= n; ++j) el.push_back(BasisElement::elementary(j, j));
  }
  for (const auto& blk : blocks(s.top()))
    for (int p = blk.lo; p <= blk.hi; ++p)
      for (int q = blk.lo; q < p; ++q) el.push_back(BasisElement::elementary(p, q));
  for (const auto& blk : blocks(s.bottom()))
    for (int p = blk.lo; p <= blk.hi; ++p)
      for (int q = p + 1; q <= blk.hi; ++q) el.push_back(BasisElement::elementary(p, q));
  return AlgebraBasis(n, std::move(el));
}

/// E_{p,q} in s with E_{q,p} not in s, followed by a basis of the center:
/// one indicator per central component (gl), or the traceless combinations
/// |C_{i+1}| 1_{C_i} - |C_i| 1_{C_{i+1}} of consecutive components (sl).
inline AlgebraBasis nilradical_basis(const SeaweedSpec& s) {
  const int n = s.n();
  std::vector<BasisElement> el;
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q)
      if (p != q && seaweed_contains(s, p, q) && !seaweed_contains(s, q, p))
        el.push_back(BasisElement::elementary(p, q));
  const auto cen = central_components(s);
  auto indicator = [n](const Interval& iv, std::int64_t w, std::vector<std::int64_t>& c) {
    c.resize(n, 0);
    for (int v = iv.lo; v <= iv.hi; ++v) c[v - 1] = w;
  };
  if (s.is_sl()) {
    for (std::size_t i = 0; i + 1 < cen.size(); ++i) {
      std::vector<std::int64_t> c;
      indicator(cen.intervals[i], cen.intervals[i + 1].size(), c);
      indicator(cen.intervals[i + 1], -cen.intervals[i].size(), c);
      el.push_back(BasisElement::diagonal(std::move(c)));
    }
  } else {
    for (const auto& iv : cen.intervals) {
      std::vector<std::int64_t> c;
      indicator(iv, 1, c);
      el.push_back(BasisElement::diagonal(std::move(c)));
    }
  }
  return AlgebraBasis(n, std::move(el));
}

/// Span of E_{p,q} over the strict relations p < q.
inline AlgebraBasis poset_algebra_basis(const Poset& p) {
  std::vector<BasisElement> el;
  for (auto [a, b] : p.relations()) el.push_back(BasisElement::elementary(a, b));
  return AlgebraBasis(std::max(p.size(), 1), std::move(el));
}

}  // namespace seaweed
