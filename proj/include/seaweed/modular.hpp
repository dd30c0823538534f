#pragma once

// Arithmetic and exact elimination over Z/pZ for a prime p < 2^63.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace seaweed {

using Fp = std::uint64_t;
using FpVector = std::vector<Fp>;

class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p < 3 || p >= (std::uint64_t{1} << 63) || !is_prime(p))
      throw std::invalid_argument("field modulus must be an odd prime below 2^63");
  }

  std::uint64_t prime() const { return p_; }

  Fp add(Fp a, Fp b) const {
    Fp s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Fp sub(Fp a, Fp b) const { return a >= b ? a - b : a + p_ - b; }
  Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }
  Fp mul(Fp a, Fp b) const { return static_cast<Fp>(static_cast<unsigned __int128>(a) * b % p_); }

  Fp pow(Fp a, std::uint64_t e) const {
    Fp r = 1;
    for (; e; e >>= 1, a = mul(a, a))
      if (e & 1) r = mul(r, a);
    return r;
  }

  Fp inv(Fp a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return pow(a, p_ - 2);
  }

  Fp from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Fp>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }

  /// Deterministic Miller-Rabin for 64-bit inputs.
  static bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
      if (n % q == 0) return n == q;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
      return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
    };
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
      std::uint64_t x = 1, base = a % n, e = d;
      for (; e; e >>= 1, base = mulmod(base, base))
        if (e & 1) x = mulmod(x, base);
      if (x == 1 || x == n - 1) continue;
      bool composite = true;
      for (int r = 1; r < s && composite; ++r) {
        x = mulmod(x, x);
        if (x == n - 1) composite = false;
      }
      if (composite) return false;
    }
    return true;
  }

 private:
  std::uint64_t p_;
};

/// Rank of a dense matrix (rows of equal length) by Gauss-Jordan elimination.
inline std::size_t matrix_rank(std::vector<FpVector> rows, const PrimeField& f) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const Fp inv = f.inv(rows[rank][c]);
    for (std::size_t k = c; k < cols; ++k) rows[rank][k] = f.mul(rows[rank][k], inv);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      const Fp factor = rows[r][c];
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k)
        rows[r][k] = f.sub(rows[r][k], f.mul(factor, rows[rank][k]));
    }
    ++rank;
  }
  return rank;
}

/// Incrementally built span of vectors in F_p^dim, kept in reduced row
/// echelon form. Each stored row remembers which combination of the
/// inserted generators produced it, so membership tests also return
/// coordinates with respect to independent generators.
class EchelonSpan {
 public:
  /// With `track_generators` off, coordinates() is unavailable and
  /// insert() skips the bookkeeping.
  EchelonSpan(std::size_t ambient_dim, const PrimeField& field, bool track_generators = true)
      : dim_(ambient_dim), field_(field), track_(track_generators), pivot_row_(ambient_dim, npos) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t generator_count() const { return generators_; }
  const PrimeField& field() const { return field_; }

  /// Adds v as the next generator; returns false if v was already in the span.
  bool insert(FpVector v) {
    check_size(v);
    FpVector combo;
    if (track_) {
      const std::size_t gen = generators_++;
      combo.assign(gen + 1, 0);
      combo[gen] = 1;
      for (auto& c : combos_) c.resize(gen + 1, 0);
    }

    // Clear pivot columns of v.
    for (std::size_t col = 0; col < dim_; ++col) {
      if (v[col] == 0 || pivot_row_[col] == npos) continue;
      const std::size_t r = pivot_row_[col];
      const Fp factor = v[col];
      axpy(v, rows_[r], factor);
      if (track_) axpy(combo, combos_[r], factor);
    }
    std::size_t lead = 0;
    while (lead < dim_ && v[lead] == 0) ++lead;
    if (lead == dim_) return false;

    const Fp inv = field_.inv(v[lead]);
    for (auto& x : v) x = field_.mul(x, inv);
    for (auto& x : combo) x = field_.mul(x, inv);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Fp factor = rows_[r][lead];
      if (factor == 0) continue;
      axpy(rows_[r], v, factor);
      if (track_) axpy(combos_[r], combo, factor);
    }
    pivot_row_[lead] = rows_.size();
    rows_.push_back(std::move(v));
    combos_.push_back(std::move(combo));
    return true;
  }

  bool contains(const FpVector& v) const { return residual_is_zero(v, nullptr); }

  /// Coefficients over the inserted generators, or nullopt when v is
  /// outside the span. Unique when every generator was independent.
  std::optional<FpVector> coordinates(const FpVector& v) const {
    require_tracking();
    FpVector coords(generators_, 0);
    if (!residual_is_zero(v, &coords)) return std::nullopt;
    return coords;
  }

  /// Coordinates when v has few nonzero entries, given as (index, value).
  std::optional<std::vector<std::pair<std::size_t, Fp>>> sparse_coordinates(
      const std::vector<std::pair<std::size_t, Fp>>& v) const {
    require_tracking();
    // In RREF the coefficient of row r is v's entry at r's pivot column.
    std::vector<std::pair<std::size_t, Fp>> used;
    for (auto [col, val] : v) {
      if (val != 0 && pivot_row_[col] != npos) used.emplace_back(pivot_row_[col], val);
    }
    FpVector residual(dim_, 0);
    for (auto [col, val] : v) residual[col] = field_.add(residual[col], val);
    for (auto [r, a] : used) axpy(residual, rows_[r], a);
    for (Fp x : residual)
      if (x != 0) return std::nullopt;
    FpVector coords(generators_, 0);
    for (auto [r, a] : used)
      for (std::size_t g = 0; g < generators_; ++g)
        if (combos_[r][g]) coords[g] = field_.add(coords[g], field_.mul(a, combos_[r][g]));
    std::vector<std::pair<std::size_t, Fp>> out;
    for (std::size_t g = 0; g < generators_; ++g)
      if (coords[g]) out.emplace_back(g, coords[g]);
    return out;
  }

  const std::vector<FpVector>& rows() const { return rows_; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void require_tracking() const {
    if (!track_) throw std::logic_error("span was built without generator tracking");
  }

  void check_size(const FpVector& v) const {
    if (v.size() != dim_) throw std::invalid_argument("vector length differs from ambient dimension");
  }

  // dst -= factor * src
  void axpy(FpVector& dst, const FpVector& src, Fp factor) const {
    for (std::size_t i = 0; i < src.size(); ++i)
      if (src[i]) dst[i] = field_.sub(dst[i], field_.mul(factor, src[i]));
  }

  bool residual_is_zero(const FpVector& v, FpVector* coords) const {
    check_size(v);
    FpVector residual = v;
    for (std::size_t col = 0; col < dim_; ++col) {
      if (residual[col] == 0 || pivot_row_[col] == npos) continue;
      const std::size_t r = pivot_row_[col];
      const Fp a = residual[col];
      axpy(residual, rows_[r], a);
      if (coords)
        for (std::size_t g = 0; g < generators_; ++g)
          if (combos_[r][g]) (*coords)[g] = field_.add((*coords)[g], field_.mul(a, combos_[r][g]));
    }
    for (Fp x : residual)
      if (x != 0) return false;
    return true;
  }

  std::size_t dim_;
  PrimeField field_;
  bool track_;
  std::vector<std::size_t> pivot_row_;
  std::vector<FpVector> rows_;
  std::vector<FpVector> combos_;
  std::size_t generators_ = 0;
};

}  // namespace seaweed
