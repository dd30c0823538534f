#pragma once

// Compositions, block partitions and the seaweed record, plus the text
// notation `p 2|4/1|2|3` (gl) and `pA 2|4/1|2|3` (sl).

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seaweed {

/// Closed interval of 1-based indices.
struct Interval {
  int lo = 1;
  int hi = 0;

  int size() const { return hi - lo + 1; }
  bool contains(int v) const { return lo <= v && v <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Ordered list of positive parts.
class Composition {
 public:
  Composition() = default;

  explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw std::invalid_argument("composition needs at least one part");
    for (int p : parts_) {
      if (p < 1) throw std::invalid_argument("composition parts must be positive");
      if (sum_ > std::numeric_limits<int>::max() - p)
        throw std::invalid_argument("composition sum overflows");
      sum_ += p;
    }
  }

  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int sum() const { return sum_; }

  friend bool operator==(const Composition& a, const Composition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Composition& a, const Composition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int sum_ = 0;
};

/// Set of partial sums a_1, a_1 + a_2, ..., N.
inline std::set<int> partial_sums(const Composition& c) {
  std::set<int> out;
  int acc = 0;
  for (int p : c.parts()) out.insert(acc += p);
  return out;
}

/// The i-th interval has length parts[i]; together they tile 1..sum.
inline std::vector<Interval> blocks(const Composition& c) {
  std::vector<Interval> out;
  out.reserve(c.size());
  int lo = 1;
  for (int p : c.parts()) {
    out.push_back({lo, lo + p - 1});
    lo += p;
  }
  return out;
}

enum class Flavor { GL, SL };

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at offset " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

class SumMismatch : public std::runtime_error {
 public:
  SumMismatch(int top, int bottom)
      : std::runtime_error("top sum " + std::to_string(top) + " differs from bottom sum " +
                           std::to_string(bottom)),
        top_(top),
        bottom_(bottom) {}
  int top_sum() const { return top_; }
  int bottom_sum() const { return bottom_; }

 private:
  int top_;
  int bottom_;
};

/// A pair of compositions of the same N and the gl/sl flavor.
class SeaweedSpec {
 public:
  SeaweedSpec(Composition top, Composition bottom, Flavor flavor = Flavor::GL)
      : top_(std::move(top)), bottom_(std::move(bottom)), flavor_(flavor) {
    if (top_.sum() != bottom_.sum()) throw SumMismatch(top_.sum(), bottom_.sum());
    if (top_.sum() < 1) throw std::invalid_argument("seaweed size must be positive");
  }

  const Composition& top() const { return top_; }
  const Composition& bottom() const { return bottom_; }
  Flavor flavor() const { return flavor_; }
  bool is_sl() const { return flavor_ == Flavor::SL; }
  int n() const { return top_.sum(); }

  SeaweedSpec with_flavor(Flavor f) const { return SeaweedSpec(top_, bottom_, f); }

  friend bool operator==(const SeaweedSpec&, const SeaweedSpec&) = default;

 private:
  Composition top_;
  Composition bottom_;
  Flavor flavor_;
};

inline std::string to_string(const Composition& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += '|';
    out += std::to_string(c[i]);
  }
  return out;
}

/// Canonical printer; parse_spec(to_string(s)) == s.
inline std::string to_string(const SeaweedSpec& s) {
  return std::string(s.is_sl() ? "pA " : "p ") + to_string(s.top()) + "/" + to_string(s.bottom());
}

/// N + sum a_i(a_i-1)/2 + sum b_j(b_j-1)/2, minus one for sl.
inline std::int64_t dim_seaweed(const SeaweedSpec& s) {
  auto triangle = [](const Composition& c) {
    std::int64_t t = 0;
    for (int p : c.parts()) t += static_cast<std::int64_t>(p) * (p - 1) / 2;
    return t;
  };
  std::int64_t d = s.n() + triangle(s.top()) + triangle(s.bottom());
  return s.is_sl() ? d - 1 : d;
}

namespace detail {

// spec  := flavor? parts '/' parts
// flavor:= 'p' | 'pA'
// parts := INT ('|' INT)*
class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  SeaweedSpec parse() {
    Flavor flavor = Flavor::GL;
    skip_ws();
    if (peek() == 'p') {
      ++pos_;
      if (peek() == 'A') {
        ++pos_;
        flavor = Flavor::SL;
      }
    }
    auto top = parse_parts();
    skip_ws();
    expect('/');
    auto bottom = parse_parts();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    Composition a(std::move(top));
    Composition b(std::move(bottom));
    if (a.sum() != b.sum()) throw SumMismatch(a.sum(), b.sum());
    return SeaweedSpec(std::move(a), std::move(b), flavor);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  std::vector<int> parse_parts() {
    std::vector<int> parts{parse_int()};
    for (;;) {
      skip_ws();
      if (peek() != '|') break;
      ++pos_;
      parts.push_back(parse_int());
    }
    return parts;
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected an integer", pos_);
    long long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > std::numeric_limits<int>::max()) throw ParseError("integer too large", start);
      ++pos_;
    }
    if (v <= 0) throw ParseError("parts must be positive", start);
    return static_cast<int>(v);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `p 2|4/1|2|3`, `pA 7/7` or bare `2|4/1|2|3` (gl).
/// Throws ParseError on malformed input and SumMismatch when the sums differ.
inline SeaweedSpec parse_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

}  // namespace seaweed
