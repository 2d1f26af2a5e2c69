#pragma once

// Test builders plus a brute-force relation algebra over explicit pair sets.
// The oracle shares nothing with the bit-matrix kernel.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "promrep/harness.hpp"

namespace support {

using promrep::FinSet;
using promrep::FnMap;
using promrep::Rel;

using IndexPairs = std::vector<std::pair<std::size_t, std::size_t>>;

inline FinSet set(const std::string& name, const std::string& prefix, std::size_t n) {
  return FinSet::indexed(name, prefix, n);
}

inline Rel rel(const FinSet& a, const FinSet& b, const IndexPairs& pairs) {
  return Rel::from_pairs(a, b, pairs);
}

inline FnMap fn(const FinSet& a, const FinSet& b, std::vector<std::size_t> image) {
  return FnMap(a, b, std::move(image));
}

/// b0 ≤ b1 on a two-element carrier.
inline Rel chain2(const FinSet& b) { return rel(b, b, {{0, 0}, {0, 1}, {1, 1}}); }

inline std::vector<std::pair<std::string, std::string>> labels(const Rel& r) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [i, j] : r.pairs()) out.emplace_back(r.src().label(i), r.dst().label(j));
  return out;
}

namespace oracle {

struct Pairs {
  std::size_t rows = 0, cols = 0;
  std::set<std::pair<std::size_t, std::size_t>> p;

  bool has(std::size_t i, std::size_t j) const { return p.count({i, j}) != 0; }
  friend bool operator==(const Pairs& a, const Pairs& b) {
    return a.rows == b.rows && a.cols == b.cols && a.p == b.p;
  }
};

inline Pairs of(const Rel& r) {
  Pairs out{r.src().size(), r.dst().size(), {}};
  for (std::size_t i = 0; i < out.rows; ++i)
    for (std::size_t j = 0; j < out.cols; ++j)
      if (r.test(i, j)) out.p.insert({i, j});
  return out;
}

inline Pairs identity(std::size_t n) {
  Pairs out{n, n, {}};
  for (std::size_t i = 0; i < n; ++i) out.p.insert({i, i});
  return out;
}

inline Pairs converse(const Pairs& x) {
  Pairs out{x.cols, x.rows, {}};
  for (auto [a, b] : x.p) out.p.insert({b, a});
  return out;
}

inline Pairs compose(const Pairs& x, const Pairs& y) {
  Pairs out{x.rows, y.cols, {}};
  for (std::size_t a = 0; a < x.rows; ++a)
    for (std::size_t c = 0; c < y.cols; ++c)
      for (std::size_t b = 0; b < x.cols; ++b)
        if (x.has(a, b) && y.has(b, c)) {
          out.p.insert({a, c});
          break;
        }
  return out;
}

inline bool leq(const Pairs& x, const Pairs& y) {
  for (const auto& e : x.p)
    if (!y.p.count(e)) return false;
  return true;
}

/// (b,c) iff every a with (a,b) ∈ x has (a,c) ∈ z.
inline Pairs left_residual(const Pairs& x, const Pairs& z) {
  Pairs out{x.cols, z.cols, {}};
  for (std::size_t b = 0; b < x.cols; ++b)
    for (std::size_t c = 0; c < z.cols; ++c) {
      bool all = true;
      for (std::size_t a = 0; a < x.rows; ++a)
        if (x.has(a, b) && !z.has(a, c)) all = false;
      if (all) out.p.insert({b, c});
    }
  return out;
}

/// (a,b) iff every c with (b,c) ∈ y has (a,c) ∈ z.
inline Pairs right_residual(const Pairs& z, const Pairs& y) {
  Pairs out{z.rows, y.rows, {}};
  for (std::size_t a = 0; a < z.rows; ++a)
    for (std::size_t b = 0; b < y.rows; ++b) {
      bool all = true;
      for (std::size_t c = 0; c < y.cols; ++c)
        if (y.has(b, c) && !z.has(a, c)) all = false;
      if (all) out.p.insert({a, b});
    }
  return out;
}

inline Pairs graph(const FnMap& f) {
  Pairs out{f.src().size(), f.dst().size(), {}};
  for (std::size_t a = 0; a < out.rows; ++a) out.p.insert({a, f(a)});
  return out;
}

inline bool is_preorder(const Pairs& x) {
  for (std::size_t i = 0; i < x.rows; ++i)
    if (!x.has(i, i)) return false;
  for (auto [a, b] : x.p)
    for (std::size_t c = 0; c < x.cols; ++c)
      if (x.has(b, c) && !x.has(a, c)) return false;
  return true;
}

/// All relations between carriers of the given sizes.
inline std::vector<Pairs> all(std::size_t rows, std::size_t cols) {
  std::vector<Pairs> out;
  const std::size_t cells = rows * cols;
  for (std::size_t code = 0; code < (std::size_t{1} << cells); ++code) {
    Pairs r{rows, cols, {}};
    for (std::size_t k = 0; k < cells; ++k)
      if ((code >> k) & 1U) r.p.insert({k / cols, k % cols});
    out.push_back(std::move(r));
  }
  return out;
}

inline Rel to_rel(const FinSet& a, const FinSet& b, const Pairs& x) {
  return Rel::from_pairs(a, b, IndexPairs(x.p.begin(), x.p.end()));
}

}  // namespace oracle

}  // namespace support
