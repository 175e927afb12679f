#pragma once

// Brute-force oracles on plain uint64_t masks (n <= 64), independent of the
// library's packed types, plus random instance generators.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "csst/css.hpp"
#include "csst/gf2.hpp"
#include "csst/linear_code.hpp"

namespace csst {

inline void PrintTo(const BitVector& v, std::ostream* os) { *os << v.to_string(); }
inline void PrintTo(const BitMatrix& m, std::ostream* os) {
  *os << "{";
  for (std::size_t i = 0; i < m.n_rows(); ++i) *os << (i ? ", " : "") << m[i].to_string();
  *os << "}";
}

}  // namespace csst

namespace oracle {

using Mask = std::uint64_t;

inline Mask to_mask(const csst::BitVector& v) {
  Mask m = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) m |= Mask{1} << i;
  return m;
}

inline csst::BitVector from_mask(Mask m, std::size_t n) {
  csst::BitVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((m >> i) & 1U) v.set(i);
  return v;
}

inline int wt(Mask m) { return std::popcount(m); }

// Every codeword of the span of `gens` (duplicates removed via a set walk).
inline std::vector<Mask> span(const std::vector<Mask>& gens) {
  std::vector<Mask> words{0};
  for (Mask g : gens) {
    bool present = false;
    for (Mask w : words)
      if (w == g) present = true;
    if (present) continue;
    const std::size_t size = words.size();
    for (std::size_t i = 0; i < size; ++i) words.push_back(words[i] ^ g);
  }
  return words;
}

inline std::vector<Mask> words_of(const csst::LinearCode& c) {
  std::vector<Mask> gens;
  for (const auto& r : c.generator().rows()) gens.push_back(to_mask(r));
  return span(gens);
}

inline bool contains(const std::vector<Mask>& words, Mask m) {
  for (Mask w : words)
    if (w == m) return true;
  return false;
}

// Dual by testing every vector of F_2^n (n <= 20).
inline std::vector<Mask> dual_words(const std::vector<Mask>& words, std::size_t n) {
  std::vector<Mask> out;
  for (Mask v = 0; v < (Mask{1} << n); ++v) {
    bool ok = true;
    for (Mask w : words)
      if (wt(v & w) % 2) {
        ok = false;
        break;
      }
    if (ok) out.push_back(v);
  }
  return out;
}

inline int min_weight_excluding(const std::vector<Mask>& outer, const std::vector<Mask>& inner) {
  int best = 1 << 30;
  for (Mask w : outer)
    if (!contains(inner, w)) best = std::min(best, wt(w));
  return best;
}

inline int min_distance(const std::vector<Mask>& words) {
  int best = 1 << 30;
  for (Mask w : words)
    if (w) best = std::min(best, wt(w));
  return best;
}

// Lexicographically smallest 0/1 string (coordinate 0 first) among words of
// the given weight: compare by reversed bit order.
inline Mask lex_smallest(const std::vector<Mask>& words, int weight, std::size_t n) {
  std::string best;
  Mask pick = 0;
  for (Mask w : words) {
    if (wt(w) != weight) continue;
    const std::string s = from_mask(w, n).to_string();
    if (best.empty() || s < best) {
      best = s;
      pick = w;
    }
  }
  return pick;
}

// (d_x, d_z) of a CSS pair by enumerating C1, C2 and both duals (n <= 20).
inline std::pair<int, int> css_distances(const csst::CssPair& p) {
  const auto c1 = words_of(p.c1);
  const auto c2 = words_of(p.c2);
  return {min_weight_excluding(c1, c2), min_weight_excluding(dual_words(c2, p.n), dual_words(c1, p.n))};
}

// wt(a * b * z) even for every a, b in C1 and z in C2.
inline bool triple_parity_ok(const csst::CssPair& p) {
  const auto c1 = words_of(p.c1);
  const auto c2 = words_of(p.c2);
  for (Mask a : c1)
    for (Mask b : c1)
      for (Mask z : c2)
        if (wt(a & b & z) % 2) return false;
  return true;
}

}  // namespace oracle

namespace gen {

inline csst::BitVector random_vector(std::size_t n, std::mt19937_64& rng) {
  csst::BitVector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if (rng() & 1U) v.set(i);
  return v;
}

inline csst::BitMatrix random_matrix(std::size_t rows, std::size_t n, std::mt19937_64& rng) {
  csst::BitMatrix m(n);
  for (std::size_t i = 0; i < rows; ++i) m.push_back(random_vector(n, rng));
  return m;
}

inline csst::LinearCode random_code(std::size_t n, std::size_t k, std::mt19937_64& rng) {
  for (;;) {
    auto c = csst::LinearCode::from_rows(random_matrix(k, n, rng));
    if (c.k() == k) return c;
  }
}

// Random nested pair with dim C1 = k1 and 1 <= k <= k1.
inline csst::CssPair random_pair(std::size_t n, std::size_t k1, std::size_t k, std::mt19937_64& rng) {
  const auto c1 = random_code(n, k1, rng);
  for (;;) {
    csst::BitMatrix rows(n);
    for (std::size_t i = 0; i < k1 - k; ++i) {
      csst::BitVector v(n);
      for (const auto& r : c1.generator().rows())
        if (rng() & 1U) v ^= r;
      rows.push_back(v);
    }
    auto c2 = csst::LinearCode::from_rows(rows);
    if (c2.k() == k1 - k) return csst::make_css(c1, c2);
  }
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace gen
