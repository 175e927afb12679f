#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "csst/css.hpp"
#include "csst/csst.hpp"
#include "csst/poly.hpp"

namespace csst {

struct SearchTarget {
  std::size_t n_q = 0;
  std::size_t k = 0;
  std::size_t d = 0;
};

struct SearchTask {
  std::size_t n = 0;  // half-length: cyclic codes of length n, outputs of length 2n
  std::optional<SearchTarget> target;
  DistanceOptions distance;
  std::optional<std::size_t> max_pairs;
};

struct SearchResult {
  Gf2Poly g1;  // C1 = <g1>
  Gf2Poly g2;  // C2 = <g2>
  CssPair pair;  // nphi(identity) of the cyclic pair
  CssParams params;
  CssTVerdict csst;
};

/// Parameters of nphi(q, identity) for a CSS pair q. X-side distances are
/// computed on the doubled codes; the Z-side coset minimum is computed on q
/// and lifted (see the implementation), and d((C2^N)^perp) is exact.
CssParams nphi_identity_params(const CssPair& q, const CssPair& doubled, const DistanceOptions& opts,
                               const std::optional<SearchTarget>& target = std::nullopt);

/// Nested cyclic pairs <g1> ⊇ <g2> of length n mapped through nphi(identity).
/// With a target, only pairs whose image has exactly those parameters are
/// returned. Sorted by k desc, d desc, then generator polynomials.
std::vector<SearchResult> search_cyclic_csst(const SearchTask& task);

}  // namespace csst
