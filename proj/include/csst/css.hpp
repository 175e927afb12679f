#pragma once

#include <cstddef>
#include <optional>

#include "csst/distance.hpp"
#include "csst/gf2.hpp"
#include "csst/linear_code.hpp"

namespace csst {

/// Nested pair C2 ⊆ C1 with k = dim C1 - dim C2 >= 1.
struct CssPair {
  LinearCode c1;
  LinearCode c2;
  std::size_t n = 0;
  std::size_t k = 0;
  /// Coset representatives H with C1 = C2 ⊕ rowspace(H).
  BitMatrix logical_reps;

  /// Codeword of the coset labelled u (bit i of u selects row i of H).
  BitVector representative(std::uint64_t u) const;
};

/// Throws ContainmentError when C2 is not inside C1 and InvalidArgument when
/// the pair encodes nothing.
CssPair make_css(const LinearCode& c1, const LinearCode& c2);

struct CssParams {
  std::size_t n = 0;
  std::size_t k = 0;
  DistanceResult d_x;       // min wt(C1 \ C2)
  DistanceResult d_z;       // min wt(C2^perp \ C1^perp)
  DistanceResult d;
  DistanceResult d_c1;      // d(C1)
  DistanceResult d_c2perp;  // d(C2^perp)
  std::optional<bool> x_degenerate;  // empty: undecided by the bounds
  std::optional<bool> z_degenerate;
};

CssParams css_params(const CssPair& p, const DistanceOptions& opts = {});

/// Whether a coset minimum exceeds the ambient minimum, from bounds alone.
std::optional<bool> exceeds(const DistanceResult& coset, const DistanceResult& ambient);

struct ParityChecks {
  BitMatrix h_x;  // generators of C2
  BitMatrix h_z;  // generators of C1^perp
};

ParityChecks parity_check_blocks(const CssPair& p);

}  // namespace csst
