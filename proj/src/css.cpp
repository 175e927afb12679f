#include "csst/css.hpp"

#include "csst/errors.hpp"

namespace csst {

BitVector CssPair::representative(std::uint64_t u) const {
  BitVector v(n);
  for (std::size_t i = 0; i < k && u; ++i, u >>= 1)
    if (u & 1U) v ^= logical_reps[i];
  return v;
}

CssPair make_css(const LinearCode& c1, const LinearCode& c2) {
  if (c1.n() != c2.n()) throw DimensionError("CSS pair with lengths " + std::to_string(c1.n()) + " and " +
                                             std::to_string(c2.n()));
  if (!c1.contains(c2)) throw ContainmentError("C2 is not a subcode of C1");
  if (c1.k() == c2.k()) throw InvalidArgument("C1 == C2 encodes no logical qubit");
  CssPair p;
  p.c1 = c1;
  p.c2 = c2;
  p.n = c1.n();
  p.k = c1.k() - c2.k();
  p.logical_reps = BitMatrix(p.n);
  RowReducer span(c2.generator());
  if (c2.k() == 0) span = RowReducer(BitMatrix(p.n));
  for (const auto& row : c1.generator().rows())
    if (span.insert(row)) p.logical_reps.push_back(row);
  return p;
}

std::optional<bool> exceeds(const DistanceResult& coset, const DistanceResult& ambient) {
  if (coset.lower_bound > ambient.upper_bound) return true;
  if (coset.upper_bound <= ambient.lower_bound) return false;
  return std::nullopt;
}

CssParams css_params(const CssPair& p, const DistanceOptions& opts) {
  CssParams out;
  out.n = p.n;
  out.k = p.k;
  const LinearCode c2perp = p.c2.dual();
  const LinearCode c1perp = p.c1.dual();
  out.d_x = coset_min_weight(p.c1, p.c2, opts);
  out.d_z = coset_min_weight(c2perp, c1perp, opts);
  out.d = min_of(out.d_x, out.d_z);
  out.d_c1 = min_distance(p.c1, opts);
  out.d_c2perp = min_distance(c2perp, opts);
  out.x_degenerate = exceeds(out.d_x, out.d_c1);
  out.z_degenerate = exceeds(out.d_z, out.d_c2perp);
  return out;
}

ParityChecks parity_check_blocks(const CssPair& p) { return {p.c2.generator(), p.c1.parity_check()}; }

}  // namespace csst
