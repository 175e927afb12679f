#include "csst/search.hpp"

#include <algorithm>

#include "csst/errors.hpp"

namespace csst {

namespace {

DistanceResult exact(std::size_t value, BitVector certificate) {
  DistanceResult r;
  r.value = value;
  r.lower_bound = value;
  r.upper_bound = value;
  r.certificate = std::move(certificate);
  r.method = DistanceMethod::exhaustive;
  return r;
}

std::size_t sort_d(const CssParams& p) { return p.d.value.value_or(p.d.upper_bound); }

}  // namespace

CssParams nphi_identity_params(const CssPair& q, const CssPair& doubled, const DistanceOptions& opts,
                               const std::optional<SearchTarget>& target) {
  const std::size_t n = q.n;
  CssParams out;
  out.n = doubled.n;
  out.k = doubled.k;

  // (C2^N)^perp = {(a, b) : a + b in C2^perp} and likewise for C1, so a word
  // of the Z coset has weight >= wt(a + b) with a + b in C2^perp \ C1^perp,
  // and (a, 0) attains it.
  DistanceOptions zopts = opts;
  if (target) zopts.window_lo = zopts.window_hi = target->d;
  const DistanceResult dz = coset_min_weight(q.c2.dual(), q.c1.dual(), zopts);
  out.d_z = dz;
  if (dz.certificate) {
    const BitVector lifted = concat(*dz.certificate, BitVector(n));
    if (!doubled.c2.dual().contains(lifted) || doubled.c1.dual().contains(lifted))
      throw std::logic_error("lifted Z certificate left the coset");
    out.d_z.certificate = lifted;
  }
  if (target && dz.upper_bound < target->d) {
    out.d = dz;
    return out;
  }

  DistanceOptions xopts = opts;
  if (target) xopts.window_lo = target->d;
  out.d_x = coset_min_weight(doubled.c1, doubled.c2, xopts);
  out.d = min_of(out.d_x, out.d_z);
  if (target && (out.d_x.upper_bound < target->d || !out.d.known())) return out;

  DistanceOptions c1opts = opts;
  if (target && out.d_x.known()) {
    c1opts.window_lo = *out.d_x.value;
    if (*out.d_x.value > 1) c1opts.window_hi = *out.d_x.value - 1;
  }
  out.d_c1 = min_distance(doubled.c1, c1opts);
  out.x_degenerate = exceeds(out.d_x, out.d_c1);

  // (e_i, e_i) always lies in (C2^N)^perp; weight one needs a coordinate on
  // which C2^N vanishes.
  const LinearCode c2n_perp = doubled.c2.dual();
  const BitVector zero(n);
  std::optional<BitVector> unit;
  for (std::size_t i = 0; i < 2 * n && !unit; ++i) {
    BitVector e = BitVector::unit(2 * n, i);
    if (c2n_perp.contains(e)) unit = e;
  }
  if (unit) {
    out.d_c2perp = exact(1, *unit);
  } else {
    const BitVector e = BitVector::unit(n, 0);
    out.d_c2perp = exact(2, concat(e, e));
  }
  out.z_degenerate = exceeds(out.d_z, out.d_c2perp);
  return out;
}

std::vector<SearchResult> search_cyclic_csst(const SearchTask& task) {
  if (task.n < 3 || task.n > 33 || task.n % 2 == 0) throw InvalidArgument("search needs odd n in [3, 33]");
  if (task.target && task.target->n_q != 2 * task.n)
    throw InvalidArgument("target length must be twice the cyclic length");
  const auto divisors = cyclic_divisors(task.n);
  std::vector<SearchResult> out;
  std::size_t visited = 0;
  for (const auto& g1 : divisors)
    for (const auto& g2 : divisors) {
      if (g1 == g2 || !g1.divides(g2)) continue;
      const std::size_t k = static_cast<std::size_t>(g2.degree() - g1.degree());
      if (task.target && k != task.target->k) continue;
      if (task.max_pairs && visited >= *task.max_pairs) break;
      ++visited;
      const CssPair q = make_css(cyclic_code(task.n, g1), cyclic_code(task.n, g2));
      CssPair doubled = nphi(q, PhiMap::identity(task.n));
      CssParams params = nphi_identity_params(q, doubled, task.distance, task.target);
      if (task.target && !(params.d.known() && *params.d.value == task.target->d)) continue;
      CssTVerdict verdict = schur_criterion(doubled.c1, doubled.c2);
      out.push_back({g1, g2, std::move(doubled), std::move(params), std::move(verdict)});
    }
  std::sort(out.begin(), out.end(), [](const SearchResult& a, const SearchResult& b) {
    if (a.params.k != b.params.k) return a.params.k > b.params.k;
    if (sort_d(a.params) != sort_d(b.params)) return sort_d(a.params) > sort_d(b.params);
    if (a.g1 != b.g1) return a.g1 < b.g1;
    return a.g2 < b.g2;
  });
  return out;
}

}  // namespace csst
