#include "csst/phase.hpp"

#include <bit>
#include <numeric>

#include "csst/errors.hpp"
#include "csst/parallel.hpp"

namespace csst {

namespace {

using Words = std::vector<Word>;

Words flatten(const BitMatrix& m, std::size_t cw) {
  Words out;
  out.reserve(m.n_rows() * cw);
  for (const auto& r : m.rows()) out.insert(out.end(), r.words().begin(), r.words().end());
  return out;
}

std::size_t popcount(const Word* w, std::size_t cw) {
  std::size_t s = 0;
  for (std::size_t i = 0; i < cw; ++i) s += static_cast<std::size_t>(std::popcount(w[i]));
  return s;
}

// Every word of the coset rep + C2, in Gray-code order.
Words coset_words(const BitVector& rep, const Words& c2, std::size_t d2, std::size_t cw) {
  Words out(cw << d2);
  Words acc(rep.words().begin(), rep.words().end());
  std::copy(acc.begin(), acc.end(), out.begin());
  for (std::uint64_t i = 1; i < (std::uint64_t{1} << d2); ++i) {
    const Word* r = c2.data() + static_cast<std::size_t>(std::countr_zero(i)) * cw;
    for (std::size_t c = 0; c < cw; ++c) acc[c] ^= r[c];
    std::copy(acc.begin(), acc.end(), out.begin() + static_cast<long>(i * cw));
  }
  return out;
}

unsigned resolve(unsigned workers) { return workers ? workers : default_workers(); }

}  // namespace

PhaseProfile phase_profile(const CssPair& p, std::size_t ell, unsigned workers) {
  if (ell < 1 || ell > kPhaseMaxEll) throw InvalidArgument("rotation level must lie in [1, 16]");
  const std::size_t d2 = p.c2.k();
  if (d2 > kPhaseMaxDimC2 || p.k > kPhaseMaxK || d2 + p.k > kPhaseMaxWork)
    throw ResourceGuardError("phase profile needs dim C2 <= 24, k <= 16 and dim C1 <= 32");
  const std::size_t cw = words_for(p.n);
  const Words c2 = flatten(p.c2.generator(), cw);
  const std::uint64_t mask = (std::uint64_t{1} << ell) - 1;
  PhaseProfile out;
  out.ell = ell;
  out.label_bits = p.k;
  out.per_coset.resize(std::size_t{1} << p.k);
  parallel_for(out.per_coset.size(), workers, [&](std::size_t u, unsigned) {
    std::vector<std::uint64_t> by_weight(p.n + 1, 0);
    const BitVector rep = p.representative(u);
    Words acc(rep.words().begin(), rep.words().end());
    ++by_weight[popcount(acc.data(), cw)];
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << d2); ++i) {
      const Word* r = c2.data() + static_cast<std::size_t>(std::countr_zero(i)) * cw;
      for (std::size_t c = 0; c < cw; ++c) acc[c] ^= r[c];
      ++by_weight[popcount(acc.data(), cw)];
    }
    auto& hist = out.per_coset[u];
    for (std::size_t w = 0; w <= p.n; ++w)
      if (by_weight[w]) hist[w & mask] += by_weight[w];
  });
  return out;
}

LogicalDiagonal diagonal_from_profile(const PhaseProfile& profile) {
  LogicalDiagonal d;
  d.ell = profile.ell;
  d.label_bits = profile.label_bits;
  d.preserved = true;
  for (const auto& hist : profile.per_coset)
    if (hist.size() != 1) d.preserved = false;
  if (!d.preserved) return d;
  const std::uint64_t modulus = std::uint64_t{1} << d.ell;
  for (const auto& hist : profile.per_coset) d.residues.push_back(hist.begin()->first);
  std::uint64_t g = modulus;
  for (std::uint64_t r : d.residues) g = std::gcd(g, (r + modulus - d.residues[0]) % modulus);
  d.identity = g == modulus;
  d.order = modulus / g;
  return d;
}

LogicalDiagonal transversal_z_action(const CssPair& p, std::size_t ell, unsigned workers) {
  return diagonal_from_profile(phase_profile(p, ell, workers));
}

std::uint64_t logical_order(const LogicalDiagonal& d) {
  if (!d.preserved || !d.order) throw InvalidArgument("logical order is undefined: codespace not preserved");
  return *d.order;
}

bool oblivious_check(const CssPair& p, std::size_t ell_max, unsigned workers) {
  for (std::size_t ell = 1; ell <= ell_max; ++ell) {
    const LogicalDiagonal d = transversal_z_action(p, ell, workers);
    if (!d.preserved || !d.identity) return false;
  }
  return true;
}

PhaseProfile ccz_profile(const CssPair& p, unsigned workers) {
  const std::size_t d2 = p.c2.k();
  const std::size_t k = p.k;
  if (d2 > kCczMaxDimC2 || k > kCczMaxK || 2 * (d2 + k) + k > kCczMaxWork)
    throw ResourceGuardError("CCZ analysis needs dim C2 <= 12, k <= 5 and a bounded pair count");
  const std::size_t cw = words_for(p.n);
  const Words c2 = flatten(p.c2.generator(), cw);
  const Words reps = flatten(p.logical_reps, cw);
  const std::size_t labels = std::size_t{1} << k;
  const std::size_t per_coset = std::size_t{1} << d2;
  std::vector<Words> cosets;
  for (std::size_t u = 0; u < labels; ++u) cosets.push_back(coset_words(p.representative(u), c2, d2, cw));

  // For fixed a, b the parity of wt(a*b*c) over c in rep_w + C2 is the
  // affine functional (a*b).rep_w + (a*b).v: constant when a*b ⊥ C2, and
  // balanced otherwise.
  const unsigned nworkers = resolve(workers);
  const std::size_t triples = labels * labels * labels;
  std::vector<std::vector<std::uint64_t>> acc(nworkers, std::vector<std::uint64_t>(2 * triples, 0));
  const std::size_t tasks = labels * labels * per_coset;
  parallel_for(tasks, nworkers, [&](std::size_t t, unsigned worker) {
    auto& h = acc[worker];
    const std::size_t ia = t % per_coset;
    const std::size_t ux = t / per_coset;
    const std::size_t u = ux % labels;
    const std::size_t x = ux / labels;
    const Word* a = cosets[u].data() + ia * cw;
    Words s(cw);
    for (std::size_t ib = 0; ib < per_coset; ++ib) {
      const Word* b = cosets[x].data() + ib * cw;
      for (std::size_t c = 0; c < cw; ++c) s[c] = a[c] & b[c];
      bool orth = true;
      for (std::size_t j = 0; j < d2 && orth; ++j) {
        Word acc_word = 0;
        for (std::size_t c = 0; c < cw; ++c) acc_word ^= s[c] & c2[j * cw + c];
        orth = std::popcount(acc_word) % 2 == 0;
      }
      std::uint64_t functional = 0;
      for (std::size_t i = 0; i < k; ++i) {
        Word acc_word = 0;
        for (std::size_t c = 0; c < cw; ++c) acc_word ^= s[c] & reps[i * cw + c];
        if (std::popcount(acc_word) % 2) functional |= std::uint64_t{1} << i;
      }
      for (std::size_t w = 0; w < labels; ++w) {
        const std::size_t label = u | (x << k) | (w << (2 * k));
        if (orth) {
          const unsigned parity = static_cast<unsigned>(std::popcount(functional & w) % 2);
          h[2 * label + parity] += per_coset;
        } else {
          h[2 * label] += per_coset / 2;
          h[2 * label + 1] += per_coset / 2;
        }
      }
    }
  });
  PhaseProfile out;
  out.ell = 1;
  out.label_bits = 3 * k;
  out.per_coset.resize(triples);
  for (std::size_t label = 0; label < triples; ++label)
    for (unsigned parity = 0; parity < 2; ++parity) {
      std::uint64_t total = 0;
      for (const auto& h : acc) total += h[2 * label + parity];
      if (total) out.per_coset[label][parity] = total;
    }
  return out;
}

LogicalDiagonal ccz_action(const CssPair& p, unsigned workers) { return diagonal_from_profile(ccz_profile(p, workers)); }

namespace {

// Elements of Z[w], w = exp(2 pi i / 2^ell), as coefficient vectors of
// length 2^(ell-1) in the basis 1, w, w^2, ... with w^(2^(ell-1)) = -1.
void times_root(std::int64_t* a, std::size_t h) {
  const std::int64_t top = a[h - 1];
  for (std::size_t j = h - 1; j > 0; --j) a[j] = a[j - 1];
  a[0] = -top;
}

}  // namespace

LogicalDiagonal statevector_oracle(const CssPair& p, const OracleGate& gate) {
  const bool ccz = gate.kind == OracleGate::Kind::ccz;
  const std::size_t blocks = ccz ? 3 : 1;
  const std::size_t ell = ccz ? 1 : gate.ell;
  const std::size_t n = p.n;
  if (ell < 1 || ell > 8) throw InvalidArgument("oracle rotation level must lie in [1, 8]");
  if (!ccz && n > kOracleMaxGammaN) throw ResourceGuardError("oracle needs n <= 16 for single-block gates");
  if (blocks * n > kOracleMaxQubits) throw ResourceGuardError("oracle needs at most 21 qubits");
  const std::size_t h = std::size_t{1} << (ell - 1);
  const std::size_t nq = blocks * n;
  const std::size_t dim = std::size_t{1} << nq;
  const std::size_t k = p.k;

  // Logical label of each length-n word (or -1 outside C1).
  std::vector<std::int64_t> label_of(std::size_t{1} << n, -1);
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << k); ++u)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.c2.k()); ++m) {
      const BitVector v = p.representative(u) ^ p.c2.encode(m);
      label_of[static_cast<std::size_t>(v.words()[0])] = static_cast<std::int64_t>(u);
    }
  const std::size_t block_mask = (std::size_t{1} << n) - 1;
  std::vector<std::int64_t> full_label(dim, -1);
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::int64_t lab = 0;
    for (std::size_t b = 0; b < blocks && lab >= 0; ++b) {
      const std::int64_t part = label_of[(idx >> (b * n)) & block_mask];
      lab = part < 0 ? -1 : lab | (part << (b * k));
    }
    full_label[idx] = lab;
  }

  const std::size_t labels = std::size_t{1} << (blocks * k);
  const std::int64_t code_size = std::int64_t{1} << (blocks * p.c2.k());
  LogicalDiagonal out;
  out.ell = ell;
  out.label_bits = blocks * k;
  out.preserved = true;
  std::vector<std::int64_t> psi(dim * h);
  std::vector<std::int64_t> proj(labels * h);
  for (std::size_t lab = 0; lab < labels && out.preserved; ++lab) {
    std::fill(psi.begin(), psi.end(), 0);
    for (std::size_t idx = 0; idx < dim; ++idx)
      if (full_label[idx] == static_cast<std::int64_t>(lab)) psi[idx * h] = 1;

    if (ccz) {
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t m = (std::size_t{1} << i) | (std::size_t{1} << (n + i)) | (std::size_t{1} << (2 * n + i));
        for (std::size_t idx = 0; idx < dim; ++idx)
          if ((idx & m) == m) psi[idx] = -psi[idx];
      }
    } else {
      for (std::size_t q = 0; q < nq; ++q)
        for (std::size_t idx = 0; idx < dim; ++idx)
          if ((idx >> q) & 1U) times_root(psi.data() + idx * h, h);
    }

    // <L'|psi> for every logical basis state L'.
    std::fill(proj.begin(), proj.end(), 0);
    for (std::size_t idx = 0; idx < dim; ++idx)
      if (full_label[idx] >= 0)
        for (std::size_t j = 0; j < h; ++j) proj[static_cast<std::size_t>(full_label[idx]) * h + j] += psi[idx * h + j];

    // |C2| psi must equal sum_L' <L'|psi> |L'>.
    for (std::size_t idx = 0; idx < dim && out.preserved; ++idx)
      for (std::size_t j = 0; j < h; ++j) {
        const std::int64_t expect =
            full_label[idx] < 0 ? 0 : proj[static_cast<std::size_t>(full_label[idx]) * h + j];
        if (code_size * psi[idx * h + j] != expect) {
          out.preserved = false;
          break;
        }
      }
    if (!out.preserved) break;

    std::optional<std::uint64_t> residue;
    for (std::size_t other = 0; other < labels; ++other)
      for (std::size_t j = 0; j < h; ++j) {
        const std::int64_t c = proj[other * h + j];
        if (c == 0) continue;
        if (other != lab || residue || (c != code_size && c != -code_size)) {
          out.preserved = false;  // not a diagonal unit-phase action
        } else {
          residue = c > 0 ? j : j + h;
        }
      }
    if (!residue) out.preserved = false;
    if (out.preserved) out.residues.push_back(*residue);
  }
  if (!out.preserved) {
    out.residues.clear();
    return out;
  }
  const std::uint64_t modulus = std::uint64_t{1} << ell;
  std::uint64_t g = modulus;
  for (std::uint64_t r : out.residues) g = std::gcd(g, (r + modulus - out.residues[0]) % modulus);
  out.identity = g == modulus;
  out.order = modulus / g;
  return out;
}

}  // namespace csst
