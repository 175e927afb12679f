#include "csst/triortho.hpp"

#include "csst/csst.hpp"
#include "csst/errors.hpp"

namespace csst {

TriorthogonalWitness is_triorthogonal(const BitMatrix& g) {
  TriorthogonalWitness w;
  const auto& r = g.rows();
  const std::size_t m = r.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (dot(r[a], r[b])) {
        w.ok = false;
        w.failing_rows = {a, b};
        return w;
      }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      const BitVector ab = r[a] & r[b];
      for (std::size_t c = b + 1; c < m; ++c)
        if (dot(ab, r[c])) {
          w.ok = false;
          w.failing_rows = {a, b, c};
          return w;
        }
    }
  return w;
}

namespace {

BitMatrix stacked(const BitMatrix& top, const LinearCode& c2) { return BitMatrix::vstack(top, c2.generator()); }

}  // namespace

CssPair extract_triorthogonal(const CssPair& p, const BitMatrix& odd_rows) {
  if (odd_rows.empty()) throw PreconditionError("odd_rows", "no odd-weight row supplied");
  if (odd_rows.n_cols() != p.n) throw DimensionError("odd rows have the wrong length");
  if (!schur_criterion(p.c1, p.c2).schur_ok.value_or(false))
    throw PreconditionError("csst", "the pair fails the Schur criterion");
  RowReducer span(p.c2.generator());
  for (const auto& row : odd_rows.rows()) {
    if (row.weight() % 2 == 0) throw PreconditionError("odd_weight", "row " + row.to_string() + " has even weight");
    if (!p.c1.contains(row)) throw PreconditionError("in_c1", "row " + row.to_string() + " is not in C1");
    if (!span.insert(row)) throw PreconditionError("independent_mod_c2", "rows are dependent modulo C2");
  }
  if (!is_triorthogonal(odd_rows).ok) throw PreconditionError("triorthogonal_rows", "odd rows are not triorthogonal");
  if (!is_triorthogonal(stacked(odd_rows, p.c2)).ok)
    throw PreconditionError("triorthogonal_stack", "odd rows stacked on C2 are not triorthogonal");
  return make_css(LinearCode::from_rows(BitMatrix::vstack(odd_rows, p.c2.generator())), p.c2);
}

CssPair ingredient_from_self_dual(const LinearCode& c, std::size_t index) {
  if (!classify(c).is_self_dual) throw PreconditionError("self_dual", "input code is not self-dual");
  const LinearCode c2 = shorten(c, index);
  const LinearCode c1 = augment(c2, BitVector::ones(c2.n()));
  return make_css(c1, c2);
}

BitVector odd_generator(const CssPair& p, DoublingMode mode) {
  if (p.k != 1) throw PreconditionError("k_one", "pair must encode exactly one qubit");
  const BitVector ones = BitVector::ones(p.n);
  if (p.c1.contains(ones) && !p.c2.contains(ones)) return ones;
  if (mode == DoublingMode::strict)
    throw PreconditionError("all_ones_coset", "all-ones is not a logical representative (strict mode)");
  const BitVector w = p.logical_reps[0];
  if (w.weight() % 2 == 0) throw PreconditionError("odd_weight", "logical representative has even weight");
  return w;
}

CssPair doubling(const DoublingRecipe& r) {
  const CssPair& a = r.css_a;
  const CssPair& b = r.trio_b;
  const std::size_t n1 = a.n;
  const std::size_t n2 = b.n;
  if (n1 % 2 == 0) throw PreconditionError("n1_odd", "first ingredient has even length");
  if (n2 % 2 == 0) throw PreconditionError("n2_odd", "second ingredient has even length");
  if (a.k != 1) throw PreconditionError("k_one", "first ingredient must encode one qubit");
  if (!classify(a.c2).is_self_orthogonal) throw PreconditionError("self_orthogonal", "C2 of the first ingredient");
  const BitVector ones1 = BitVector::ones(n1);
  if (!a.c1.contains(ones1) || a.c2.contains(ones1))
    throw PreconditionError("all_ones_coset", "C1 of the first ingredient is not C2 + <1>");
  const BitVector w = odd_generator(b, r.mode);
  BitMatrix b_stack(n2);
  b_stack.push_back(w);
  if (!is_triorthogonal(stacked(b_stack, b.c2)).ok)
    throw PreconditionError("triorthogonal", "second ingredient is not triorthogonal");

  const std::size_t len = 2 * n1 + n2;
  const BitVector z1(n1);
  const BitVector z2(n2);
  BitMatrix g2(len);
  for (const auto& x : a.c2.generator().rows()) g2.push_back(concat({&x, &x, &z2}));
  for (const auto& y : b.c2.generator().rows()) g2.push_back(concat({&z1, &z1, &y}));
  g2.push_back(concat({&z1, &ones1, &w}));
  BitMatrix g1 = g2;
  g1.push_back(concat({&ones1, &ones1, &w}));

  CssPair out = make_css(LinearCode::from_rows(g1), LinearCode::from_rows(g2));
  if (out.c2.k() != a.c2.k() + b.c2.k() + 1 || out.k != 1)
    throw PreconditionError("dimension", "doubled code has unexpected dimensions");
  if (!schur_criterion(out.c1, out.c2).schur_ok.value_or(false))
    throw PreconditionError("output_csst", "doubled pair fails the Schur criterion");
  BitMatrix odd(len);
  odd.push_back(concat({&ones1, &ones1, &w}));
  if (!is_triorthogonal(stacked(odd, out.c2)).ok)
    throw PreconditionError("output_triorthogonal", "doubled generator is not triorthogonal");
  return out;
}

CssPair fifteen_one_three() {
  BitMatrix rows(15);
  for (std::size_t bit = 0; bit < 4; ++bit) {
    BitVector r(15);
    for (std::size_t p = 1; p <= 15; ++p)
      if ((p >> bit) & 1U) r.set(p - 1);
    rows.push_back(std::move(r));
  }
  const LinearCode c2 = LinearCode::from_rows(rows);
  return make_css(augment(c2, BitVector::ones(15)), c2);
}

}  // namespace csst
