#pragma once

#include <cstddef>
#include <vector>

#include "csst/css.hpp"

namespace csst {

struct TriorthogonalWitness {
  bool ok = true;
  /// Row indices of the first failing pair or triple.
  std::vector<std::size_t> failing_rows;
};

/// Every pair and every triple of distinct rows has even overlap.
TriorthogonalWitness is_triorthogonal(const BitMatrix& g);

/// C1' = C2 ⊕ rowspace(odd_rows), keeping C2. Refuses with a PreconditionError
/// naming the first violated condition.
CssPair extract_triorthogonal(const CssPair& p, const BitMatrix& odd_rows);

/// Shorten a self-dual code at `index` and add the all-ones vector back.
CssPair ingredient_from_self_dual(const LinearCode& c, std::size_t index);

enum class DoublingMode { strict, extended };

struct DoublingRecipe {
  CssPair css_a;   // [[n1, 1]]: C1 = C2 ⊕ <1>, C2 self-orthogonal, n1 odd
  CssPair trio_b;  // [[n2, 1]] triorthogonal, n2 odd
  DoublingMode mode = DoublingMode::strict;
};

/// Generator rows (x, x, 0), (0, 0, y), (0, 1, w) for C2'' and the odd row
/// (1, 1, w) for C1'', where w is the odd generator of trio_b (all-ones in
/// strict mode).
CssPair doubling(const DoublingRecipe& r);

/// The odd coset generator of a k = 1 pair used as w by doubling().
BitVector odd_generator(const CssPair& p, DoublingMode mode);

/// C2: the four coordinate functions evaluated on the nonzero points of F_2^4;
/// C1 = C2 ⊕ <1_15>.
CssPair fifteen_one_three();

}  // namespace csst
