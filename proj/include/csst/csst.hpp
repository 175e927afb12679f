#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "csst/css.hpp"

namespace csst {

struct CssTVerdict {
  std::optional<bool> schur_ok;
  std::optional<bool> definition_ok;
  /// Schur failure: (b_i, b_j, z) with (b_i * b_j) . z = 1.
  /// Definition failure: the offending x in C2.
  std::vector<BitVector> witness;
};

/// C1^{*2} ⊆ C2^perp, checked on basis products.
CssTVerdict schur_criterion(const LinearCode& c1, const LinearCode& c2);

/// Largest dim C2 the definition check enumerates.
inline constexpr std::size_t kDefinitionCheckMaxDim = 24;

/// C2 even, and for every nonzero x in C2 the shortening D_x of C1^perp onto
/// Supp(x) contains its own dual. Throws ResourceGuardError above the limit.
CssTVerdict definition_check(const LinearCode& c1, const LinearCode& c2, unsigned workers = 0);

/// Both checks; the definition check is left undecided above its limit.
CssTVerdict csst_verdict(const LinearCode& c1, const LinearCode& c2);

class PhiMap {
 public:
  enum class Kind { identity, permutation, affine_basis };

  static PhiMap identity(std::size_t n);
  /// Coordinate i of x moves to perm[i].
  static PhiMap permutation(std::vector<std::size_t> perm);
  /// phi(sum c_i b_i) = sum c_i (b_i + a); an empty basis means "the basis of C1".
  static PhiMap affine(BitVector a, BitMatrix basis = BitMatrix());

  /// Parses `identity`, `perm:3,0,1,2` or `affine:<a-bits>`.
  static PhiMap parse(const std::string& spec, std::size_t n);

  Kind kind() const noexcept { return kind_; }
  std::size_t domain_length() const noexcept { return n_; }
  const std::vector<std::size_t>& perm() const noexcept { return perm_; }
  const BitVector& shift() const noexcept { return a_; }
  std::string to_string() const;

  /// Fixes an unspecified affine basis to the generator of C1 and checks
  /// that C1 lies in the domain. Throws InvalidArgument otherwise.
  PhiMap bind(const LinearCode& c1) const;
  BitVector apply(const BitVector& x) const;

 private:
  Kind kind_ = Kind::identity;
  std::size_t n_ = 0;
  std::vector<std::size_t> perm_;
  BitVector a_;
  BitMatrix basis_;
  BitMatrix coords_;  // [basis | I] reduced, for reading off coefficients
  std::vector<std::size_t> coord_pivots_;
};

struct PhiValidation {
  bool ok = true;
  std::vector<BitVector> witness;  // failing (x, y, z)
};

/// Parity condition wt(x*y*z) + wt(phi x * phi y * phi z) = 0 mod 2 on basis
/// triples x, y of C1 and z of C2.
PhiValidation validate_phi(const LinearCode& c1, const LinearCode& c2, const PhiMap& phi);
/// The same condition over every x, y in C1 and z in C2 (dim C1 <= 10).
PhiValidation validate_phi_exhaustive(const LinearCode& c1, const LinearCode& c2, const PhiMap& phi);

/// {(x, phi x)} applied to both codes; refuses maps that fail validation.
CssPair nphi(const CssPair& p, const PhiMap& phi);
/// Image of a code under x -> (x, phi x).
LinearCode nphi_code(const LinearCode& c, const PhiMap& phi);

inline constexpr std::size_t kIterateMaxLevel = 12;
inline constexpr std::size_t kIterateMaxLength = std::size_t{1} << 16;

CssPair iterate_n(const CssPair& p, std::size_t levels);

struct HnParity {
  BitMatrix h_x;  // [H_X  H_X]
  BitMatrix h_z;  // [[H_Z, 0], [I, I]]
  std::size_t r_x = 0;
  std::size_t r_z = 0;
  std::size_t max_weight_x = 0;
  std::size_t max_weight_z = 0;
  bool rowspaces_ok = false;
};

HnParity hn_parity(const CssPair& p);
/// Same assembly from caller-supplied (possibly sparse) checks; they must
/// span C2 and C1^perp respectively.
HnParity hn_parity(const CssPair& p, const BitMatrix& h_x, const BitMatrix& h_z);

/// C1^{*2} ⊆ C1^perp.
bool identity_condition(const LinearCode& c1);

}  // namespace csst
