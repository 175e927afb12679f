#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "csst/gf2.hpp"

namespace csst {

/// Polynomial over GF(2). Coefficient of x^i is bit i.
class Gf2Poly {
 public:
  Gf2Poly() = default;
  static Gf2Poly from_bits(const BitVector& coeffs);
  /// Low-degree-first binary string, e.g. "1101" = 1 + x + x^3.
  static Gf2Poly from_string(std::string_view bits);
  static Gf2Poly monomial(std::size_t degree);
  static Gf2Poly one() { return monomial(0); }
  /// x^n - 1 (= x^n + 1 over GF(2)).
  static Gf2Poly x_pow_minus_one(std::size_t n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool coeff(std::size_t i) const noexcept { return i < coeffs_.size() && coeffs_[i]; }

  std::string to_string() const;
  /// Coefficient vector of length `length` (must exceed the degree).
  BitVector to_bits(std::size_t length) const;

  friend Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b);
  friend Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);
  friend bool operator==(const Gf2Poly& a, const Gf2Poly& b) = default;

  struct DivMod;
  DivMod divmod(const Gf2Poly& divisor) const;
  bool divides(const Gf2Poly& other) const;

  /// Total order: by degree, then by coefficient string read from the top.
  friend bool operator<(const Gf2Poly& a, const Gf2Poly& b);

 private:
  void trim();
  std::vector<char> coeffs_;  // no trailing zero coefficients
};

struct Gf2Poly::DivMod {
  Gf2Poly quotient;
  Gf2Poly remainder;
};

/// Cyclotomic cosets of 2 modulo n, each sorted, ordered by smallest element.
std::vector<std::vector<std::size_t>> cyclotomic_cosets(std::size_t n);

/// Irreducible factors of x^n - 1 for odd n, one per cyclotomic coset, sorted.
std::vector<Gf2Poly> cyclotomic_factors(std::size_t n);

/// All monic divisors of x^n - 1 for odd n >= 3, deduplicated and sorted
/// by degree (ties by coefficients).
std::vector<Gf2Poly> cyclic_divisors(std::size_t n);

}  // namespace csst
