#include "csst/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "csst/errors.hpp"

namespace csst {

void Gf2Poly::trim() {
  while (!coeffs_.empty() && !coeffs_.back()) coeffs_.pop_back();
}

Gf2Poly Gf2Poly::from_bits(const BitVector& coeffs) {
  Gf2Poly p;
  p.coeffs_.resize(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.coeffs_[i] = coeffs.get(i);
  p.trim();
  return p;
}

Gf2Poly Gf2Poly::from_string(std::string_view bits) { return from_bits(BitVector::from_string(bits)); }

Gf2Poly Gf2Poly::monomial(std::size_t degree) {
  Gf2Poly p;
  p.coeffs_.assign(degree + 1, 0);
  p.coeffs_[degree] = 1;
  return p;
}

Gf2Poly Gf2Poly::x_pow_minus_one(std::size_t n) { return monomial(n) + one(); }

std::string Gf2Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string s(coeffs_.size(), '0');
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i]) s[i] = '1';
  return s;
}

BitVector Gf2Poly::to_bits(std::size_t length) const {
  if (static_cast<long>(length) <= degree()) throw DimensionError("polynomial does not fit requested length");
  BitVector v(length);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i]) v.set(i);
  return v;
}

Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly out;
  out.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] ^= a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] ^= b.coeffs_[i];
  out.trim();
  return out;
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
  Gf2Poly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    if (a.coeffs_[i])
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out.coeffs_[i + j] ^= b.coeffs_[j];
  out.trim();
  return out;
}

Gf2Poly::DivMod Gf2Poly::divmod(const Gf2Poly& divisor) const {
  if (divisor.is_zero()) throw InvalidArgument("polynomial division by zero");
  DivMod r;
  r.remainder = *this;
  const long dd = divisor.degree();
  if (degree() < dd) return r;
  r.quotient.coeffs_.assign(static_cast<std::size_t>(degree() - dd + 1), 0);
  auto& rem = r.remainder.coeffs_;
  for (long i = degree(); i >= dd; --i) {
    if (!rem[static_cast<std::size_t>(i)]) continue;
    const auto shift = static_cast<std::size_t>(i - dd);
    r.quotient.coeffs_[shift] = 1;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j) rem[shift + j] ^= divisor.coeffs_[j];
  }
  r.quotient.trim();
  r.remainder.trim();
  return r;
}

bool Gf2Poly::divides(const Gf2Poly& other) const { return other.divmod(*this).remainder.is_zero(); }

bool operator<(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;)
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  return false;
}

namespace {

// GF(2^m) arithmetic on bit-packed residues modulo a degree-m polynomial.
struct ExtensionField {
  unsigned m;
  std::uint64_t modulus;  // includes the x^m term

  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0;
    const std::uint64_t top = std::uint64_t{1} << m;
    while (b) {
      if (b & 1U) r ^= a;
      b >>= 1;
      a <<= 1;
      if (a & top) a ^= modulus;
    }
    return r;
  }

  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1U) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p) continue;
    out.push_back(p);
    while (v % p == 0) v /= p;
  }
  if (v > 1) out.push_back(v);
  return out;
}

unsigned multiplicative_order_of_two(std::size_t n) {
  unsigned m = 1;
  std::size_t v = 2 % n;
  while (v != 1) {
    v = (v * 2) % n;
    ++m;
  }
  return m;
}

// Smallest polynomial of degree m for which x generates the full
// multiplicative group; such a modulus is necessarily irreducible.
ExtensionField primitive_field(unsigned m) {
  const std::uint64_t order = (std::uint64_t{1} << m) - 1;
  const auto factors = prime_factors(order);
  for (std::uint64_t low = 1; low < (std::uint64_t{1} << m); low += 2) {
    ExtensionField f{m, (std::uint64_t{1} << m) | low};
    const std::uint64_t x = m == 1 ? 1 : 2;  // residue of x (for m = 1 the field is GF(2))
    if (f.pow(x, order) != 1) continue;
    bool primitive = true;
    for (auto q : factors)
      if (f.pow(x, order / q) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return f;
  }
  throw InvalidArgument("no primitive polynomial found");
}

}  // namespace

std::vector<std::vector<std::size_t>> cyclotomic_cosets(std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclotomic cosets need n >= 1");
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::size_t>> cosets;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> c;
    std::size_t v = s;
    do {
      c.push_back(v);
      seen[v] = 1;
      v = (v * 2) % n;
    } while (v != s);
    std::sort(c.begin(), c.end());
    cosets.push_back(std::move(c));
  }
  return cosets;
}

std::vector<Gf2Poly> cyclotomic_factors(std::size_t n) {
  if (n % 2 == 0) throw InvalidArgument("even length " + std::to_string(n) + " has repeated factors; unsupported");
  if (n == 1) return {Gf2Poly::from_string("11")};
  const unsigned m = multiplicative_order_of_two(n);
  if (m > 62) throw ResourceGuardError("extension degree too large");
  const ExtensionField f = primitive_field(m);
  const std::uint64_t beta = m == 1 ? 1 : 2;
  const std::uint64_t alpha = f.pow(beta, ((std::uint64_t{1} << m) - 1) / n);

  std::vector<Gf2Poly> factors;
  for (const auto& coset : cyclotomic_cosets(n)) {
    // prod over j in coset of (x + alpha^j), coefficients in GF(2^m)
    std::vector<std::uint64_t> poly{1};
    for (std::size_t j : coset) {
      const std::uint64_t root = f.pow(alpha, j);
      std::vector<std::uint64_t> next(poly.size() + 1, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + 1] ^= poly[i];
        next[i] ^= f.mul(poly[i], root);
      }
      poly = std::move(next);
    }
    BitVector bits(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i] > 1) throw InvalidArgument("minimal polynomial left GF(2)");
      if (poly[i]) bits.set(i);
    }
    factors.push_back(Gf2Poly::from_bits(bits));
  }
  std::sort(factors.begin(), factors.end());
  return factors;
}

std::vector<Gf2Poly> cyclic_divisors(std::size_t n) {
  if (n % 2 == 0) throw InvalidArgument("even length " + std::to_string(n) + " has repeated factors; unsupported");
  if (n < 3) throw InvalidArgument("cyclic divisors need n >= 3");
  const auto factors = cyclotomic_factors(n);
  if (factors.size() > 20) throw ResourceGuardError("too many irreducible factors to enumerate divisors");
  std::vector<Gf2Poly> divisors;
  const std::size_t count = std::size_t{1} << factors.size();
  divisors.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    Gf2Poly g = Gf2Poly::one();
    for (std::size_t i = 0; i < factors.size(); ++i)
      if ((mask >> i) & 1U) g = g * factors[i];
    divisors.push_back(std::move(g));
  }
  std::sort(divisors.begin(), divisors.end());
  divisors.erase(std::unique(divisors.begin(), divisors.end()), divisors.end());
  return divisors;
}

}  // namespace csst
