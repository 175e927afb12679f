#include "csst/csst.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "csst/errors.hpp"
#include "csst/parallel.hpp"

namespace csst {

namespace {

void require_nested(const LinearCode& c1, const LinearCode& c2) {
  if (c1.n() != c2.n()) throw DimensionError("codes of different lengths");
  if (!c1.contains(c2)) throw ContainmentError("C2 is not a subcode of C1");
}

// Basis of { z|_S : z in span(h), Supp(z) ⊆ S }.
BitMatrix shorten_onto(const BitMatrix& h, const BitVector& x) {
  const std::size_t n = x.size();
  const auto support = x.support();
  const std::size_t s = support.size();
  const std::size_t outside = n - s;
  std::vector<std::size_t> pos(n);
  std::size_t next_out = 0;
  std::size_t next_in = outside;
  for (std::size_t i = 0; i < n; ++i) pos[i] = x.get(i) ? next_in++ : next_out++;
  BitMatrix moved(n);
  for (const auto& row : h.rows()) {
    BitVector r(n);
    for (std::size_t i : row.support()) r.set(pos[i]);
    moved.push_back(std::move(r));
  }
  BitMatrix out(s);
  const BitMatrix reduced = rref(moved).matrix;
  for (const auto& row : reduced.rows())
    if (row.first_set() >= outside) out.push_back(row.slice(outside, s));
  return out;
}

bool contains_own_dual(const BitMatrix& d) {
  if (2 * d.n_rows() < d.n_cols()) return false;
  const BitMatrix perp = kernel(d);
  RowReducer span(d);
  for (const auto& row : perp.rows())
    if (!span.contains(row)) return false;
  return true;
}

}  // namespace

CssTVerdict schur_criterion(const LinearCode& c1, const LinearCode& c2) {
  require_nested(c1, c2);
  CssTVerdict v;
  v.schur_ok = true;
  const auto& b = c1.generator().rows();
  const auto& z = c2.generator().rows();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j) {
      const BitVector prod = b[i] & b[j];
      for (const auto& zz : z)
        if (dot(prod, zz)) {
          v.schur_ok = false;
          v.witness = {b[i], b[j], zz};
          return v;
        }
    }
  return v;
}

CssTVerdict definition_check(const LinearCode& c1, const LinearCode& c2, unsigned workers) {
  require_nested(c1, c2);
  if (c2.k() > kDefinitionCheckMaxDim)
    throw ResourceGuardError("definition check enumerates C2; dim " + std::to_string(c2.k()) + " exceeds " +
                             std::to_string(kDefinitionCheckMaxDim));
  CssTVerdict v;
  for (const auto& row : c2.generator().rows())
    if (row.weight() % 2) {
      v.definition_ok = false;
      v.witness = {row};
      return v;
    }

  const BitMatrix& h = c1.parity_check();
  const std::uint64_t total = (std::uint64_t{1} << c2.k()) - 1;
  constexpr std::uint64_t chunk = 1024;
  const std::uint64_t tasks = (total + chunk - 1) / chunk;
  std::atomic<std::uint64_t> first_fail{0};  // 0: none
  parallel_for(tasks, workers, [&](std::size_t t, unsigned) {
    const std::uint64_t lo = t * chunk + 1;
    const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk - 1);
    for (std::uint64_t m = lo; m <= hi; ++m) {
      const std::uint64_t known = first_fail.load();
      if (known && known < m) return;
      if (contains_own_dual(shorten_onto(h, c2.encode(m)))) continue;
      std::uint64_t cur = first_fail.load();
      while ((cur == 0 || m < cur) && !first_fail.compare_exchange_weak(cur, m)) {
      }
      return;
    }
  });
  v.definition_ok = first_fail == 0;
  if (first_fail) v.witness = {c2.encode(first_fail)};
  return v;
}

CssTVerdict csst_verdict(const LinearCode& c1, const LinearCode& c2) {
  CssTVerdict v = schur_criterion(c1, c2);
  if (c2.k() <= kDefinitionCheckMaxDim) {
    CssTVerdict d = definition_check(c1, c2);
    v.definition_ok = d.definition_ok;
    if (v.witness.empty()) v.witness = d.witness;
  }
  return v;
}

PhiMap PhiMap::identity(std::size_t n) {
  PhiMap m;
  m.kind_ = Kind::identity;
  m.n_ = n;
  return m;
}

PhiMap PhiMap::permutation(std::vector<std::size_t> perm) {
  std::vector<char> hit(perm.size(), 0);
  for (std::size_t p : perm) {
    if (p >= perm.size() || hit[p]) throw InvalidArgument("phi permutation is not a bijection");
    hit[p] = 1;
  }
  PhiMap m;
  m.kind_ = Kind::permutation;
  m.n_ = perm.size();
  m.perm_ = std::move(perm);
  return m;
}

PhiMap PhiMap::affine(BitVector a, BitMatrix basis) {
  if (!basis.empty() && basis.n_cols() != a.size()) throw DimensionError("affine phi: basis and shift lengths differ");
  PhiMap m;
  m.kind_ = Kind::affine_basis;
  m.n_ = a.size();
  m.a_ = std::move(a);
  m.basis_ = std::move(basis);
  return m;
}

PhiMap PhiMap::parse(const std::string& spec, std::size_t n) {
  if (spec == "identity") return identity(n);
  if (spec.rfind("perm:", 0) == 0) {
    std::vector<std::size_t> perm;
    std::stringstream ss(spec.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        perm.push_back(static_cast<std::size_t>(std::stoul(item)));
      } catch (const std::exception&) {
        throw InvalidArgument("bad permutation entry '" + item + "'");
      }
    }
    if (perm.size() != n) throw DimensionError("permutation of length " + std::to_string(perm.size()) + " for n = " +
                                               std::to_string(n));
    return permutation(std::move(perm));
  }
  if (spec.rfind("affine:", 0) == 0) {
    BitVector a = BitVector::from_string(spec.substr(7));
    if (a.size() != n) throw DimensionError("affine shift length differs from n");
    return affine(std::move(a));
  }
  throw InvalidArgument("unknown phi '" + spec + "'");
}

std::string PhiMap::to_string() const {
  switch (kind_) {
    case Kind::identity:
      return "identity";
    case Kind::permutation: {
      std::string s = "perm:";
      for (std::size_t i = 0; i < perm_.size(); ++i) s += (i ? "," : "") + std::to_string(perm_[i]);
      return s;
    }
    case Kind::affine_basis:
      return "affine:" + a_.to_string();
  }
  return "?";
}

PhiMap PhiMap::bind(const LinearCode& c1) const {
  if (n_ != c1.n()) throw DimensionError("phi domain length differs from the code length");
  if (kind_ != Kind::affine_basis) return *this;
  PhiMap m = *this;
  if (m.basis_.empty()) m.basis_ = c1.generator();
  const std::size_t dim = m.basis_.n_rows();
  if (rank(m.basis_) != dim) throw InvalidArgument("affine phi basis is linearly dependent");
  BitMatrix aug(n_ + dim);
  for (std::size_t i = 0; i < dim; ++i) aug.push_back(concat(m.basis_[i], BitVector::unit(dim, i)));
  auto r = rref(aug);
  m.coords_ = std::move(r.matrix);
  m.coord_pivots_ = std::move(r.pivots);
  for (const auto& row : c1.generator().rows())
    if (!member(row, m.basis_)) throw InvalidArgument("affine phi is undefined on part of C1");
  return m;
}

BitVector PhiMap::apply(const BitVector& x) const {
  if (x.size() != n_) throw DimensionError("phi applied to a vector of the wrong length");
  switch (kind_) {
    case Kind::identity:
      return x;
    case Kind::permutation:
      return csst::permute(x, perm_);
    case Kind::affine_basis:
      break;
  }
  if (coords_.empty() && !basis_.empty()) throw InvalidArgument("affine phi must be bound to a code first");
  const std::size_t dim = basis_.n_rows();
  BitVector v = concat(x, BitVector(dim));
  for (std::size_t i = 0; i < coord_pivots_.size(); ++i)
    if (v.get(coord_pivots_[i])) v ^= coords_[i];
  if (!v.slice(0, n_).is_zero()) throw InvalidArgument("vector outside the affine phi domain");
  BitVector out = x;
  if (v.slice(n_, dim).weight() % 2) out ^= a_;
  return out;
}

PhiValidation validate_phi(const LinearCode& c1, const LinearCode& c2, const PhiMap& phi) {
  require_nested(c1, c2);
  const PhiMap bound = phi.bind(c1);
  const auto& b = c1.generator().rows();
  const auto& z = c2.generator().rows();
  std::vector<BitVector> pb;
  std::vector<BitVector> pz;
  for (const auto& r : b) pb.push_back(bound.apply(r));
  for (const auto& r : z) pz.push_back(bound.apply(r));
  PhiValidation out;
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j)
      for (std::size_t t = 0; t < z.size(); ++t)
        if (triple_overlap_parity(b[i], b[j], z[t]) != triple_overlap_parity(pb[i], pb[j], pz[t])) {
          out.ok = false;
          out.witness = {b[i], b[j], z[t]};
          return out;
        }
  return out;
}

PhiValidation validate_phi_exhaustive(const LinearCode& c1, const LinearCode& c2, const PhiMap& phi) {
  require_nested(c1, c2);
  if (2 * c1.k() + c2.k() > 26) throw ResourceGuardError("exhaustive phi validation is limited to small codes");
  const PhiMap bound = phi.bind(c1);
  const std::uint64_t n1 = std::uint64_t{1} << c1.k();
  const std::uint64_t n2 = std::uint64_t{1} << c2.k();
  std::vector<BitVector> x1;
  std::vector<BitVector> p1;
  std::vector<BitVector> x2;
  std::vector<BitVector> p2;
  for (std::uint64_t m = 0; m < n1; ++m) {
    x1.push_back(c1.encode(m));
    p1.push_back(bound.apply(x1.back()));
  }
  for (std::uint64_t m = 0; m < n2; ++m) {
    x2.push_back(c2.encode(m));
    p2.push_back(bound.apply(x2.back()));
  }
  PhiValidation out;
  for (std::uint64_t i = 0; i < n1; ++i)
    for (std::uint64_t j = 0; j < n1; ++j) {
      const BitVector xy = x1[i] & x1[j];
      const BitVector pxy = p1[i] & p1[j];
      for (std::uint64_t t = 0; t < n2; ++t)
        if (dot(xy, x2[t]) != dot(pxy, p2[t])) {
          out.ok = false;
          out.witness = {x1[i], x1[j], x2[t]};
          return out;
        }
    }
  return out;
}

LinearCode nphi_code(const LinearCode& c, const PhiMap& phi) {
  const PhiMap bound = phi.bind(c);
  BitMatrix rows(2 * c.n());
  for (const auto& r : c.generator().rows()) rows.push_back(concat(r, bound.apply(r)));
  return LinearCode::from_rows(rows);
}

CssPair nphi(const CssPair& p, const PhiMap& phi) {
  const PhiMap bound = phi.bind(p.c1);
  const PhiValidation v = validate_phi(p.c1, p.c2, bound);
  if (!v.ok)
    throw PreconditionError("phi_parity", "wt(x*y*z) + wt(phi(x)*phi(y)*phi(z)) is odd for some basis triple");
  BitMatrix r1(2 * p.n);
  BitMatrix r2(2 * p.n);
  for (const auto& r : p.c1.generator().rows()) r1.push_back(concat(r, bound.apply(r)));
  for (const auto& r : p.c2.generator().rows()) r2.push_back(concat(r, bound.apply(r)));
  return make_css(LinearCode::from_rows(r1), LinearCode::from_rows(r2));
}

CssPair iterate_n(const CssPair& p, std::size_t levels) {
  if (levels < 1) throw InvalidArgument("iterate_n needs at least one level");
  if (levels > kIterateMaxLevel) throw ResourceGuardError("iterate_n level above " + std::to_string(kIterateMaxLevel));
  if ((p.n << levels) > kIterateMaxLength)
    throw ResourceGuardError("iterate_n output length " + std::to_string(p.n << levels) + " exceeds " +
                             std::to_string(kIterateMaxLength));
  CssPair out = p;
  for (std::size_t i = 0; i < levels; ++i) out = nphi(out, PhiMap::identity(out.n));
  return out;
}

HnParity hn_parity(const CssPair& p) { return hn_parity(p, p.c2.generator(), p.c1.parity_check()); }

HnParity hn_parity(const CssPair& p, const BitMatrix& h_x, const BitMatrix& h_z) {
  const std::size_t n = p.n;
  if ((!h_x.empty() && h_x.n_cols() != n) || (!h_z.empty() && h_z.n_cols() != n))
    throw DimensionError("parity-check width differs from the code length");
  if (!same_row_space(h_x.empty() ? BitMatrix(n) : h_x, p.c2.generator()))
    throw InvalidArgument("H_X does not span C2");
  if (!same_row_space(h_z.empty() ? BitMatrix(n) : h_z, p.c1.parity_check()))
    throw InvalidArgument("H_Z does not span the dual of C1");
  HnParity out;
  out.h_x = BitMatrix(2 * n);
  out.h_z = BitMatrix(2 * n);
  const BitVector zero(n);
  for (const auto& r : h_x.rows()) out.h_x.push_back(concat(r, r));
  for (const auto& r : h_z.rows()) out.h_z.push_back(concat(r, zero));
  for (std::size_t i = 0; i < n; ++i) {
    const BitVector e = BitVector::unit(n, i);
    out.h_z.push_back(concat(e, e));
  }
  out.r_x = h_x.max_row_weight();
  out.r_z = h_z.max_row_weight();
  out.max_weight_x = out.h_x.max_row_weight();
  out.max_weight_z = out.h_z.max_row_weight();
  const CssPair doubled = nphi(p, PhiMap::identity(n));
  out.rowspaces_ok = same_row_space(out.h_x, doubled.c2.generator()) &&
                     same_row_space(out.h_z, kernel(doubled.c1.generator()));
  return out;
}

bool identity_condition(const LinearCode& c1) {
  const auto& b = c1.generator().rows();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i; j < b.size(); ++j) {
      const BitVector prod = b[i] & b[j];
      for (const auto& z : b)
        if (dot(prod, z)) return false;
    }
  return true;
}

}  // namespace csst
