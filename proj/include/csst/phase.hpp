#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "csst/css.hpp"

namespace csst {

/// For each logical label u, the multiset { wt(v + uH) mod 2^ell : v in C2 }
/// as residue -> multiplicity. For CCZ profiles ell = 1 and labels carry
/// 3k bits (u | x << k | w << 2k).
struct PhaseProfile {
  std::size_t ell = 0;
  std::size_t label_bits = 0;
  std::vector<std::map<std::uint64_t, std::uint64_t>> per_coset;
};

/// Logical action of a diagonal transversal gate. Entry u is
/// exp(2 pi i residues[u] / 2^ell); the u = 0 entry is the global phase.
struct LogicalDiagonal {
  std::size_t ell = 0;
  std::size_t label_bits = 0;
  bool preserved = false;
  std::vector<std::uint64_t> residues;  // empty unless preserved
  bool identity = false;
  std::optional<std::uint64_t> order;

  friend bool operator==(const LogicalDiagonal&, const LogicalDiagonal&) = default;
};

inline constexpr std::size_t kPhaseMaxDimC2 = 24;
inline constexpr std::size_t kPhaseMaxK = 16;
inline constexpr std::size_t kPhaseMaxWork = 32;  // log2 of words enumerated
inline constexpr std::size_t kPhaseMaxEll = 16;

PhaseProfile phase_profile(const CssPair& p, std::size_t ell, unsigned workers = 0);
LogicalDiagonal diagonal_from_profile(const PhaseProfile& profile);
LogicalDiagonal transversal_z_action(const CssPair& p, std::size_t ell, unsigned workers = 0);

/// Throws InvalidArgument when the codespace is not preserved.
std::uint64_t logical_order(const LogicalDiagonal& d);

/// Every level 1..ell_max acts as the logical identity; ell_max = 0 is true.
bool oblivious_check(const CssPair& p, std::size_t ell_max, unsigned workers = 0);

inline constexpr std::size_t kCczMaxDimC2 = 12;
inline constexpr std::size_t kCczMaxK = 5;
inline constexpr std::size_t kCczMaxWork = 30;  // log2 of (a, b) pairs times labels

/// Transversal CCZ across three blocks, qubits (i, n + i, 2n + i).
PhaseProfile ccz_profile(const CssPair& p, unsigned workers = 0);
LogicalDiagonal ccz_action(const CssPair& p, unsigned workers = 0);

struct OracleGate {
  enum class Kind { gamma, ccz };
  Kind kind = Kind::gamma;
  std::size_t ell = 3;

  static OracleGate gamma(std::size_t level) { return {Kind::gamma, level}; }
  static OracleGate ccz() { return {Kind::ccz, 1}; }
};

inline constexpr std::size_t kOracleMaxQubits = 21;
inline constexpr std::size_t kOracleMaxGammaN = 16;

/// Dense simulation with exact cyclotomic-integer amplitudes: encode every
/// logical basis state, apply the gate, and compare with the projection back
/// onto the codespace.
LogicalDiagonal statevector_oracle(const CssPair& p, const OracleGate& gate);

}  // namespace csst
