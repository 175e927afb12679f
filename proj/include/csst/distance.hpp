#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "csst/gf2.hpp"
#include "csst/linear_code.hpp"

namespace csst {

enum class DistanceMethod { automatic, exhaustive, information_set, bound_only };

std::string to_string(DistanceMethod m);
DistanceMethod parse_distance_method(const std::string& s);

/// Outcome of a minimum-weight query. `value` is set only when the bounds
/// meet; `certificate`, when present, has weight `upper_bound`.
struct DistanceResult {
  std::optional<std::size_t> value;
  std::optional<BitVector> certificate;
  DistanceMethod method = DistanceMethod::bound_only;
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;

  bool known() const noexcept { return value.has_value(); }
};

/// Combines two results into one for min(a, b).
DistanceResult min_of(const DistanceResult& a, const DistanceResult& b);

struct DistanceOptions {
  DistanceMethod method = DistanceMethod::automatic;
  std::uint64_t seed = 1;
  /// Largest dimension the exhaustive method accepts.
  std::size_t exhaustive_limit = 28;
  /// `automatic` enumerates exhaustively up to this dimension.
  std::size_t auto_exhaustive_dim = 20;
  /// Wall-clock budget; on expiry the result carries bounds only.
  std::optional<std::chrono::milliseconds> budget;
  /// Stop as soon as the value is proven to lie outside [window_lo, window_hi].
  std::optional<std::size_t> window_lo;
  std::optional<std::size_t> window_hi;
  unsigned workers = 0;  // 0: default_workers()
};

/// d(C) over nonzero codewords. Throws InvalidArgument for k == 0.
DistanceResult min_distance(const LinearCode& code, const DistanceOptions& opts = {});

/// Minimum weight over outer \ inner. Requires inner to be a proper subcode.
DistanceResult coset_min_weight(const LinearCode& outer, const LinearCode& inner, const DistanceOptions& opts = {});

}  // namespace csst
