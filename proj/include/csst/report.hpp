#pragma once

#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "csst/css.hpp"
#include "csst/csst.hpp"
#include "csst/phase.hpp"
#include "csst/search.hpp"
#include "csst/triortho.hpp"

namespace csst {

using Json = nlohmann::json;

struct CodeReport {
  std::string construction = "raw";  // raw, nphi, iterate, double, extract, search
  std::optional<CssPair> pair;
  std::optional<CssParams> params;
  std::optional<CssTVerdict> csst;
  std::optional<TriorthogonalWitness> triorthogonal;
  std::map<std::size_t, LogicalDiagonal> phase;
  std::map<std::string, std::string> provenance;
};

/// Bits as a 0/1 string, coordinate 0 first.
std::string bits(const BitVector& v);
/// Label u of `width` bits, bit 0 first.
std::string label_bits(std::uint64_t u, std::size_t width);

Json to_json(const DistanceResult& r);
Json to_json(const CssParams& p);
Json to_json(const CssTVerdict& v);
Json to_json(const TriorthogonalWitness& w);
Json to_json(const LogicalDiagonal& d);
Json to_json(const PhaseProfile& p);
Json to_json(const LinearCode& c);
Json to_json(const CodeReport& r);
Json to_json(const SearchResult& r);
Json error_json(const std::string& violated, const std::string& message);

/// Canonical text: sorted keys, two-space indentation, trailing newline.
std::string report_json(const Json& j);
std::string report_json(const CodeReport& r);

}  // namespace csst
