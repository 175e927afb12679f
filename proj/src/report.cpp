#include "csst/report.hpp"

namespace csst {

namespace {

Json tristate(const std::optional<bool>& b) { return b ? Json(*b) : Json("unknown"); }

Json maybe_int(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json("unknown"); }

}  // namespace

std::string bits(const BitVector& v) { return v.to_string(); }

std::string label_bits(std::uint64_t u, std::size_t width) {
  std::string s(width, '0');
  for (std::size_t i = 0; i < width; ++i)
    if ((u >> i) & 1U) s[i] = '1';
  return s;
}

Json to_json(const DistanceResult& r) {
  Json j;
  j["value"] = maybe_int(r.value);
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound;
  j["method"] = to_string(r.method);
  j["certificate"] = r.certificate ? Json(bits(*r.certificate)) : Json(nullptr);
  return j;
}

Json to_json(const CssParams& p) {
  Json j;
  j["n"] = p.n;
  j["k"] = p.k;
  j["d_x"] = maybe_int(p.d_x.value);
  j["d_z"] = maybe_int(p.d_z.value);
  j["d"] = maybe_int(p.d.value);
  j["x_degenerate"] = tristate(p.x_degenerate);
  j["z_degenerate"] = tristate(p.z_degenerate);
  j["certificates"] = {
      {"x", p.d_x.certificate ? Json(bits(*p.d_x.certificate)) : Json(nullptr)},
      {"z", p.d_z.certificate ? Json(bits(*p.d_z.certificate)) : Json(nullptr)},
  };
  j["distances"] = {
      {"d_x", to_json(p.d_x)},         {"d_z", to_json(p.d_z)},
      {"d_c1", to_json(p.d_c1)},       {"d_c2perp", to_json(p.d_c2perp)},
  };
  return j;
}

Json to_json(const CssTVerdict& v) {
  Json j;
  j["schur_ok"] = tristate(v.schur_ok);
  j["definition_ok"] = tristate(v.definition_ok);
  Json w = Json::array();
  for (const auto& x : v.witness) w.push_back(bits(x));
  j["witness"] = w;
  return j;
}

Json to_json(const TriorthogonalWitness& w) {
  return Json{{"ok", w.ok}, {"failing_rows", w.failing_rows}};
}

Json to_json(const LogicalDiagonal& d) {
  Json j;
  j["preserved"] = d.preserved;
  j["identity"] = d.preserved ? Json(d.identity) : Json("n/a");
  j["order"] = d.order ? Json(*d.order) : Json("n/a");
  Json entries = Json::object();
  const std::string denom = "/" + std::to_string(std::uint64_t{1} << d.ell);
  for (std::size_t u = 0; u < d.residues.size(); ++u)
    entries[label_bits(u, d.label_bits)] = std::to_string(d.residues[u]) + denom;
  j["entries"] = entries;
  j["l"] = d.ell;
  return j;
}

Json to_json(const PhaseProfile& p) {
  Json j = Json::object();
  for (std::size_t u = 0; u < p.per_coset.size(); ++u) {
    Json hist = Json::object();
    for (const auto& [r, count] : p.per_coset[u]) hist[std::to_string(r)] = count;
    j[label_bits(u, p.label_bits)] = hist;
  }
  return j;
}

Json to_json(const LinearCode& c) {
  Json rows = Json::array();
  for (const auto& r : c.generator().rows()) rows.push_back(bits(r));
  return Json{{"n", c.n()}, {"k", c.k()}, {"generator", rows}};
}

Json to_json(const CodeReport& r) {
  Json j;
  j["construction"] = r.construction;
  if (r.pair) j["codes"] = {{"c1", to_json(r.pair->c1)}, {"c2", to_json(r.pair->c2)}};
  if (r.params) j["params"] = to_json(*r.params);
  if (r.csst) j["csst"] = to_json(*r.csst);
  j["triorthogonal"] = r.triorthogonal ? to_json(*r.triorthogonal) : Json("n/a");
  if (!r.phase.empty()) {
    Json ph = Json::object();
    for (const auto& [ell, d] : r.phase) ph[std::to_string(ell)] = to_json(d);
    j["phase"] = ph;
  }
  j["provenance"] = r.provenance;
  return j;
}

Json to_json(const SearchResult& r) {
  Json j;
  j["g1"] = r.g1.to_string();
  j["g2"] = r.g2.to_string();
  j["params"] = to_json(r.params);
  j["csst"] = to_json(r.csst);
  return j;
}

Json error_json(const std::string& violated, const std::string& message) {
  return Json{{"error", message}, {"violated", violated}};
}

std::string report_json(const Json& j) { return j.dump(2) + "\n"; }

std::string report_json(const CodeReport& r) { return report_json(to_json(r)); }

}  // namespace csst
