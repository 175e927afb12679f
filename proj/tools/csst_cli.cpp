#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "csst/csst.hpp"
#include "csst/errors.hpp"
#include "csst/io.hpp"
#include "csst/phase.hpp"
#include "csst/report.hpp"
#include "csst/search.hpp"
#include "csst/triortho.hpp"

using namespace csst;

namespace {

enum Exit { kOk = 0, kVerification = 1, kInput = 2, kGuard = 3 };

struct PairSource {
  std::string pair_file;
  std::string c1_file;
  std::string c2_file;
  std::string c1_poly;
  std::string c2_poly;
  std::string fixture;

  void attach(CLI::App* cmd) {
    cmd->add_option("--pair", pair_file, "CSS pair file (C1 block, blank line, C2 block)");
    cmd->add_option("--c1", c1_file, "code file for C1");
    cmd->add_option("--c2", c2_file, "code file for C2");
    cmd->add_option("--c1-poly", c1_poly, "C1 as n;bits");
    cmd->add_option("--c2-poly", c2_poly, "C2 as n;bits");
    cmd->add_option("--fixture", fixture, "built-in pair: 15-1-3");
  }

  CssPair load(std::map<std::string, std::string>& prov) const {
    if (!fixture.empty()) {
      prov["fixture"] = fixture;
      if (fixture == "15-1-3") return fifteen_one_three();
      throw InvalidArgument("unknown fixture '" + fixture + "'");
    }
    if (!pair_file.empty()) {
      prov["pair"] = pair_file;
      return load_css_pair(pair_file);
    }
    LinearCode c1;
    LinearCode c2;
    if (!c1_file.empty()) {
      c1 = load_code(c1_file);
      prov["c1"] = c1_file;
    } else if (!c1_poly.empty()) {
      c1 = parse_poly_spec(c1_poly);
      prov["c1"] = c1_poly;
    } else {
      throw InvalidArgument("no C1 given (use --pair, --c1, --c1-poly or --fixture)");
    }
    if (!c2_file.empty()) {
      c2 = load_code(c2_file);
      prov["c2"] = c2_file;
    } else if (!c2_poly.empty()) {
      c2 = parse_poly_spec(c2_poly);
      prov["c2"] = c2_poly;
    } else {
      throw InvalidArgument("no C2 given");
    }
    return make_css(c1, c2);
  }
};

struct CodeSource {
  std::string file;
  std::string poly;

  void attach(CLI::App* cmd) {
    cmd->add_option("--code", file, "code file");
    cmd->add_option("--poly", poly, "cyclic code as n;bits");
  }

  LinearCode load(std::map<std::string, std::string>& prov) const {
    if (!file.empty()) {
      prov["code"] = file;
      return load_code(file);
    }
    if (!poly.empty()) {
      prov["code"] = poly;
      return parse_poly_spec(poly);
    }
    throw InvalidArgument("no code given (use --code or --poly)");
  }
};

BitMatrix matrix_from_args(const std::vector<std::string>& rows) {
  if (rows.empty()) throw InvalidArgument("matrix needs at least one row");
  return BitMatrix::from_strings(rows);
}

Json rows_json(const BitMatrix& m) {
  Json a = Json::array();
  for (const auto& r : m.rows()) a.push_back(bits(r));
  return a;
}

void emit(const Json& j) { std::cout << report_json(j); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CSS, CSS-T and triorthogonal code construction and verification"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string method = "auto";
  long budget_ms = 0;
  app.add_option("--seed", seed, "seed for randomized procedures")->capture_default_str();
  app.add_option("--method", method, "distance method: auto, exhaustive, information_set, bound_only")
      ->capture_default_str();
  app.add_option("--budget-ms", budget_ms, "wall-clock budget per distance computation (0: none)");

  auto distance_opts = [&] {
    DistanceOptions o;
    o.seed = seed;
    o.method = parse_distance_method(method);
    if (budget_ms > 0) o.budget = std::chrono::milliseconds(budget_ms);
    return o;
  };

  std::function<int()> action;

  // gf2
  auto* gf2 = app.add_subcommand("gf2", "GF(2) linear algebra on rows given as 0/1 strings");
  std::string gf2_op;
  std::vector<std::string> gf2_rows;
  std::string gf2_vec;
  gf2->add_option("op", gf2_op, "rref, rank, kernel or member")->required()->check(
      CLI::IsMember({"rref", "rank", "kernel", "member"}));
  gf2->add_option("rows", gf2_rows, "matrix rows")->required();
  gf2->add_option("--vector", gf2_vec, "vector for member");
  gf2->callback([&] {
    action = [&] {
      const BitMatrix m = matrix_from_args(gf2_rows);
      Json j;
      if (gf2_op == "rref") {
        auto r = rref(m);
        j = {{"rows", rows_json(r.matrix)}, {"rank", r.rank}, {"pivots", r.pivots}};
      } else if (gf2_op == "rank") {
        j = {{"rank", rank(m)}};
      } else if (gf2_op == "kernel") {
        j = {{"rows", rows_json(kernel(m))}};
      } else {
        j = {{"member", member(BitVector::from_string(gf2_vec), m)}};
      }
      emit(j);
      return kOk;
    };
  });

  // code
  auto* code = app.add_subcommand("code", "classical code queries");
  std::string code_op;
  CodeSource code_src;
  code->add_option("op", code_op, "classify or distance")->required()->check(CLI::IsMember({"classify", "distance"}));
  code_src.attach(code);
  code->callback([&] {
    action = [&] {
      std::map<std::string, std::string> prov;
      const LinearCode c = code_src.load(prov);
      Json j = to_json(c);
      if (code_op == "classify") {
        const auto f = classify(c);
        j["classification"] = {{"is_even", f.is_even},
                               {"is_doubly_even", f.is_doubly_even},
                               {"is_self_orthogonal", f.is_self_orthogonal},
                               {"is_self_dual", f.is_self_dual},
                               {"contains_all_ones", f.contains_all_ones}};
      } else {
        j["distance"] = to_json(min_distance(c, distance_opts()));
      }
      j["provenance"] = prov;
      emit(j);
      return kOk;
    };
  });

  // css
  auto* css = app.add_subcommand("css", "CSS parameters of a nested pair");
  PairSource css_src;
  css_src.attach(css);
  css->callback([&] {
    action = [&] {
      CodeReport r;
      const CssPair p = css_src.load(r.provenance);
      r.pair = p;
      r.params = css_params(p, distance_opts());
      Json j = to_json(r);
      const auto checks = parity_check_blocks(p);
      j["parity_checks"] = {{"h_x", rows_json(checks.h_x)}, {"h_z", rows_json(checks.h_z)}};
      emit(j);
      return kOk;
    };
  });

  // csst
  auto* csst_cmd = app.add_subcommand("csst", "CSS-T checks and the N construction");
  std::string csst_op;
  std::string phi_spec = "identity";
  std::size_t levels = 1;
  bool with_params = false;
  PairSource csst_src;
  csst_cmd->add_option("op", csst_op, "check, nphi, iterate or hn")->required()->check(
      CLI::IsMember({"check", "nphi", "iterate", "hn"}));
  csst_cmd->add_option("--phi", phi_spec, "identity, perm:i0,i1,... or affine:<bits>")->capture_default_str();
  csst_cmd->add_option("--l", levels, "iteration count for iterate")->capture_default_str();
  csst_cmd->add_flag("--params", with_params, "also compute CSS parameters of the result");
  csst_src.attach(csst_cmd);
  csst_cmd->callback([&] {
    action = [&]() -> int {
      CodeReport r;
      const CssPair p = csst_src.load(r.provenance);
      if (csst_op == "check") {
        r.pair = p;
        r.csst = csst_verdict(p.c1, p.c2);
        r.construction = "raw";
        emit(to_json(r));
        const bool ok = r.csst->schur_ok.value_or(false) && r.csst->definition_ok.value_or(true);
        return ok ? kOk : kVerification;
      }
      if (csst_op == "hn") {
        const HnParity h = hn_parity(p);
        Json j = {{"h_x", rows_json(h.h_x)},
                  {"h_z", rows_json(h.h_z)},
                  {"r_x", h.r_x},
                  {"r_z", h.r_z},
                  {"max_row_weight_x", h.max_weight_x},
                  {"max_row_weight_z", h.max_weight_z},
                  {"rowspaces_ok", h.rowspaces_ok},
                  {"provenance", r.provenance}};
        emit(j);
        return h.rowspaces_ok ? kOk : kVerification;
      }
      CssPair out;
      if (csst_op == "nphi") {
        const PhiMap phi = PhiMap::parse(phi_spec, p.n);
        out = nphi(p, phi);
        r.construction = "nphi";
        r.provenance["phi"] = phi.to_string();
      } else {
        out = iterate_n(p, levels);
        r.construction = "iterate";
        r.provenance["levels"] = std::to_string(levels);
      }
      r.pair = out;
      r.csst = schur_criterion(out.c1, out.c2);
      if (with_params) r.params = css_params(out, distance_opts());
      emit(to_json(r));
      return r.csst->schur_ok.value_or(false) ? kOk : kVerification;
    };
  });

  // trio
  auto* trio = app.add_subcommand("trio", "triorthogonal checks and constructions");
  std::string trio_op;
  std::vector<std::string> trio_rows;
  std::string odd_file;
  std::string db_file;
  std::string db_name;
  std::size_t shorten_at = 0;
  std::string mode = "strict";
  PairSource trio_src;
  PairSource trio_b;
  trio->add_option("op", trio_op, "check, extract, ingredient or double")->required()->check(
      CLI::IsMember({"check", "extract", "ingredient", "double"}));
  trio->add_option("--rows", trio_rows, "matrix rows for check");
  trio->add_option("--odd", odd_file, "code file holding the odd rows for extract");
  trio->add_option("--db", db_file, "self-dual database for ingredient/double");
  trio->add_option("--name", db_name, "database entry");
  trio->add_option("--index", shorten_at, "shortening coordinate")->capture_default_str();
  trio->add_option("--mode", mode, "doubling mode: strict or extended")->check(CLI::IsMember({"strict", "extended"}));
  trio_src.attach(trio);
  trio->add_option("--b-pair", trio_b.pair_file, "triorthogonal ingredient pair file for double");
  trio->add_option("--b-fixture", trio_b.fixture, "built-in triorthogonal ingredient: 15-1-3");
  trio->add_flag("--params", with_params, "also compute CSS parameters of the result");
  trio->callback([&] {
    action = [&]() -> int {
      CodeReport r;
      if (trio_op == "check") {
        const auto w = is_triorthogonal(matrix_from_args(trio_rows));
        emit(to_json(w));
        return w.ok ? kOk : kVerification;
      }
      auto from_db = [&]() {
        if (db_file.empty()) throw InvalidArgument("--db is required");
        for (const auto& e : load_selfdual_db(db_file))
          if (db_name.empty() || e.name == db_name) {
            r.provenance["db"] = db_file + "#" + e.name;
            r.provenance["index"] = std::to_string(shorten_at);
            return ingredient_from_self_dual(e.code, shorten_at);
          }
        throw InvalidArgument("no database entry named '" + db_name + "'");
      };
      CssPair out;
      if (trio_op == "extract") {
        const CssPair p = trio_src.load(r.provenance);
        const LinearCode odd = load_code(odd_file);
        out = extract_triorthogonal(p, odd.generator());
        r.construction = "extract";
        BitMatrix stack = BitMatrix::vstack(odd.generator(), out.c2.generator());
        r.triorthogonal = is_triorthogonal(stack);
      } else if (trio_op == "ingredient") {
        out = from_db();
        r.construction = "ingredient";
      } else {
        const CssPair a = db_file.empty() ? trio_src.load(r.provenance) : from_db();
        std::map<std::string, std::string> bprov;
        const CssPair b = trio_b.load(bprov);
        for (const auto& [key, value] : bprov) r.provenance["b_" + key] = value;
        const DoublingMode m = mode == "strict" ? DoublingMode::strict : DoublingMode::extended;
        out = doubling({a, b, m});
        r.construction = "double";
        r.provenance["mode"] = mode;
        BitMatrix stack(out.n);
        stack.push_back(out.logical_reps[0]);
        r.triorthogonal = is_triorthogonal(BitMatrix::vstack(stack, out.c2.generator()));
      }
      r.pair = out;
      r.csst = schur_criterion(out.c1, out.c2);
      if (with_params) r.params = css_params(out, distance_opts());
      emit(to_json(r));
      return kOk;
    };
  });

  // phase, ccz, oblivious
  auto* phase = app.add_subcommand("phase", "transversal diagonal Z-rotation analysis");
  std::size_t ell = 3;
  bool oracle = false;
  PairSource phase_src;
  phase->add_option("--l", ell, "rotation level (3 = T)")->capture_default_str();
  phase->add_flag("--oracle", oracle, "cross-check with the statevector oracle");
  phase_src.attach(phase);
  phase->callback([&] {
    action = [&]() -> int {
      CodeReport r;
      const CssPair p = phase_src.load(r.provenance);
      const PhaseProfile prof = phase_profile(p, ell);
      const LogicalDiagonal d = diagonal_from_profile(prof);
      Json j = to_json(d);
      j["profiles"] = to_json(prof);
      j["provenance"] = r.provenance;
      int code_out = kOk;
      if (oracle) {
        const LogicalDiagonal o = statevector_oracle(p, OracleGate::gamma(ell));
        j["oracle_agrees"] = o == d;
        if (!(o == d)) code_out = kVerification;
      }
      emit(j);
      return code_out;
    };
  });

  auto* ccz = app.add_subcommand("ccz", "transversal CCZ across three blocks");
  PairSource ccz_src;
  ccz_src.attach(ccz);
  ccz->add_flag("--oracle", oracle, "cross-check with the statevector oracle");
  ccz->callback([&] {
    action = [&]() -> int {
      CodeReport r;
      const CssPair p = ccz_src.load(r.provenance);
      const PhaseProfile prof = ccz_profile(p);
      const LogicalDiagonal d = diagonal_from_profile(prof);
      Json j = to_json(d);
      j["profiles"] = to_json(prof);
      j["provenance"] = r.provenance;
      int code_out = kOk;
      if (oracle) {
        const LogicalDiagonal o = statevector_oracle(p, OracleGate::ccz());
        j["oracle_agrees"] = o == d;
        if (!(o == d)) code_out = kVerification;
      }
      emit(j);
      return code_out;
    };
  });

  auto* obl = app.add_subcommand("oblivious", "identity action for every rotation level up to lmax");
  std::size_t lmax = 3;
  PairSource obl_src;
  obl->add_option("--lmax", lmax, "largest rotation level")->capture_default_str();
  obl_src.attach(obl);
  obl->callback([&] {
    action = [&]() -> int {
      CodeReport r;
      const CssPair p = obl_src.load(r.provenance);
      const bool ok = oblivious_check(p, lmax);
      emit(Json{{"oblivious", ok}, {"lmax", lmax}, {"provenance", r.provenance}});
      return ok ? kOk : kVerification;
    };
  });

  // search
  auto* search = app.add_subcommand("search", "CSS-T codes from nested cyclic pairs via the N construction");
  std::size_t half = 7;
  std::vector<std::size_t> target;
  std::size_t max_pairs = 0;
  search->add_option("--n", half, "odd cyclic length")->capture_default_str();
  search->add_option("--target", target, "n_q k d")->expected(3);
  search->add_option("--max-pairs", max_pairs, "stop after this many pairs (0: all)");
  search->callback([&] {
    action = [&]() -> int {
      SearchTask t;
      t.n = half;
      t.distance = distance_opts();
      if (!target.empty()) t.target = SearchTarget{target[0], target[1], target[2]};
      if (max_pairs) t.max_pairs = max_pairs;
      const auto results = search_cyclic_csst(t);
      Json list = Json::array();
      for (const auto& res : results) list.push_back(to_json(res));
      emit(Json{{"n", half}, {"seed", seed}, {"results", list}, {"count", results.size()}});
      return t.target && results.empty() ? kVerification : kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }

  try {
    return action ? action() : kInput;
  } catch (const PreconditionError& e) {
    emit(error_json(e.condition(), e.what()));
    return kVerification;
  } catch (const ResourceGuardError& e) {
    emit(error_json("resource_guard", e.what()));
    return kGuard;
  } catch (const ParseError& e) {
    emit(error_json("parse", e.what()));
    return kInput;
  } catch (const std::invalid_argument& e) {
    emit(error_json("input", e.what()));
    return kInput;
  }
}
