#include "nlocus/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "nlocus/io.hpp"

namespace nlocus {

namespace {

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ExactError("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

// inline JSON (leading '{') or a file path
Json load_json_arg(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return Json::parse(arg);
  return load_json_file(arg);
}

struct SectionArgs {
  std::string point;       // "(0,1,1)" tuple
  std::string point_file;  // Section JSON
  std::string convention = "monomial";
  int m = 0;
  std::string space;  // p1 | p2

  void add_to(CLI::App* cmd, bool with_space = true) {
    cmd->add_option("--point", point, "coordinate tuple, e.g. '(0,1,1)'");
    cmd->add_option("--point-file", point_file, "Section JSON file");
    cmd->add_option("--convention", convention, "tuple convention: monomial|salmon");
    if (with_space) {
      cmd->add_option("--space", space, "ambient space: p1|p2");
      cmd->add_option("-m,--dimension", m, "ambient projective dimension");
    }
  }

  int dimension() const {
    if (!space.empty()) {
      if (space == "p1") return 1;
      if (space == "p2") return 2;
      throw ExactError("unknown space '" + space + "' (use p1, p2 or --dimension)");
    }
    if (m > 0) return m;
    throw ExactError("specify --space or --dimension");
  }

  Section load() const {
    if (!point_file.empty()) return section_from_json(load_json_arg(point_file));
    if (point.empty()) throw ExactError("specify --point or --point-file");
    Convention conv = convention == "salmon" ? Convention::Salmon : Convention::Monomial;
    return parse_point_tuple(dimension(), conv, point);
  }
};

struct DeltaArgs {
  std::string delta;
  std::string delta_file;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--delta", delta, "operator expression, e.g. 'd0^2-d1*d2'");
    cmd->add_option("--delta-file", delta_file, "operator JSON file");
  }

  DiffOp load(int m) const {
    if (!delta_file.empty()) return diffop_from_json(load_json_arg(delta_file));
    if (delta.empty()) throw ExactError("specify --delta or --delta-file");
    return parse_diffop(m, delta);
  }
};

FirstOrderOp load_lambda(const std::string& arg) {
  if (arg.empty()) throw ExactError("specify --lambda");
  return firstorder_from_json(load_json_arg(arg));
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact tools for differential zeros of Calabi-Yau hypersurface periods"};
  app.require_subcommand(1);

  // invariants
  auto* inv_cmd = app.add_subcommand("invariants", "Aronhold S, T, discriminant and smoothness");
  SectionArgs inv_sec;
  std::string cubic_file;
  inv_cmd->add_option("--cubic", cubic_file, "Section JSON file for the cubic");
  inv_sec.add_to(inv_cmd, false);
  inv_sec.m = 2;

  // membership
  auto* mem_cmd = app.add_subcommand("membership", "rank-condition membership certificate");
  SectionArgs mem_sec;
  DeltaArgs mem_delta;
  mem_sec.add_to(mem_cmd);
  mem_delta.add_to(mem_cmd);
  int pad_degree = -1, max_rows = 20000;
  bool assume_smooth = false, serial = false;
  std::string export_matrix, matrix_kind = "evaluated";
  mem_cmd->add_option("--pad-degree", pad_degree, "witness degree bound override");
  mem_cmd->add_option("--max-rows", max_rows, "guardrail on dim R_{<=d}");
  mem_cmd->add_flag("--assume-smooth", assume_smooth, "vouch for smoothness (m >= 3)");
  mem_cmd->add_flag("--serial", serial, "use the serial elimination kernel");
  mem_cmd->add_option("--export-matrix", export_matrix, "write the matrix as JSON");
  mem_cmd->add_option("--matrix-kind", matrix_kind, "export kind: symbolic|evaluated");

  // stratify
  auto* strat_cmd = app.add_subcommand("stratify", "rank table over a list of points");
  std::string points_file;
  int strat_d = 1, jobs = 1;
  bool strat_assume = false;
  int strat_max_rows = 20000;
  strat_cmd->add_option("--points", points_file, "JSON array of Section objects")->required();
  strat_cmd->add_option("--d", strat_d, "degree bound");
  strat_cmd->add_option("--jobs", jobs, "evaluate points concurrently");
  strat_cmd->add_flag("--assume-smooth", strat_assume, "vouch for smoothness (m >= 3)");
  strat_cmd->add_option("--max-rows", strat_max_rows, "guardrail on dim R_{<=d}");

  // zerolocus
  auto* zl_cmd = app.add_subcommand("zerolocus", "defining equations deltaS, deltaT");
  std::string zl_lambda;
  zl_cmd->add_option("--lambda", zl_lambda, "FirstOrderOp JSON (inline or file)")->required();

  // search
  auto* search_cmd = app.add_subcommand("search", "find a point of the first-order zero locus");
  std::string search_lambda, plane_file;
  SearchOptions sopts;
  search_cmd->add_option("--lambda", search_lambda, "FirstOrderOp JSON (inline or file)")->required();
  search_cmd->add_option("--seed", sopts.seed, "RNG seed (determines all randomness)");
  search_cmd->add_option("--budget", sopts.budget, "number of planes to try");
  search_cmd->add_option("--precision", sopts.precision_bits, "float precision in bits");
  search_cmd->add_option("--residual-tol", sopts.residual_tol, "relative residual tolerance");
  search_cmd->add_option("--disc-floor", sopts.disc_floor, "relative discriminant floor");
  search_cmd->add_option("--jobs", sopts.jobs, "plane trials to run concurrently");
  search_cmd->add_option("--plane", plane_file, "fixed plane JSON {b0, u, v}");

  // annihilate
  auto* ann_cmd = app.add_subcommand("annihilate", "special-point annihilation predicates");
  std::string point_name;
  DeltaArgs ann_delta;
  ann_cmd->add_option("--point", point_name, "p1-lcsl|p1-fermat|p2-lcsl|p2-fermat")->required();
  ann_delta.add_to(ann_cmd);

  // admissible
  auto* adm_cmd = app.add_subcommand("admissible", "Gaussian-integer admissibility of lambda");
  std::string adm_lambda;
  adm_cmd->add_option("--lambda", adm_lambda, "FirstOrderOp JSON (inline or file)")->required();

  // selfcheck
  app.add_subcommand("selfcheck", "transcription and consistency checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (inv_cmd->parsed()) {
      Section b = cubic_file.empty() ? inv_sec.load() : section_from_json(load_json_arg(cubic_file));
      AronholdValues v = aronhold(convert_convention(b, Convention::Salmon));
      emit(out, Json{{"S", to_string(v.S)},
                     {"T", to_string(v.T)},
                     {"Delta", to_string(v.Delta)},
                     {"verdict", v.Delta.is_zero() ? "singular" : "smooth"}});
      return 0;
    }

    if (mem_cmd->parsed()) {
      Section b = mem_sec.load();
      DiffOp delta = mem_delta.load(b.m);
      MembershipOptions opt;
      opt.pad_degree = pad_degree;
      opt.assume_smooth = assume_smooth;
      opt.max_rows = max_rows;
      opt.kernel = serial ? Kernel::Serial : Kernel::Parallel;
      MembershipCertificate cert = membership(b, delta, opt);
      if (!export_matrix.empty()) {
        SymbolicMatrix sym = build_Md(b.m, cert.d, max_rows);
        Json mj = matrix_kind == "symbolic"
                      ? symbolic_matrix_to_json(sym)
                      : evaluated_matrix_to_json(
                            sym, evaluate_Md(sym, b.convention == Convention::Monomial
                                                      ? b
                                                      : convert_convention(b, Convention::Monomial)));
        std::ofstream mf(export_matrix);
        if (!mf) throw ExactError("cannot write '" + export_matrix + "'");
        mf << mj.dump(2) << "\n";
      }
      emit(out, certificate_to_json(cert));
      return cert.member ? 0 : 1;
    }

    if (strat_cmd->parsed()) {
      Json pts = load_json_arg(points_file);
      std::vector<Section> points;
      for (const auto& p : pts) points.push_back(section_from_json(p));
      MembershipOptions opt;
      opt.assume_smooth = strat_assume;
      opt.max_rows = strat_max_rows;
      auto result = stratify(points, strat_d, opt, jobs);
      Json ranks = Json::array();
      for (const auto& entry : result) {
        if (entry.rank)
          ranks.push_back(Json{{"rank", *entry.rank}});
        else
          ranks.push_back(Json{{"error", entry.error}});
      }
      emit(out, Json{{"d", strat_d}, {"ranks", ranks}});
      return 0;
    }

    if (zl_cmd->parsed()) {
      ZeroLocusEquations eqs = zero_locus_equations(load_lambda(zl_lambda));
      emit(out, Json{{"vars", salmon_vars()},
                     {"deltaS", poly_terms_json(eqs.dS)},
                     {"deltaT", poly_terms_json(eqs.dT)}});
      return 0;
    }

    if (search_cmd->parsed()) {
      FirstOrderOp op = load_lambda(search_lambda);
      if (!plane_file.empty()) {
        Json pj = load_json_arg(plane_file);
        sopts.plane = {section_from_json(pj.at("b0")), section_from_json(pj.at("u")),
                       section_from_json(pj.at("v"))};
      }
      auto w = search_zero(op, sopts);
      if (!w) {
        emit(out, Json{{"found", false}, {"budget", sopts.budget}});
        return 1;
      }
      emit(out, search_witness_to_json(*w));
      return 0;
    }

    if (ann_cmd->parsed()) {
      auto pt = special_point_by_name(point_name);
      if (!pt) throw ExactError("unknown special point '" + point_name + "'");
      DiffOp delta = ann_delta.load(special_m(*pt));
      bool rel = relation_predicate(*pt, delta);
      NormalForm nf = normal_form_of_op(*pt, delta);
      Json nfj = Json::array();
      for (const auto& c : nf.coords) nfj.push_back(to_string(c));
      bool ann = nf.is_zero();
      emit(out, Json{{"relation", rel}, {"normal_form", nfj}, {"agree", rel == ann}});
      return ann ? 0 : 1;
    }

    if (adm_cmd->parsed()) {
      bool ok = admissible(load_lambda(adm_lambda));
      emit(out, Json{{"admissible", ok}});
      return ok ? 0 : 1;
    }

    // selfcheck
    CheckReport report = congruence_checks();
    report.items.push_back({"H irreducible over F2", h_irreducibility(), ""});
    {
      const auto& inv = aronhold_invariants();
      int degS = inv.S.total_degree(), degT = inv.T.total_degree();
      bool has = degS % 3 == 1 || degT % 3 == 1;
      report.items.push_back({"invariant generator degree = 1 mod 3", has,
                              "degrees (" + std::to_string(degS) + ", " + std::to_string(degT) + ")"});
    }
    report.items.push_back({"exponent maps match the monomial table", exponent_map_selfcheck(), ""});
    emit(out, check_report_to_json(report));
    return report.all_pass() ? 0 : 1;
  } catch (const std::exception& e) {
    emit(out, Json{{"error", e.what()}});
    return 2;
  }
}

}  // namespace nlocus
