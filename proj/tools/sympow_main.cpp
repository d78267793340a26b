// sympow: character-table generation and validation, lambda-ring operation
// evaluation, classgroup-model inspection, local tame-cover checks, and the
// seeded verification suites.
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sympow/abgroup.hpp"
#include "sympow/catalog.hpp"
#include "sympow/classgroup.hpp"
#include "sympow/lambda_ops.hpp"
#include "sympow/local_cover.hpp"
#include "sympow/suites.hpp"
#include "sympow/table_io.hpp"

namespace {

using nlohmann::json;
using namespace sympow;

constexpr int kExitPass = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDataValidation = 3;

std::vector<Int> parse_int_list(const std::string& s) {
  std::vector<Int> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, ',')) {
    size_t b = item.find_first_not_of(" \t");
    size_t e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("empty entry in integer list");
    out.emplace_back(item.substr(b, e - b + 1));
  }
  return out;
}

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  for (const Int& v : parse_int_list(s)) out.push_back(v.get_si());
  return out;
}

IntMatrix parse_matrix(const std::string& s) {
  std::vector<std::vector<Int>> rows;
  std::string row;
  std::istringstream is(s);
  while (std::getline(is, row, ';')) rows.push_back(parse_int_list(row));
  if (rows.empty()) return IntMatrix(0, 0);
  IntMatrix m(static_cast<long>(rows.size()), static_cast<long>(rows[0].size()));
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("ragged matrix specification");
    for (size_t j = 0; j < rows[i].size(); ++j)
      m.at(static_cast<long>(i), static_cast<long>(j)) = rows[i][j];
  }
  return m;
}

json int_vector_json(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(x.get_str());
  return a;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (long i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

void maybe_write(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write report to " + path);
  out << j.dump(2) << "\n";
}

int cmd_chartab_gen(const std::string& abelian, const std::string& name, const std::string& out,
                    const std::string& report) {
  TablePtr t = abelian_char_table(abelian.empty() ? std::vector<long>{} : parse_long_list(abelian),
                                  name);
  json j = table_to_json(*t);
  if (out.empty())
    std::cout << j.dump(2) << "\n";
  else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << j.dump(2) << "\n";
    std::cout << "wrote " << out << "\n";
  }
  maybe_write(report, j);
  return kExitPass;
}

int cmd_chartab_validate(const std::string& file, const std::string& report) {
  std::ifstream in(file);
  if (!in) {
    std::cerr << "cannot open " << file << "\n";
    return kExitDataValidation;
  }
  json j;
  try {
    in >> j;
  } catch (const std::exception& ex) {
    std::cerr << "json parse error: " << ex.what() << "\n";
    return kExitDataValidation;
  }
  ValidationResult r = table_from_json(j);
  json rep = {{"file", file}, {"valid", r.ok()}, {"errors", r.errors}};
  maybe_write(report, rep);
  if (!r.ok()) {
    std::cerr << "invalid table:\n";
    for (const auto& e : r.errors) std::cerr << "  " << e << "\n";
    return kExitDataValidation;
  }
  std::cout << "valid: " << r.table->name() << " (order " << r.table->order() << ", "
            << r.table->num_classes() << " classes)\n";
  return kExitPass;
}

int cmd_ops(const std::string& op, long k, const std::string& table, const std::string& chr,
            const std::string& ystr, const std::string& report) {
  TablePtr t = load_table(table);
  auto mk = [&](const std::string& s) {
    return VirtualCharacter(t, parse_int_list(s));
  };
  json rep = {{"op", op}, {"table", t->name()}, {"k", k}};
  std::string printed;
  if (op == "diff") {
    if (chr.empty() || ystr.empty())
      throw std::invalid_argument("ops diff needs --char and --y");
    DifferenceExpansion d = sigma_difference_expansion(k, mk(chr), mk(ystr));
    printed = "lhs: " + d.lhs.coords_str() + "\nrhs: " + d.rhs.coords_str() +
              "\nequal: " + (d.equal ? "yes" : "no");
    rep["lhs"] = int_vector_json(d.lhs.coords());
    rep["rhs"] = int_vector_json(d.rhs.coords());
    rep["equal"] = d.equal;
    std::cout << printed << "\n";
    maybe_write(report, rep);
    return d.equal ? kExitPass : kExitVerificationFailure;
  }
  VirtualCharacter x = mk(chr);
  VirtualCharacter y = [&] {
    if (op == "adams") return adams(k, x);
    if (op == "sigma") return symmetric_power(k, x);
    if (op == "lambda") return exterior_power(k, x);
    if (op == "adjoint") return adams_adjoint(k, x);
    if (op == "pullback") return power_pullback(k, x);
    throw std::invalid_argument("unknown ops subcommand '" + op + "'");
  }();
  std::cout << y.coords_str() << "\n";
  rep["char"] = int_vector_json(x.coords());
  rep["result"] = int_vector_json(y.coords());
  maybe_write(report, rep);
  return kExitPass;
}

int cmd_classgroup(const std::string& table, const std::string& clgroup, long q, long sigma_k,
                   const std::string& phi_spec, const std::string& c0_spec,
                   const std::string& model_file, const std::string& report) {
  std::string table_spec = table;
  std::string cspec = clgroup;
  long qq = q;
  IntMatrix phi_m;
  bool phi_given = false;
  std::optional<std::vector<std::vector<Int>>> c0;

  if (!model_file.empty()) {
    std::ifstream in(model_file);
    if (!in) throw std::runtime_error("cannot open model file " + model_file);
    json j;
    in >> j;
    table_spec = j.at("table").get<std::string>();
    qq = j.value("q", 1L);
    cspec = j.at("C").get<std::string>();
    if (j.contains("phi")) {
      auto rows = j.at("phi").get<std::vector<std::vector<long>>>();
      IntMatrix m(static_cast<long>(rows.size()),
                  rows.empty() ? 0 : static_cast<long>(rows[0].size()));
      for (size_t i = 0; i < rows.size(); ++i)
        for (size_t jj = 0; jj < rows[i].size(); ++jj)
          m.at(static_cast<long>(i), static_cast<long>(jj)) = rows[i][jj];
      phi_m = m;
      phi_given = true;
    }
    if (j.contains("C0")) {
      std::vector<std::vector<Int>> gens;
      for (const auto& g : j.at("C0")) {
        std::vector<Int> v;
        for (const auto& x : g) v.emplace_back(x.get<long>());
        gens.push_back(std::move(v));
      }
      c0 = std::move(gens);
    }
  } else if (!phi_spec.empty()) {
    phi_m = parse_matrix(phi_spec);
    phi_given = true;
  }
  if (!c0 && !c0_spec.empty()) {
    std::vector<std::vector<Int>> gens;
    std::string row;
    std::istringstream is(c0_spec);
    while (std::getline(is, row, ';')) gens.push_back(parse_int_list(row));
    c0 = std::move(gens);
  }

  TablePtr t = load_table(table_spec);
  AbGroup c = AbGroup::parse(cspec);
  GroupHom phi = phi_given ? GroupHom(c, c, phi_m) : GroupHom::identity(c);
  ClassgroupModel m = build_classgroup(t, qq, c, phi);

  json rep = {{"table", t->name()},
              {"q", qq},
              {"C", c.str()},
              {"H_invariants", m.h.group.str()}};
  std::cout << "H = " << m.h.group.str() << " (rank " << m.h.group.rank() << ")\n";

  if (sigma_k > 0) {
    GroupHom act = sigma_on_cl(sigma_k, m);
    std::cout << "sigma_" << sigma_k << " on H = " << act.matrix().str() << "\n";
    rep["sigma_k"] = sigma_k;
    rep["sigma_matrix"] = matrix_json(act.matrix());
    CntReport cnt = verify_cnt_duality(m, sigma_k);
    rep["duality"] = {{"abelian_checked", cnt.abelian_checked},
                      {"adjoint_equals_pullback", cnt.adjoint_equals_pullback},
                      {"action_equals_pullback_action", cnt.action_equals_pullback_action},
                      {"periodicity", cnt.periodicity},
                      {"additivity", cnt.additivity}};
    std::cout << "duality checks: " << (cnt.pass() ? "pass" : "FAIL") << "\n";
    if (!cnt.pass()) {
      maybe_write(report, rep);
      return kExitVerificationFailure;
    }
  }

  IndSubgroupResult ind = ind_subgroup(m, c0);
  rep["ind_subgroup"] = ind.sub.group.str();
  rep["quotient"] = ind.quot.group.str();
  std::cout << "Ind = " << ind.sub.group.str() << ", H/Ind = " << ind.quot.group.str() << "\n";

  maybe_write(report, rep);
  return kExitPass;
}

int cmd_cover(long q, long e, long j, const std::string& check, const std::string& report) {
  Cover cov = setup_cover(q, e);
  json rep = {{"q", q}, {"e", e}, {"j", j}, {"zeta", cov.zeta}};
  bool all_pass = true;
  auto emit = [&](const char* kind, const CoverCheck& chk) {
    std::cout << kind << ": lhs = [" << chk.lhs.str() << "], rhs = [" << chk.rhs.str()
              << "], v_s(det) = " << chk.det_valuation << " -> "
              << (chk.pass ? "pass" : "FAIL") << "\n";
    rep[kind] = {{"identity", chk.identity},
                 {"lhs", chk.lhs.str()},
                 {"rhs", chk.rhs.str()},
                 {"det_valuation", std::to_string(chk.det_valuation)},
                 {"pass", chk.pass}};
    all_pass = all_pass && chk.pass;
  };
  if (check == "chase" || check == "both") emit("chase", check_chase_identity(cov, j));
  if (check == "different" || check == "both") {
    if (j > 0) throw std::invalid_argument("--check different requires j <= 0");
    emit("different", check_different_identity(cov, j));
  }
  if (check != "chase" && check != "different" && check != "both")
    throw std::invalid_argument("--check must be chase, different, or both");
  maybe_write(report, rep);
  return all_pass ? kExitPass : kExitVerificationFailure;
}

int cmd_verify(const std::string& suites, std::uint64_t seed, long k_max, long series_order,
               const std::string& tables, const std::string& cover_q,
               const std::string& report_path) {
  SuiteConfig cfg;
  cfg.suites.clear();
  std::string item;
  std::istringstream is(suites);
  while (std::getline(is, item, ',')) cfg.suites.push_back(item);
  cfg.seed = seed;
  cfg.k_max = k_max;
  cfg.series_order = series_order;
  if (!tables.empty()) {
    cfg.lambda_tables.clear();
    std::istringstream ts(tables);
    while (std::getline(ts, item, ',')) cfg.lambda_tables.push_back(item);
  }
  if (!cover_q.empty()) cfg.cover_q = parse_long_list(cover_q);

  Report rep = run_suite(cfg);
  for (const auto& r : rep.records)
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << (r.pass ? "" : ": " + r.actual) << "\n";
  std::cout << rep.passed() << "/" << rep.total() << " checks passed\n";
  if (!report_path.empty()) {
    rep.write(report_path);
    std::cout << "report written to " << report_path << "\n";
  }
  return rep.all_pass() ? kExitPass : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of symmetric-power operations on character rings,\n"
               "classgroup hom-models, and tame local covers"};
  app.require_subcommand(1);

  // chartab
  auto* chartab = app.add_subcommand("chartab", "generate or validate character tables");
  chartab->require_subcommand(1);
  auto* gen = chartab->add_subcommand("gen", "generate an abelian character table");
  std::string gen_abelian, gen_name, gen_out, gen_report;
  gen->add_option("--abelian", gen_abelian, "cyclic factors, e.g. 2,4")->required();
  gen->add_option("--name", gen_name, "table name");
  gen->add_option("--out", gen_out, "write table JSON here instead of stdout");
  gen->add_option("--report", gen_report, "write a JSON report");
  auto* validate = chartab->add_subcommand("validate", "validate a character-table file");
  std::string val_file, val_report;
  validate->add_option("file", val_file, "table JSON file")->required();
  validate->add_option("--report", val_report, "write a JSON report");

  // ops
  auto* ops = app.add_subcommand("ops", "evaluate operations on virtual characters");
  ops->require_subcommand(1);
  struct OpsArgs {
    long k = 1;
    std::string table, chr, y, report;
  };
  std::map<std::string, OpsArgs> ops_args;
  for (const char* name : {"adams", "sigma", "lambda", "adjoint", "pullback", "diff"}) {
    auto* sub = ops->add_subcommand(name);
    auto& a = ops_args[name];
    if (std::string(name) == "pullback")
      sub->add_option("-a,--a", a.k, "pullback exponent")->required();
    else if (std::string(name) == "diff")
      sub->add_option("-i,--i", a.k, "expansion degree")->required();
    else
      sub->add_option("-k,--k", a.k, "operation exponent")->required();
    sub->add_option("--table", a.table, "catalog name or table file")->required();
    if (std::string(name) == "diff") {
      sub->add_option("--x", a.chr, "first coordinate vector")->required();
      sub->add_option("--y", a.y, "second coordinate vector")->required();
    } else {
      sub->add_option("--char", a.chr, "coordinate vector over the irreducibles")->required();
    }
    sub->add_option("--report", a.report, "write a JSON report");
  }

  // classgroup
  auto* cg = app.add_subcommand("classgroup", "build a classgroup model and inspect the action");
  std::string cg_table, cg_clgroup, cg_phi, cg_c0, cg_model, cg_report;
  long cg_q = 1, cg_sigma_k = 0;
  cg->add_option("--table", cg_table, "catalog name or table file");
  cg->add_option("--clgroup", cg_clgroup, "invariant factors of C, e.g. 25 or 4,8");
  cg->add_option("--q", cg_q, "Frobenius parameter (1 = trivial action)");
  cg->add_option("--sigma-k", cg_sigma_k, "also print the action at this exponent");
  cg->add_option("--phi", cg_phi, "endomorphism matrix of C, rows separated by ';'");
  cg->add_option("--c0", cg_c0, "generators of C0, vectors separated by ';'");
  cg->add_option("--model", cg_model, "JSON model spec file");
  cg->add_option("--report", cg_report, "write a JSON report");

  // cover
  auto* cover = app.add_subcommand("cover", "local tame-cover torsion-class checks");
  long cov_q = 0, cov_e = 1, cov_j = 0;
  std::string cov_check = "both", cov_report;
  cover->add_option("--q", cov_q, "residue field size (prime power)")->required();
  cover->add_option("--e", cov_e, "ramification index")->required();
  cover->add_option("--j", cov_j, "exponent of the fractional ideal");
  cover->add_option("--check", cov_check, "chase | different | both");
  cover->add_option("--report", cov_report, "write a JSON report");

  // verify
  auto* verify = app.add_subcommand("verify", "run the verification suites");
  std::string ver_suite = "all", ver_report, ver_tables, ver_cover_q;
  std::uint64_t ver_seed = 0;
  long ver_kmax = 5, ver_series = 12;
  verify->add_option("--suite", ver_suite,
                     "comma-separated suite names or 'all' "
                     "(lambda-identities, cnt-duality, unramified-h1, bott, augmentation, "
                     "local-cover; 'self-test' adds a deliberately failing record)");
  verify->add_option("--seed", ver_seed, "seed for the randomized checks");
  verify->add_option("--kmax", ver_kmax, "operation exponent bound");
  verify->add_option("--series-order", ver_series, "series truncation order");
  verify->add_option("--tables", ver_tables,
                     "tables for the lambda suite (catalog names or files)");
  verify->add_option("--cover-q", ver_cover_q, "residue field sizes for the cover suite");
  verify->add_option("--report", ver_report, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_chartab_gen(gen_abelian, gen_name, gen_out, gen_report);
    if (validate->parsed()) return cmd_chartab_validate(val_file, val_report);
    for (auto& [name, a] : ops_args)
      if (ops->parsed() && ops->get_subcommand(name)->parsed())
        return cmd_ops(name, a.k, a.table, a.chr, a.y, a.report);
    if (cg->parsed())
      return cmd_classgroup(cg_table, cg_clgroup, cg_q, cg_sigma_k, cg_phi, cg_c0, cg_model,
                            cg_report);
    if (cover->parsed()) return cmd_cover(cov_q, cov_e, cov_j, cov_check, cov_report);
    if (verify->parsed())
      return cmd_verify(ver_suite, ver_seed, ver_kmax, ver_series, ver_tables, ver_cover_q,
                        ver_report);
  } catch (const TableLoadError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    for (const auto& e : ex.errors) std::cerr << "  " << e << "\n";
    return kExitDataValidation;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitDataValidation;
  }
  std::cerr << "no command\n";
  return kExitUsage;
}
