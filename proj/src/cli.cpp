#include "chevorbit/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "chevorbit/error.hpp"
#include "chevorbit/io.hpp"

namespace chevorbit {

namespace {

using nlohmann::ordered_json;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::UnsupportedSystem:
    case Errc::InvalidModulus:
    case Errc::InvalidVector:
    case Errc::InvalidDescriptor:
    case Errc::NotARoot:
      return kExitBadInput;
    case Errc::UnsupportedFamily:
    case Errc::CharTwo:
      return kExitUnsupported;
    case Errc::BudgetExceeded:
      return kExitBudget;
    default:
      return kExitCheckFailed;
  }
}

struct Options {
  std::string system;
  std::string out_path;
  std::string format = "text";
  std::vector<std::string> checks;
  bool report_only = false;
  std::int64_t p = 0;
  std::string vector;
  bool brute_force = false;
  bool compare = false;
  std::uint64_t seed = 1;
};

int cmd_roots(const Options& o, std::ostream& out) {
  const RootSystem rs = parse_system(o.system);
  if (o.format == "json") out << root_system_json(rs).dump(2) << "\n";
  else if (o.format == "csv") out << root_system_csv(rs);
  else out << root_system_text(rs);
  return kExitOk;
}

int cmd_constants(const Options& o, std::ostream& out) {
  const auto table = StructureConstants::build(std::make_shared<const RootSystem>(parse_system(o.system)));
  const RootSystem& rs = table.roots();
  std::set<std::string> want(o.checks.begin(), o.checks.end());
  if (want.empty() || want.count("all")) want = {"n1", "n2", "n3", "n4", "jacobi", "theorem1"};

  if (!o.report_only) {
    out << "alpha,beta,value\n";
    for (RootIndex a = 0; a < rs.size(); ++a)
      for (RootIndex b = 0; b < rs.size(); ++b)
        if (rs.sum(a, b) != kNoRoot)
          out << root_label(rs.root(a)) << "," << root_label(rs.root(b)) << "," << table.at(a, b) << "\n";
  }

  ordered_json report;
  report["system"] = rs.name();
  bool ok = true;
  auto add = [&](const char* key, const CheckCount& c) {
    report[key] = check_json(c);
    ok = ok && c.ok();
  };
  add("support", check_support(table));
  if (want.count("n1")) add("n1", check_n1(table));
  if (want.count("n2")) add("n2p", check_n2p(table));
  if (want.count("n3")) add("n3pp", check_n3pp(table));
  if (want.count("n4")) add("n4", check_n4(table));
  if (want.count("jacobi")) add("jacobi", check_jacobi(table, default_jacobi_sample(rs), o.seed));
  if (want.count("theorem1")) {
    add("theorem1", check_theorem1(table));
    add("fast_path", check_fast_path(table));
  }
  if (rs.family() == Family::D) {
    const auto q = quadruple_products(table);
    ordered_json j;
    j["product1"] = q.product1;
    if (rs.rank() == 4) j["product2"] = q.product2;
    j["constants"] = q.constants;
    report[rs.rank() == 4 ? "lemma2" : "lemma3"] = j;
    ok = ok && q.product1 == 1 && (rs.rank() != 4 || q.product2 == 1);
  }
  report["ok"] = ok;
  out << report.dump() << "\n";
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto table = StructureConstants::build(std::make_shared<const RootSystem>(parse_system(o.system)));
  const OrbitLab lab(table, o.p);
  std::string text = o.vector;
  if (!text.empty() && text.front() == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw Error(Errc::InvalidVector, "cannot read " + text.substr(1));
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  const V1Vector x = parse_vector(text);
  const OrbitDescriptor d = lab.classify(x);
  ordered_json j;
  j["descriptor"] = descriptor_json(d);
  j["canonical_form"] = vector_csv(lab.canonical_form(d));
  if (lab.roots().family() == Family::D) j["luminosity"] = luminosity_name(luminosity(lab.roots(), lab.associated_root_element(x)));
  out << j.dump() << "\n";
  return kExitOk;
}

int cmd_orbits(const Options& o, std::ostream& out) {
  const auto table = StructureConstants::build(std::make_shared<const RootSystem>(parse_system(o.system)));
  const OrbitLab lab(table, o.p);
  if (!o.brute_force && !o.compare) {
    ordered_json j;
    j["family"] = std::string(1, family_letter(lab.roots().family()));
    j["rank"] = lab.roots().rank();
    j["p"] = o.p;
    const auto predicted = lab.predicted_descriptors();
    j["orbit_count"] = predicted.size();
    ordered_json orbits = ordered_json::array();
    for (const auto& d : predicted)
      orbits.push_back({{"representative", vector_csv(lab.canonical_form(d))}, {"descriptor", descriptor_json(d)}});
    j["orbits"] = orbits;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  const OrbitCensus census = enumerate_orbits(lab, state_budget_from_env());
  if (o.format == "csv" && !o.compare) {
    out << census_csv(census);
    return kExitOk;
  }
  ordered_json j = census_json(census);
  int code = kExitOk;
  if (o.compare) {
    const auto report = crosscheck(lab, census, 10'000, o.seed);
    j["crosscheck"] = crosscheck_json(report);
    if (!report.ok) code = kExitCheckFailed;
  }
  out << j.dump(2) << "\n";
  return code;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Root systems, Chevalley structure constants and G_0-orbits on V_1", "chevorbit"};
  app.require_subcommand(1);
  Options o;

  auto* roots = app.add_subcommand("roots", "Dump a root system");
  roots->add_option("system", o.system, "System such as A3, D4, E8")->required();
  roots->add_option("--format", o.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

  auto* constants = app.add_subcommand("constants", "Structure constants and their verification report");
  constants->add_option("system", o.system)->required();
  constants->add_option("--check", o.checks, "n1, n2, n3, n4, jacobi, theorem1 or all")
      ->check(CLI::IsMember({"n1", "n2", "n3", "n4", "jacobi", "theorem1", "all"}));
  constants->add_flag("--report-only", o.report_only, "Skip the CSV table");
  constants->add_option("--seed", o.seed, "Seed for sampled checks");

  auto* classify = app.add_subcommand("classify", "Orbit descriptor of a V_1 vector");
  classify->add_option("system", o.system)->required();
  classify->add_option("-p", o.p, "Odd prime")->required();
  classify->add_option("--vector", o.vector, "Comma-separated coefficients in phi1 order, or @file")->required();

  auto* orbits = app.add_subcommand("orbits", "Orbit census");
  orbits->add_option("system", o.system)->required();
  orbits->add_option("-p", o.p, "Odd prime")->required();
  orbits->add_flag("--brute-force", o.brute_force, "Enumerate all states");
  orbits->add_flag("--compare", o.compare, "Enumerate and cross-check against the classifier");
  orbits->add_option("--seed", o.seed, "Seed for sampled pairs");
  orbits->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv", "text"}));

  for (auto* sub : {roots, constants, classify, orbits}) sub->add_option("--out", o.out_path, "Write output to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "cannot open " << o.out_path << "\n";
      return kExitBadInput;
    }
    sink = &file;
  }

  try {
    if (*roots) return cmd_roots(o, *sink);
    if (*constants) return cmd_constants(o, *sink);
    if (*classify) return cmd_classify(o, *sink);
    return cmd_orbits(o, *sink);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace chevorbit
