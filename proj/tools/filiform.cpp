#include "filiform/catalog.hpp"
#include "filiform/identities.hpp"
#include "filiform/json_io.hpp"
#include "filiform/leibniz.hpp"
#include "filiform/registry.hpp"
#include "filiform/repr.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace filiform;

// exit codes: 0 = success, 1 = verification found violations, 2 = usage/input error
constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + path + "'");
  out << content << '\n';
}

std::string format_element(const Vec& v, const std::vector<std::string>& labels) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, c] : v.nonzero()) {
    const std::string& label = labels[static_cast<std::size_t>(idx - 1)];
    if (out.empty()) {
      if (c == Rational(1))
        out = label;
      else if (c == Rational(-1))
        out = "-" + label;
      else
        out = c.str() + " " + label;
    } else {
      const Rational abs = c.sign() < 0 ? -c : c;
      out += c.sign() < 0 ? " - " : " + ";
      if (abs != Rational(1)) out += abs.str() + " ";
      out += label;
    }
  }
  return out;
}

void print_table(const StructureTable& table) {
  std::cout << (table.name().empty() ? std::string("table") : table.name()) << ": dimension "
            << table.dim() << ", " << table.entries().size() << " nonzero brackets\n";
  for (const auto& [pair, value] : table.entries()) {
    const auto& labels = table.basis();
    std::cout << "  [" << labels[static_cast<std::size_t>(pair.first - 1)] << ","
              << labels[static_cast<std::size_t>(pair.second - 1)]
              << "] = " << format_element(value, labels) << '\n';
  }
}

int run_catalog(const std::string& family, int dim, const std::string& json_path) {
  const StructureTable table = build({family_from_string(family), dim});
  print_table(table);
  if (!json_path.empty()) write_file(json_path, to_json(table));
  return kOk;
}

int run_repr(const std::string& family, int dim, bool verify, const std::string& json_path) {
  const FamilyId id{family_from_string(family), dim};
  const MatrixRep rep = build_rep(id);
  if (!json_path.empty()) write_file(json_path, to_json(rep));

  bool ok = true;
  if (verify) {
    const StructureTable table = build(id);
    const IdentityReport hom = verify_homomorphism(table, rep);
    const bool faithful = verify_faithful(rep);
    bool upper = true;
    for (const auto& m : rep.images) upper = upper && m.is_strictly_upper();
    ok = hom.ok() && faithful && upper;
    std::cout << "homomorphism: " << (hom.checked - static_cast<long>(hom.violations.size()))
              << "/" << hom.checked << " pairs ok; faithful: " << (faithful ? "yes" : "no")
              << "; strictly upper-triangular: " << (upper ? "yes" : "no") << "; size "
              << rep.dim << " = dim " << table.dim()
              << " (minimal: a faithful strictly upper-triangular representation of an n-dim "
                 "filiform algebra needs size >= n)\n";
  } else {
    std::cout << family << dim << " representation: " << rep.images.size() << " generators, "
              << rep.dim << "x" << rep.dim << " strictly upper-triangular matrices\n";
  }
  return ok ? kOk : kViolations;
}

int run_leibniz(const std::string& family, const std::string& params_csv, bool verify,
                const std::string& json_path) {
  FamilyParams params;
  params.family = leibniz_family_from_string(family);
  std::stringstream ss(params_csv);
  std::string item;
  while (std::getline(ss, item, ',')) params.values.push_back(Rational::parse(item));
  const LeibnizExtension ext = build_family(params);
  print_table(ext.table);
  if (!json_path.empty()) write_file(json_path, to_json(ext.table));

  if (verify) {
    const ExtensionReport report = verify_extension(ext, params.family);
    std::cout << "leibniz violations: " << report.leibniz_violations
              << "; x-span ideal: " << (report.ideal_ok ? "ok" : "FAIL")
              << "; quotient: " << (report.quotient_ok ? "ok" : "FAIL")
              << "; action: " << (report.action_ok ? "ok" : "FAIL") << '\n';
    if (!report.all_ok()) return kViolations;
  }
  return kOk;
}

int run_appendix(const std::string& which, bool check_all, unsigned long long seed,
                 const std::string& report_path) {
  const RegistryId id = registry_from_string(which);
  const auto& rows = registry(id);
  if (!check_all) {
    std::cout << "registry " << which << ": " << rows.size() << " rows\n";
    for (const auto& entry : rows) {
      std::cout << "  row " << entry.row << ": (";
      for (std::size_t s = 0; s < entry.slots.size(); ++s)
        std::cout << (s ? "," : "") << entry.slots[s];
      std::cout << ")";
      for (int c : entry.nonzero) std::cout << " [slot " << c << " != 0]";
      if (!entry.note.empty()) std::cout << "  note: " << entry.note;
      std::cout << '\n';
    }
    return kOk;
  }

  const auto results = check_registry(id, seed);
  std::string report;
  long bad = 0;
  for (const auto& r : results) {
    report += to_json_line(r);
    report += '\n';
    if (!r.structure_ok() || r.leibniz_violations != 0) ++bad;
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open report file '" + report_path + "'");
    out << report;
  }
  std::cout << "registry " << which << ": " << rows.size() << " rows, " << results.size()
            << " instantiations (seed " << seed << "); " << (results.size() - bad)
            << " clean, " << bad << " with failures or Leibniz violations\n";
  return bad == 0 ? kOk : kViolations;
}

int run_verify(const std::string& input, const std::string& law_text,
               const std::string& json_path) {
  const StructureTable table = table_from_json(read_file(input));
  IdentityReport report;
  if (law_text == "antisymmetry")
    report = check_antisymmetry(table);
  else if (law_text == "jacobi")
    report = check_jacobi(table);
  else if (law_text == "leibniz")
    report = check_leibniz(table);
  else
    throw std::invalid_argument("unknown law '" + law_text +
                                "' (expected antisymmetry, jacobi or leibniz)");
  std::cout << law_text << ": checked " << report.checked << ", violations "
            << report.violations.size() << '\n';
  for (std::size_t v = 0; v < std::min<std::size_t>(report.violations.size(), 10); ++v) {
    const auto& viol = report.violations[v];
    std::cout << "  at (" << viol.i << "," << viol.j << "," << viol.k
              << "): " << format_element(viol.residual, table.basis()) << '\n';
  }
  if (!json_path.empty()) write_file(json_path, to_json(report));
  return report.ok() ? kOk : kViolations;
}

int run_fingerprint(const std::string& input, const std::string& json_path) {
  const StructureTable table = table_from_json(read_file(input));
  const Fingerprint fp = fingerprint(table);
  std::cout << to_json(fp) << '\n';
  if (!json_path.empty()) write_file(json_path, to_json(fp));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"filiform: exact structure tables, minimal strictly upper-triangular "
               "representations, and Leibniz extensions of filiform Lie algebras"};
  app.require_subcommand(1);

  std::string family, dim_family, input, law = "leibniz", params_csv, which;
  std::string json_path, report_path;
  int dim = 0;
  bool verify = false, check_all = false;
  unsigned long long seed = 0;

  auto* catalog = app.add_subcommand("catalog", "build a catalog algebra as a structure table");
  catalog->add_option("--family", family, "L, Q, R or W")->required();
  catalog->add_option("--dim", dim, "algebra dimension")->required();
  catalog->add_option("--json", json_path, "write the table JSON here");

  auto* repr = app.add_subcommand("repr", "build a minimal faithful matrix representation");
  repr->add_option("--family", dim_family, "Q, R or W")->required();
  repr->add_option("--dim", dim, "algebra dimension")->required();
  repr->add_flag("--verify", verify, "check homomorphism, faithfulness and triangularity");
  repr->add_option("--json", json_path, "write the representation JSON here");

  auto* leibniz = app.add_subcommand("leibniz", "build a lambda/mu/eta Leibniz algebra");
  leibniz->add_option("--family", family, "lambda, mu or eta")->required();
  leibniz->add_option("--params", params_csv, "comma-separated rationals, e.g. 1,0,1/2,...")
      ->required();
  leibniz->add_flag("--verify", verify, "run the extension checks against the quotient");
  leibniz->add_option("--json", json_path, "write the table JSON here");

  auto* appendix = app.add_subcommand("appendix", "list or verify a classification registry");
  appendix->add_option("--which", which, "A, B or T2")->required();
  appendix->add_flag("--check-all", check_all, "verify every row");
  appendix->add_option("--seed", seed, "seed for free-parameter sampling (default 0)");
  appendix->add_option("--report", report_path, "write the JSON-lines report here");

  auto* verify_cmd = app.add_subcommand("verify", "check a law on a structure table JSON file");
  verify_cmd->add_option("--input", input, "StructureTable JSON file")->required();
  verify_cmd->add_option("--law", law, "antisymmetry, jacobi or leibniz (default leibniz)");
  verify_cmd->add_option("--json", json_path, "write the report JSON here");

  auto* fp_cmd = app.add_subcommand("fingerprint", "invariant fingerprint of a table JSON file");
  fp_cmd->add_option("--input", input, "StructureTable JSON file")->required();
  fp_cmd->add_option("--json", json_path, "write the fingerprint JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (catalog->parsed()) return run_catalog(family, dim, json_path);
    if (repr->parsed()) return run_repr(dim_family, dim, verify, json_path);
    if (leibniz->parsed()) return run_leibniz(family, params_csv, verify, json_path);
    if (appendix->parsed()) return run_appendix(which, check_all, seed, report_path);
    if (verify_cmd->parsed()) return run_verify(input, law, json_path);
    if (fp_cmd->parsed()) return run_fingerprint(input, json_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
