#include "cubix/cli.hpp"

#include <cctype>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "cubix/classical.hpp"
#include "cubix/equivalence.hpp"
#include "cubix/inverses.hpp"
#include "cubix/json_io.hpp"
#include "cubix/laws.hpp"
#include "cubix/models.hpp"
#include "cubix/normalizer.hpp"

namespace cubix {

namespace {

constexpr int kExitClean = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitStructure = 3;

int usage_error(std::ostream& err, const std::string& msg) {
  err << "usage error: " << msg << "\n";
  return kExitUsage;
}

void print_report(std::ostream& out, const std::string& label,
                  const CheckReport& rep) {
  out << "suite " << label << ": " << rep.checked_count << " checks, "
      << rep.violations.size() << " violations\n";
  for (const auto& n : rep.notes) out << "  note: " << n << "\n";
  for (const auto& v : rep.violations)
    out << "  " << (v.severity == Severity::theorem_violation ? 'T' : 'V')
        << " [" << v.axiom_id << "] " << v.detail << "\n";
}

nlohmann::json report_json(const CheckReport& rep) {
  nlohmann::json j;
  j["checked"] = rep.checked_count;
  j["notes"] = rep.notes;
  nlohmann::json inst = nlohmann::json::object();
  for (const auto& [id, n] : rep.instance_counts) inst[id] = n;
  j["instances"] = std::move(inst);
  nlohmann::json viols = nlohmann::json::array();
  for (const auto& v : rep.violations) {
    nlohmann::json e;
    e["axiom_id"] = v.axiom_id;
    e["severity"] =
        v.severity == Severity::theorem_violation ? "theorem" : "violation";
    e["detail"] = v.detail;
    e["cells"] = v.cells;
    viols.push_back(std::move(e));
  }
  j["violations"] = std::move(viols);
  return j;
}

// Validates an unvalidated document in place; on failure prints the report
// and returns the violations exit code.
int ensure_valid(StructureDocument& doc, int threads, std::ostream& out) {
  CheckReport rep;
  if (doc.is_single_set()) {
    if (doc.single_set().validated) return kExitClean;
    rep = validate(doc.single_set(), threads);
  } else {
    if (doc.classical().validated) return kExitClean;
    rep = validate(doc.classical(), threads);
  }
  if (rep.passed()) return kExitClean;
  print_report(out, "validation", rep);
  return kExitViolations;
}

std::string kind_of(const StructureDocument& doc) {
  return doc.is_single_set() ? "single-set" : "classical";
}

void describe(std::ostream& out, const std::string& file,
              const StructureDocument& doc) {
  if (doc.is_single_set()) {
    const auto& s = doc.single_set();
    out << file << ": single-set dim " << s.dim << ", " << s.size()
        << " cells\n";
  } else {
    const auto& c = doc.classical();
    out << file << ": classical dim " << c.dim << ", cells per level:";
    for (int k = 0; k <= c.dim; ++k) out << " " << c.size(k);
    out << "\n";
  }
}

BaseKind parse_base_kind(const std::string& name) {
  if (name == "pair_groupoid") return BaseKind::pair_groupoid;
  if (name == "chain_poset") return BaseKind::chain_poset;
  if (name == "discrete") return BaseKind::discrete;
  if (name == "cyclic_group_thin") return BaseKind::cyclic_group_thin;
  throw CLI::ValidationError("--base", "unknown base kind '" + name + "'");
}

// "<kind>:<m>" for gen --base.
std::pair<BaseKind, std::size_t> parse_base(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw CLI::ValidationError("--base", "expected <kind>:<m>");
  BaseKind kind = parse_base_kind(text.substr(0, colon));
  const std::string num = text.substr(colon + 1);
  if (num.empty() ||
      num.find_first_not_of("0123456789") != std::string::npos)
    throw CLI::ValidationError("--base", "bad object count '" + num + "'");
  return {kind, std::stoul(num)};
}

// A cell argument is an exact name, or a bare index when no name matches.
Cell resolve_cell(const std::vector<std::string>& names,
                  const std::string& id) {
  for (Cell x = 0; x < names.size(); ++x)
    if (names[x] == id) return x;
  if (!id.empty() && id.find_first_not_of("0123456789") == std::string::npos) {
    unsigned long v = std::stoul(id);
    if (v < names.size()) return Cell(v);
  }
  throw StructureError(StructureError::Kind::domain,
                       "unknown cell id '" + id + "'");
}

int do_gen(const std::string& base_text, int dim, bool connections,
           const std::string& out_path, int threads, std::ostream& out) {
  auto [kind, m] = parse_base(base_text);
  SingleSetStructure s =
      cube_nerve(kind, m, dim, connections, default_cell_budget(), threads);
  StructureDocument doc;
  doc.meta["generator"] = "nerve";
  doc.meta["base"] = base_text;
  doc.value = std::move(s);
  save_document(doc, out_path);
  out << "wrote ";
  describe(out, out_path, doc);
  return kExitClean;
}

int do_check(const std::string& file, const std::string& suite, bool as_json,
             int threads, std::ostream& out, std::ostream& err) {
  StructureDocument doc = load_document(file);
  std::string np_arg;
  if (suite.rfind("np:", 0) == 0) np_arg = suite.substr(3);
  if (!np_arg.empty() &&
      np_arg.find_first_not_of("0123456789") != std::string::npos)
    return usage_error(err, "bad divisibility threshold '" + np_arg + "'");

  // label -> report, in a fixed run order
  std::vector<std::pair<std::string, CheckReport>> reports;
  if (doc.is_single_set()) {
    auto& s = doc.single_set();
    const bool all = suite == "all";
    if (all || suite == "category")
      reports.emplace_back("category", check_category_axioms(s, threads));
    if (all || suite == "cubical")
      reports.emplace_back("cubical", check_cubical_axioms(s, threads));
    if (all || suite == "connections")
      reports.emplace_back("connections", check_connection_axioms(s, threads));
    if (all || suite == "derived") {
      reports.emplace_back("derived", check_derived_lemmas(s, threads));
      reports.emplace_back("inverse-lemmas", check_inverse_lemmas(s, threads));
    }
    if (!np_arg.empty())
      reports.emplace_back(suite, check_np(s, std::stoi(np_arg), threads));
    if (reports.empty())
      return usage_error(err, "unknown suite '" + suite + "'");
  } else {
    auto& c = doc.classical();
    if (suite == "all")
      reports.emplace_back("classical", check_classical_axioms(c, threads));
    else if (!np_arg.empty())
      reports.emplace_back(suite,
                           check_classical_np(c, std::stoi(np_arg), threads));
    else
      return usage_error(
          err, "suite '" + suite + "' needs a single-set document");
  }

  bool passed = true;
  for (const auto& [label, rep] : reports) passed = passed && rep.passed();

  if (as_json) {
    nlohmann::json j;
    j["report_version"] = 1;
    j["file"] = file;
    j["kind"] = kind_of(doc);
    j["passed"] = passed;
    nlohmann::json suites = nlohmann::json::object();
    for (const auto& [label, rep] : reports) suites[label] = report_json(rep);
    j["suites"] = std::move(suites);
    out << j.dump(2) << "\n";
  } else {
    describe(out, file, doc);
    std::size_t total_checks = 0, total_viols = 0;
    for (const auto& [label, rep] : reports) {
      print_report(out, label, rep);
      total_checks += rep.checked_count;
      total_viols += rep.violations.size();
    }
    out << "total: " << total_checks << " checks, " << total_viols
        << " violations\n";
  }
  return passed ? kExitClean : kExitViolations;
}

int do_translate(const std::string& file, const std::string& to,
                 const std::string& out_path, int threads, std::ostream& out,
                 std::ostream& err) {
  StructureDocument doc = load_document(file);
  if (to == "classical" && !doc.is_single_set())
    return usage_error(err, "translating to classical needs a single-set "
                            "document");
  if (to == "single-set" && doc.is_single_set())
    return usage_error(err, "translating to single-set needs a classical "
                            "document");
  if (int rc = ensure_valid(doc, threads, out); rc != kExitClean) {
    out << "refusing to translate an invalid structure\n";
    return rc;
  }
  StructureDocument result;
  result.meta = doc.meta;
  if (to == "classical")
    result.value = fc(doc.single_set(), threads);
  else
    result.value = fs(doc.classical(), threads);
  save_document(result, out_path);
  out << "wrote ";
  describe(out, out_path, result);
  return kExitClean;
}

int do_roundtrip(const std::string& file, int threads, std::ostream& out) {
  StructureDocument doc = load_document(file);
  if (int rc = ensure_valid(doc, threads, out); rc != kExitClean) {
    out << "refusing to round-trip an invalid structure\n";
    return rc;
  }
  describe(out, file, doc);
  CheckReport rep = doc.is_single_set()
                        ? check_mu(doc.single_set(), threads)
                        : check_eta(doc.classical(), threads);
  print_report(out, doc.is_single_set() ? "mu" : "eta", rep);
  return rep.passed() ? kExitClean : kExitViolations;
}

int do_invert(const std::string& file, int direction, const std::string& cell,
              bool constructive, int threads, std::ostream& out,
              std::ostream& err) {
  StructureDocument doc = load_document(file);
  if (!doc.is_single_set())
    return usage_error(err, "invert needs a single-set document");
  if (int rc = ensure_valid(doc, threads, out); rc != kExitClean) return rc;
  const auto& s = doc.single_set();
  Cell x = resolve_cell(s.names, cell);
  std::optional<InverseCertificate> cert;
  if (constructive)
    cert = synthesize_inverse_dim0(s, direction, x);
  else
    cert = ri_inverse(s, direction, x);
  if (!cert) {
    out << "none\n";
    return kExitClean;
  }
  out << "inverse(" << direction << ", " << s.names[cert->cell]
      << ") = " << s.names[cert->inverse] << "\n"
      << "  composes forward: " << (cert->composable_fwd ? "yes" : "no")
      << ", collapses to the minus face: "
      << (cert->collapses_fwd ? "yes" : "no") << "\n"
      << "  composes backward: " << (cert->composable_bwd ? "yes" : "no")
      << ", collapses to the plus face: "
      << (cert->collapses_bwd ? "yes" : "no") << "\n";
  return kExitClean;
}

int do_normalize(const std::string& word_text, int level, std::ostream& out) {
  StructuralWord w = parse_word(word_text);
  out << print_word(normalize(w, level)) << "\n";
  return kExitClean;
}

int do_lattice(const std::string& file, std::ostream& out, std::ostream& err) {
  StructureDocument doc = load_document(file);
  if (!doc.is_single_set())
    return usage_error(err, "lattice needs a single-set document");
  const auto& s = doc.single_set();
  auto label = [&](unsigned mask) {
    std::string t = "S^{";
    bool first = true;
    for (int i = 1; i <= s.dim; ++i)
      if (mask & (1u << (i - 1))) {
        if (!first) t += ',';
        t += std::to_string(i);
        first = false;
      }
    return t + "}";
  };
  const unsigned top = 1u << s.dim;
  for (unsigned mask = 0; mask < top; ++mask) {
    std::vector<int> dirs;
    for (int i = 1; i <= s.dim; ++i)
      if (mask & (1u << (i - 1))) dirs.push_back(i);
    out << label(mask) << ": " << fixed_set(s, dirs).size() << " cells\n";
  }
  for (unsigned mask = 0; mask < top; ++mask)
    for (int i = 1; i <= s.dim; ++i)
      if (!(mask & (1u << (i - 1))))
        out << label(mask | (1u << (i - 1))) << " <= " << label(mask) << "\n";
  return kExitClean;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"finite cubical category toolkit"};
  app.require_subcommand(1);

  std::string base_text, out_path, file, suite = "all", to, cell, word_text;
  std::string model = "nerve", rules = "default";
  int dim = 0, threads = 1, direction = 0, level = -1;
  bool connections = false, as_json = false, constructive = false;

  auto* gen = app.add_subcommand("gen", "generate a model structure");
  gen->add_option("--model", model, "model family (nerve)");
  gen->add_option("--base", base_text, "base category as <kind>:<m>")
      ->required();
  gen->add_option("--dim", dim, "cubical dimension")->required();
  gen->add_flag("--connections", connections, "include connection tables");
  gen->add_option("-o,--output", out_path, "output file")->required();
  gen->add_option("--threads", threads, "worker threads");

  auto* check = app.add_subcommand("check", "run axiom suites on a document");
  check->add_option("file", file, "structure document")->required();
  check->add_option(
      "--suite", suite,
      "category|cubical|connections|derived|np:<p>|all (default all)");
  check->add_flag("--json", as_json, "machine-readable report");
  check->add_option("--threads", threads, "worker threads");

  auto* translate =
      app.add_subcommand("translate", "convert between presentations");
  translate->add_option("file", file, "structure document")->required();
  translate->add_option("--to", to, "classical|single-set")
      ->required()
      ->check(CLI::IsMember({"classical", "single-set"}));
  translate->add_option("-o,--output", out_path, "output file")->required();
  translate->add_option("--threads", threads, "worker threads");

  auto* roundtrip =
      app.add_subcommand("roundtrip", "check the translation round trip");
  roundtrip->add_option("file", file, "structure document")->required();
  roundtrip->add_option("--threads", threads, "worker threads");

  auto* invert = app.add_subcommand("invert", "find a directed inverse");
  invert->add_option("file", file, "structure document")->required();
  invert->add_option("--direction", direction, "composition direction")
      ->required();
  invert->add_option("--cell", cell, "cell name or index")->required();
  invert->add_flag("--constructive", constructive,
                   "synthesize instead of scanning");
  invert->add_option("--threads", threads, "worker threads");

  auto* normalize_cmd =
      app.add_subcommand("normalize", "rewrite a structural word");
  normalize_cmd->add_option("--word", word_text, "whitespace-separated tokens")
      ->required();
  normalize_cmd->add_option("--level", level, "start level of the word")
      ->required();
  normalize_cmd->add_option("--rules", rules, "rule set (default)");

  auto* lattice = app.add_subcommand("lattice", "print the fixed-point lattice");
  lattice->add_option("file", file, "structure document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitClean : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      if (model != "nerve")
        return usage_error(err, "unknown model '" + model + "'");
      if (dim < 1) return usage_error(err, "--dim must be at least 1");
      if (threads < 1) return usage_error(err, "--threads must be at least 1");
      return do_gen(base_text, dim, connections, out_path, threads, out);
    }
    if (check->parsed()) {
      if (threads < 1) return usage_error(err, "--threads must be at least 1");
      return do_check(file, suite, as_json, threads, out, err);
    }
    if (translate->parsed()) {
      if (threads < 1) return usage_error(err, "--threads must be at least 1");
      return do_translate(file, to, out_path, threads, out, err);
    }
    if (roundtrip->parsed()) {
      if (threads < 1) return usage_error(err, "--threads must be at least 1");
      return do_roundtrip(file, threads, out);
    }
    if (invert->parsed()) {
      if (threads < 1) return usage_error(err, "--threads must be at least 1");
      return do_invert(file, direction, cell, constructive, threads, out, err);
    }
    if (normalize_cmd->parsed()) {
      if (rules != "default")
        return usage_error(err, "unknown rule set '" + rules + "'");
      if (level < 0) return usage_error(err, "--level must be at least 0");
      return do_normalize(word_text, level, out);
    }
    if (lattice->parsed()) return do_lattice(file, out, err);
  } catch (const CLI::ValidationError& e) {
    return usage_error(err, e.what());
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitStructure;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << "\n";
    return kExitStructure;
  }
  return usage_error(err, "no subcommand given");
}

int run_cli(int argc, const char* const* argv) {
  return run_cli(argc, argv, std::cout, std::cerr);
}

}  // namespace cubix
