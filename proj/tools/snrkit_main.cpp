// snrkit — command-line workbench for finite seminearrings.
//
// Exit codes: 0 success, 1 usage error, 2 parse/validation error,
// 3 a theorem report came back inequivalent (a reportable finding).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "snrkit/construct.hpp"
#include "snrkit/enumerate.hpp"
#include "snrkit/snr_format.hpp"

namespace {

using namespace snrkit;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitFinding = 3;

struct Options {
  bool json = false;
  bool timings = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SnrError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ReportFormat format_of(const Options& opt) {
  return opt.json ? ReportFormat::json : ReportFormat::text;
}

SnrDocument load_document(const std::string& path) {
  return parse_snr(read_file(path));
}

// Validated load for the analysis commands; `check` reports axioms instead.
FiniteSeminearring load_seminearring(const SnrDocument& doc) {
  return to_seminearring(doc);
}

int run_check(const std::string& path, const Options& opt) {
  const SnrDocument doc = load_document(path);
  CheckOutcome out;
  try {
    to_seminearring(doc);
  } catch (const AxiomError& e) {
    out.valid = false;
    out.witness = e.witness().elements;
    switch (e.witness().kind) {
      case ViolationKind::associativity:
        out.axiom = std::string(e.what()).find("multiplication") !=
                            std::string::npos
                        ? "mul_associativity"
                        : "add_associativity";
        break;
      case ViolationKind::right_distributivity:
        out.axiom = "right_distributivity";
        break;
      default:
        out.axiom = std::string(to_string(e.witness().kind));
    }
  }
  std::cout << emit_check_report(doc, out, format_of(opt));
  return out.valid ? kExitOk : kExitData;
}

int run_classify(const std::string& path, const Options& opt) {
  const SnrDocument doc = load_document(path);
  const FiniteSeminearring s = load_seminearring(doc);
  std::cout << emit_classification_report(s, doc.name, classify(s),
                                          format_of(opt));
  return kExitOk;
}

int run_greens(const std::string& path, const std::string& relation,
               const Options& opt) {
  const SnrDocument doc = load_document(path);
  const FiniteSeminearring s = load_seminearring(doc);
  std::optional<char> rel;
  if (!relation.empty()) rel = relation[0];
  std::cout << emit_greens_report(s, doc.name, greens_relations(s.add()),
                                  format_of(opt), rel);
  return kExitOk;
}

int run_decompose(const std::string& path, const Options& opt) {
  const SnrDocument doc = load_document(path);
  const FiniteSeminearring s = load_seminearring(doc);
  std::cout << emit_components_report(s, doc.name, h_plus_decomposition(s),
                                      format_of(opt));
  return kExitOk;
}

int run_verify(const std::string& path, const std::string& theorem,
               bool zero_symmetric, const Options& opt) {
  const SnrDocument doc = load_document(path);
  const FiniteSeminearring s = load_seminearring(doc);
  std::vector<TheoremReport> reports;
  if (theorem.empty()) {
    reports = verify_all(s);
  } else if (theorem == "mult-reg") {
    reports.push_back(verify_mult_reg(s, zero_symmetric));
  } else if (theorem == "mult-inv") {
    reports.push_back(verify_mult_inverse(s, zero_symmetric));
  } else if (theorem == "compl-reg") {
    reports.push_back(verify_compl_reg(s, zero_symmetric));
  } else {
    reports.push_back(verify_clifford(s));
  }
  std::cout << emit_theorems_report(s, doc.name, reports, format_of(opt));
  for (const TheoremReport& rep : reports)
    if (!rep.equivalent) return kExitFinding;
  return kExitOk;
}

int run_enumerate(const EnumSpec& spec, bool count_only, const Options& opt) {
  if (count_only) {
    const std::uint64_t count = count_seminearrings(spec);
    if (opt.json)
      std::cout << "{\n  \"count\": " << count << "\n}\n";
    else
      std::cout << count << "\n";
    return kExitOk;
  }
  std::uint64_t index = 0;
  enumerate_seminearrings(spec, [&](const FiniteSeminearring& s) {
    const std::string name =
        "n" + std::to_string(spec.order) + "_" + std::to_string(index);
    const SnrDocument doc = to_document(s, name);
    if (opt.json) {
      std::cout << "{\"name\":\"" << name << "\",\"order\":" << spec.order
                << ",\"add\":[";
      for (std::size_t i = 0; i < doc.add.entries().size(); ++i)
        std::cout << (i ? "," : "") << doc.add.entries()[i];
      std::cout << "],\"mul\":[";
      for (std::size_t i = 0; i < doc.mul.entries().size(); ++i)
        std::cout << (i ? "," : "") << doc.mul.entries()[i];
      std::cout << "]}\n";
    } else {
      if (index) std::cout << "\n";
      std::cout << serialize_snr(doc);
    }
    ++index;
    return true;
  });
  return kExitOk;
}

int run_example(const std::string& which, int p, const Options& opt) {
  FiniteSeminearring s = left_zero_T();
  std::string name = "T";
  if (which == "L") {
    s = two_semilattice_L();
    name = "L";
  } else if (which == "S") {
    s = example_S(p);
    name = "S_p" + std::to_string(p);
  } else if (which == "L-matrix") {
    s = example_L(p);
    name = "L_matrix_p" + std::to_string(p);
  }
  const SnrDocument doc = to_document(s, name);
  // The document itself is the output; --json wraps the same data.
  if (opt.json) {
    std::cout << "{\"name\":\"" << name << "\",\"order\":" << doc.order
              << ",\"add\":[";
    for (std::size_t i = 0; i < doc.add.entries().size(); ++i)
      std::cout << (i ? "," : "") << doc.add.entries()[i];
    std::cout << "],\"mul\":[";
    for (std::size_t i = 0; i < doc.mul.entries().size(); ++i)
      std::cout << (i ? "," : "") << doc.mul.entries()[i];
    std::cout << "]}\n";
  } else {
    std::cout << serialize_snr(doc);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"snrkit: finite seminearring workbench"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "emit JSON reports");
  app.add_flag("--timings", opt.timings, "print wall time to stderr");

  std::string file;
  std::string relation;
  std::string theorem;
  bool zero_symmetric = false;
  EnumSpec spec;
  std::vector<std::string> filter_names;
  std::uint64_t limit_value = 0;
  bool count_only = false;
  std::string example_name;
  int prime = 2;

  CLI::App* check = app.add_subcommand("check", "validate the axioms of a .snr file");
  check->add_option("file", file)->required();

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "classification flags of a .snr file");
  classify_cmd->add_option("file", file)->required();

  CLI::App* greens_cmd = app.add_subcommand(
      "greens", "Green's relation classes of the additive reduct");
  greens_cmd->add_option("file", file)->required();
  greens_cmd->add_option("--relation", relation, "one of L R H J")
      ->check(CLI::IsMember({"L", "R", "H", "J"}));

  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "H+ class components and their flags");
  decompose_cmd->add_option("file", file)->required();

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check the structure-theorem equivalences on an instance");
  verify_cmd->add_option("file", file)->required();
  verify_cmd->add_option("--theorem", theorem, "mult-reg mult-inv compl-reg clifford")
      ->check(CLI::IsMember({"mult-reg", "mult-inv", "compl-reg", "clifford"}));
  verify_cmd->add_flag("--zero-symmetric", zero_symmetric,
                       "zero-symmetric variant of the chosen theorem");

  CLI::App* enum_cmd =
      app.add_subcommand("enumerate", "exhaustively generate seminearrings");
  enum_cmd->add_option("--order", spec.order, "carrier size, 1..5")
      ->required()
      ->check(CLI::Range(1, 5));
  enum_cmd->add_flag("--up-to-iso", spec.up_to_iso,
                     "one representative per isomorphism class");
  enum_cmd->add_option("--filter", filter_names,
                       "classification flag; repeatable");
  CLI::Option* limit_opt =
      enum_cmd->add_option("--limit", limit_value, "stop after this many structures")
          ->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--count-only", count_only, "print only the count");

  CLI::App* example_cmd =
      app.add_subcommand("example", "emit a built-in instance as .snr");
  example_cmd->add_option("--name", example_name, "T L S L-matrix")
      ->required()
      ->check(CLI::IsMember({"T", "L", "S", "L-matrix"}));
  example_cmd->add_option("--p", prime, "prime modulus for the matrix part");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto t0 = std::chrono::steady_clock::now();
  int rc = kExitOk;
  try {
    if (*check) {
      rc = run_check(file, opt);
    } else if (*classify_cmd) {
      rc = run_classify(file, opt);
    } else if (*greens_cmd) {
      rc = run_greens(file, relation, opt);
    } else if (*decompose_cmd) {
      rc = run_decompose(file, opt);
    } else if (*verify_cmd) {
      if (zero_symmetric && theorem.empty()) {
        std::cerr << "--zero-symmetric requires --theorem\n";
        return kExitUsage;
      }
      if (zero_symmetric && theorem == "clifford") {
        std::cerr << "the clifford theorem has no zero-symmetric variant\n";
        return kExitUsage;
      }
      rc = run_verify(file, theorem, zero_symmetric, opt);
    } else if (*enum_cmd) {
      if (limit_opt->count() > 0) spec.limit = limit_value;
      for (const std::string& fname : filter_names) {
        const std::optional<Flag> f = flag_from_string(fname);
        if (!f) {
          std::cerr << "unknown filter flag: " << fname << "\n";
          return kExitUsage;
        }
        spec.filters.push_back(*f);
      }
      rc = run_enumerate(spec, count_only, opt);
    } else if (*example_cmd) {
      rc = run_example(example_name, prime, opt);
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitData;
  } catch (const AxiomError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitData;
  } catch (const SnrError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  if (opt.timings) {
    const auto dt = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - t0);
    std::cerr << "elapsed_ms " << dt.count() << "\n";
  }
  return rc;
}
