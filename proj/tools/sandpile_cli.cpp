// Command-line front end: thick-cycle groups in closed form, generic
// sandpile groups via Smith normal form, the minor-selection algorithm
// with its iteration trace, planar-duality comparisons, the monodromy
// pairing, and the cross-verification sweep.
//
// Output is a single JSON document on stdout unless --pretty is given.
// Exit codes: 0 success, 1 verification/mismatch failure, 2 usage,
// parse, or precondition errors.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sandpile/duality.hpp"
#include "sandpile/exact_linalg.hpp"
#include "sandpile/json_io.hpp"
#include "sandpile/multigraph.hpp"
#include "sandpile/sandpile_group.hpp"
#include "sandpile/thick_cycle.hpp"
#include "sandpile/verify.hpp"

namespace {

using nlohmann::json;
using namespace sandpile;

constexpr int kExitSuccess = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

std::string join_indices(const std::vector<std::size_t>& idx) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i > 0) out << ",";
    out << idx[i];
  }
  out << ")";
  return out.str();
}

json indices_to_json(const std::vector<std::size_t>& idx) {
  return json(idx);
}

json mpz_list_to_json(const std::vector<mpz_class>& v) {
  json out = json::array();
  for (const mpz_class& z : v) out.push_back(mpz_to_json(z));
  return out;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a positive integer: '" + item + "'");
    }
    if (pos != item.size()) {
      throw std::invalid_argument("not a positive integer: '" + item + "'");
    }
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) {
    throw std::invalid_argument("expected a comma-separated index list");
  }
  return out;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open file: " + path);
  }
  json j;
  in >> j;
  return j;
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

// ---------------------------------------------------------------- group

struct GroupArgs {
  std::string multiplicities;
  bool via_snf = false;
  bool both = false;
  bool pretty = false;
};

json group_report(const MultiplicityVector& a, bool via_snf) {
  json doc;
  doc["multiplicities"] = mpz_list_to_json(a.entries());
  AbelianGroup grp =
      via_snf ? sandpile_group(build_thick_cycle(a)) : thick_cycle_group(a);
  doc["method"] = via_snf ? "snf" : "closed-form";
  if (!via_snf && a.size() >= 3) {
    doc["g_sequence"] = mpz_list_to_json(gcd_sequence(a));
  }
  json grp_json = group_to_json(grp);
  doc["invariant_factors"] = grp_json["invariant_factors"];
  doc["order"] = grp_json["order"];
  doc["group"] = grp.to_string();
  return doc;
}

int cmd_group(const GroupArgs& args) {
  const MultiplicityVector a = MultiplicityVector::parse(args.multiplicities);
  if (args.both) {
    const AbelianGroup closed = thick_cycle_group(a);
    const AbelianGroup snf = sandpile_group(build_thick_cycle(a));
    const bool match = groups_isomorphic(closed, snf);
    if (args.pretty) {
      std::cout << "multiplicities: " << a.to_string() << "\n"
                << "closed form: " << closed.to_string() << " (order "
                << closed.order() << ")\n"
                << "snf:         " << snf.to_string() << " (order "
                << snf.order() << ")\n"
                << "match: " << (match ? "yes" : "NO") << "\n";
    } else {
      json doc;
      doc["multiplicities"] = mpz_list_to_json(a.entries());
      doc["closed_form"] = group_to_json(closed);
      doc["snf"] = group_to_json(snf);
      doc["match"] = match;
      emit(doc);
    }
    return match ? kExitSuccess : kExitVerificationFailure;
  }

  if (args.pretty) {
    const json doc = group_report(a, args.via_snf);
    std::cout << "multiplicities: " << a.to_string() << "\n";
    if (doc.contains("g_sequence")) {
      std::cout << "g sequence: ";
      const auto& gs = doc["g_sequence"];
      for (std::size_t i = 0; i < gs.size(); ++i) {
        if (i > 0) std::cout << ", ";
        std::cout << gs[i];
      }
      std::cout << "\n";
    }
    std::cout << "order: " << doc["order"] << "\n"
              << "group: " << doc["group"].get<std::string>() << "\n";
  } else {
    emit(group_report(a, args.via_snf));
  }
  return kExitSuccess;
}

// ---------------------------------------------------------- graph-group

struct GraphGroupArgs {
  std::string graph_file;
  std::optional<std::size_t> sink;
  bool pretty = false;
};

int cmd_graph_group(const GraphGroupArgs& args) {
  const Multigraph g = graph_from_json(load_json_file(args.graph_file));
  const AbelianGroup grp = sandpile_group(g, args.sink);
  if (args.pretty) {
    std::cout << "group: " << grp.to_string() << "\n"
              << "order: " << grp.order() << "\n";
  } else {
    emit(group_to_json(grp));
  }
  return kExitSuccess;
}

// ---------------------------------------------------------- minor-select

struct MinorSelectArgs {
  std::size_t n = 0;
  std::string subset;
  std::string multiplicities;  // optional
  bool pretty = false;
};

int cmd_minor_select(const MinorSelectArgs& args) {
  const std::vector<std::size_t> subset = parse_index_list(args.subset);
  const IndexSelection sel = select_minor_indices(args.n, subset);

  bool verified = true;  // generic post-check already passed
  std::optional<MultiplicityVector> mults;
  if (!args.multiplicities.empty()) {
    mults = MultiplicityVector::parse(args.multiplicities);
    if (mults->size() != args.n) {
      throw std::invalid_argument(
          "multiplicity vector length does not match n");
    }
    verified = verify_selected_minor(*mults, subset);
  }

  if (args.pretty) {
    std::cout << "n = " << args.n << ", I = " << join_indices(subset) << "\n";
    if (sel.step1) {
      std::cout << "Step 1 shortcut: isolated row or column, R = C = I\n";
    } else {
      std::cout << "Step 2 iterations:\n";
      std::cout << std::left << std::setw(10) << "Iteration" << std::setw(4)
                << "k" << std::setw(14) << "R_k-R_{k-1}" << std::setw(22)
                << "Resulting R" << "Resulting C\n";
      for (const MinorSelectionStep& step : sel.trace) {
        std::ostringstream diff;
        diff << step.r_k << "-" << step.r_prev << "=" << step.difference;
        std::cout << std::left << std::setw(10) << step.iteration
                  << std::setw(4) << step.k << std::setw(14) << diff.str();
        if (step.changed) {
          std::cout << std::setw(22) << join_indices(step.rows)
                    << join_indices(step.cols) << "\n";
        } else {
          std::cout << std::setw(22) << "no change" << "no change\n";
        }
      }
      if (sel.wrap_repair) {
        std::cout << "cyclic wrap repair: indices 1 and n are adjacent on "
                     "the cycle; leading run restored to the main diagonal\n";
      }
    }
    std::cout << "R = " << join_indices(sel.rows) << "\n"
              << "C = " << join_indices(sel.cols) << "\n"
              << "determinant check: " << (verified ? "passed" : "FAILED")
              << "\n";
  } else {
    json doc;
    doc["n"] = args.n;
    doc["subset"] = indices_to_json(subset);
    doc["step1"] = sel.step1;
    doc["wrap_repair"] = sel.wrap_repair;
    doc["rows"] = indices_to_json(sel.rows);
    doc["cols"] = indices_to_json(sel.cols);
    json trace = json::array();
    for (const MinorSelectionStep& step : sel.trace) {
      trace.push_back(json{{"iteration", step.iteration},
                           {"k", step.k},
                           {"r_k", step.r_k},
                           {"r_prev", step.r_prev},
                           {"difference", step.difference},
                           {"changed", step.changed},
                           {"rows", indices_to_json(step.rows)},
                           {"cols", indices_to_json(step.cols)}});
    }
    doc["trace"] = std::move(trace);
    if (mults) {
      doc["multiplicities"] = mpz_list_to_json(mults->entries());
    }
    doc["determinant_check"] = verified;
    emit(doc);
  }
  return verified ? kExitSuccess : kExitVerificationFailure;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  VerifyOptions options;
  bool pretty = false;
};

int cmd_verify(const VerifyArgs& args) {
  const VerifyReport report = run_verification(args.options);
  if (args.pretty) {
    std::cout << "instances checked: " << report.instances_checked << "\n"
              << "checks run: " << report.checks_run << "\n"
              << "failures: " << report.failures.size() << "\n";
    for (const VerifyFailure& f : report.failures) {
      std::cout << "  " << f.check << " on " << f.input << ": expected "
                << f.expected << ", got " << f.actual << "\n";
    }
  } else {
    json doc;
    doc["instances_checked"] = report.instances_checked;
    doc["checks_run"] = report.checks_run;
    json failures = json::array();
    for (const VerifyFailure& f : report.failures) {
      failures.push_back(json{{"check", f.check},
                              {"input", f.input},
                              {"expected", f.expected},
                              {"actual", f.actual}});
    }
    doc["failures"] = std::move(failures);
    emit(doc);
  }
  // Wall time goes to stderr so stdout stays bit-identical across runs.
  std::cerr << "elapsed: " << std::fixed << std::setprecision(3)
            << report.elapsed_seconds << " s\n";
  return report.ok() ? kExitSuccess : kExitVerificationFailure;
}

// ------------------------------------------------------------------ dual

json comparison_to_json(const DualComparison& cmp) {
  json doc;
  doc["multiplicities"] = mpz_list_to_json(cmp.multiplicities.entries());
  doc["closed_form"] = group_to_json(cmp.closed_form);
  doc["snf_thick"] = group_to_json(cmp.snf_thick);
  doc["snf_dual"] = group_to_json(cmp.snf_dual);
  doc["thick_sides_match"] = cmp.thick_sides_match;
  doc["dual_isomorphic"] = cmp.dual_isomorphic;
  return doc;
}

void print_comparison(const DualComparison& cmp) {
  std::cout << "thick cycle " << cmp.multiplicities.to_string() << "\n"
            << "closed form: " << cmp.closed_form.to_string() << "\n"
            << "snf (thick cycle): " << cmp.snf_thick.to_string() << "\n"
            << "snf (dual graph):  " << cmp.snf_dual.to_string() << "\n"
            << "thick sides match: " << (cmp.thick_sides_match ? "yes" : "NO")
            << "\n"
            << "dual isomorphic:   " << (cmp.dual_isomorphic ? "yes" : "NO")
            << "\n";
}

struct BananaArgs {
  std::string lengths;
  bool pretty = false;
};

int cmd_dual_banana(const BananaArgs& args) {
  const std::vector<std::size_t> lengths = parse_index_list(args.lengths);
  const DualComparison cmp = banana_dual(lengths);
  if (args.pretty) {
    std::cout << "subdivided banana, strand lengths "
              << join_indices(lengths) << "\n";
    print_comparison(cmp);
  } else {
    json doc = comparison_to_json(cmp);
    doc["kind"] = "banana";
    doc["lengths"] = indices_to_json(lengths);
    emit(doc);
  }
  // The banana identity is a theorem: both sides must agree.
  return (cmp.thick_sides_match && cmp.dual_isomorphic)
             ? kExitSuccess
             : kExitVerificationFailure;
}

struct BookArgs {
  std::size_t n = 0;
  std::size_t k = 0;
  bool pretty = false;
};

int cmd_dual_book(const BookArgs& args) {
  const BookDualReport report = book_dual(args.n, args.k);
  if (args.pretty) {
    std::cout << "book graph B(" << args.n << "," << args.k << ")\n";
    print_comparison(report.comparison);
    std::cout << "published claim:   " << report.published_claim.to_string()
              << "\n"
              << "claim matches book group: "
              << (report.claim_matches_book ? "yes" : "no") << "\n";
  } else {
    json doc = comparison_to_json(report.comparison);
    doc["kind"] = "book";
    doc["n"] = report.n;
    doc["k"] = report.k;
    doc["published_claim"] = group_to_json(report.published_claim);
    doc["claim_matches_book"] = report.claim_matches_book;
    emit(doc);
  }
  // Only the thick-cycle identity is asserted; the book-side verdicts are
  // reported for inspection (see README on the published closed form).
  return report.comparison.thick_sides_match ? kExitSuccess
                                             : kExitVerificationFailure;
}

// --------------------------------------------------------------- pairing

struct PairingArgs {
  std::string graph_file;
  std::string a_file;
  std::string b_file;
  bool pretty = false;
};

int cmd_pairing(const PairingArgs& args) {
  const Multigraph g = graph_from_json(load_json_file(args.graph_file));
  const Divisor a = divisor_from_json(load_json_file(args.a_file));
  const Divisor b = divisor_from_json(load_json_file(args.b_file));
  const RationalMod1 value = monodromy_pairing(g, a, b);
  if (args.pretty) {
    std::cout << value.to_string() << "\n";
  } else {
    json doc;
    doc["value"] = value.to_string();
    doc["numerator"] = mpz_to_json(value.numerator());
    doc["denominator"] = mpz_to_json(value.denominator());
    emit(doc);
  }
  return kExitSuccess;
}

std::size_t enum_guard_from_env() {
  const char* raw = std::getenv("SANDPILE_ENUM_GUARD");
  if (raw == nullptr) return kEnumerationGuard;
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(raw, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != std::string(raw).size() || v == 0) {
    throw std::invalid_argument(
        "SANDPILE_ENUM_GUARD must be a positive integer, got '" +
        std::string(raw) + "'");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sandpile groups of multigraphs and thick cycles"};
  app.require_subcommand(1);

  GroupArgs group_args;
  CLI::App* group =
      app.add_subcommand("group", "Thick-cycle sandpile group (closed form)");
  group
      ->add_option("multiplicities", group_args.multiplicities,
                   "Comma-separated multiplicities, e.g. 3,2,4,2,3")
      ->required();
  group->add_flag("--via-snf", group_args.via_snf,
                  "Compute via the reduced Laplacian's Smith normal form");
  group->add_flag("--both", group_args.both,
                  "Compute both ways, report a mismatch with exit code 1");
  group->add_flag("--pretty", group_args.pretty, "Human-readable output");

  GraphGroupArgs graph_args;
  CLI::App* graph_group = app.add_subcommand(
      "graph-group", "Sandpile group of a multigraph from a JSON file");
  graph_group->add_option("graph-file", graph_args.graph_file, "Graph JSON")
      ->required();
  std::int64_t sink_raw = -1;
  graph_group->add_option("--sink", sink_raw,
                          "Sink vertex (default: last vertex)");
  graph_group->add_flag("--pretty", graph_args.pretty,
                        "Human-readable output");

  MinorSelectArgs minor_args;
  CLI::App* minor_select = app.add_subcommand(
      "minor-select", "Row/column selection with iteration trace");
  minor_select->add_option("n", minor_args.n, "Cycle length n")->required();
  minor_select
      ->add_option("subset", minor_args.subset,
                   "Comma-separated 1-based indices, e.g. 1,2,3,5,6,7,9,10")
      ->required();
  minor_select->add_option(
      "--multiplicities", minor_args.multiplicities,
      "Verify the selected minor at these multiplicities");
  minor_select->add_flag("--pretty", minor_args.pretty,
                         "Table output mirroring the iteration trace");

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "Cross-verification sweep of all results");
  verify->add_option("--n-max", verify_args.options.n_max,
                     "Longest multiplicity vector (default 8)");
  verify->add_option("--mult-max", verify_args.options.mult_max,
                     "Largest multiplicity (default 6)");
  verify->add_option("--samples", verify_args.options.samples,
                     "Seeded random vectors (default 500)");
  verify->add_option("--seed", verify_args.options.seed,
                     "Random seed (default 0)");
  verify->add_flag("--pretty", verify_args.pretty, "Human-readable report");
  verify
      ->add_flag("--inject-fault", verify_args.options.inject_fault,
                 "Corrupt one check to prove the harness detects failures")
      ->group("");  // hidden: self-test plumbing

  CLI::App* dual = app.add_subcommand(
      "dual", "Planar-duality comparisons (thick cycle vs dual graph)");
  dual->require_subcommand(1);

  BananaArgs banana_args;
  CLI::App* banana =
      dual->add_subcommand("banana", "Subdivided banana vs thick cycle");
  banana
      ->add_option("lengths", banana_args.lengths,
                   "Comma-separated strand lengths, e.g. 3,2,4,2,3")
      ->required();
  banana->add_flag("--pretty", banana_args.pretty, "Human-readable output");

  BookArgs book_args;
  CLI::App* book =
      dual->add_subcommand("book", "Book graph B(n,k) vs thick cycle");
  book->add_option("--n", book_args.n, "Pages have n-cycles")->required();
  book->add_option("--k", book_args.k, "Number of pages")->required();
  book->add_flag("--pretty", book_args.pretty, "Human-readable output");

  PairingArgs pairing_args;
  CLI::App* pairing = app.add_subcommand(
      "pairing", "Monodromy pairing of two degree-0 divisors");
  pairing->add_option("graph-file", pairing_args.graph_file, "Graph JSON")
      ->required();
  pairing->add_option("a-file", pairing_args.a_file, "Divisor JSON")
      ->required();
  pairing->add_option("b-file", pairing_args.b_file, "Divisor JSON")
      ->required();
  pairing->add_flag("--pretty", pairing_args.pretty, "Print just the value");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitSuccess : kExitUsage;
  }

  try {
    if (group->parsed()) return cmd_group(group_args);
    if (graph_group->parsed()) {
      if (sink_raw >= 0) {
        graph_args.sink = static_cast<std::size_t>(sink_raw);
      }
      return cmd_graph_group(graph_args);
    }
    if (minor_select->parsed()) return cmd_minor_select(minor_args);
    if (verify->parsed()) {
      verify_args.options.enum_guard = enum_guard_from_env();
      return cmd_verify(verify_args);
    }
    if (dual->parsed()) {
      if (banana->parsed()) return cmd_dual_banana(banana_args);
      if (book->parsed()) return cmd_dual_book(book_args);
    }
    if (pairing->parsed()) return cmd_pairing(pairing_args);
    std::cerr << "error: no command\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
}
