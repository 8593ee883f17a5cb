#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wrlat/errors.hpp"
#include "wrlat/json_io.hpp"
#include "wrlat/linalg.hpp"
#include "wrlat/retraction.hpp"
#include "wrlat/strata.hpp"
#include "wrlat/verify.hpp"

namespace {

using namespace wrlat;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string pretty_gram(const SymForm& form) {
  std::vector<std::vector<std::string>> cells(form.dim());
  std::size_t width = 0;
  for (int i = 0; i < form.dim(); ++i)
    for (int j = 0; j < form.dim(); ++j) {
      cells[i].push_back(to_string(form(i, j)));
      width = std::max(width, cells[i].back().size());
    }
  std::ostringstream os;
  for (int i = 0; i < form.dim(); ++i) {
    os << "  [";
    for (int j = 0; j < form.dim(); ++j)
      os << " " << std::setw(static_cast<int>(width)) << cells[i][j];
    os << " ]\n";
  }
  return os.str();
}

int cmd_systole(const std::string& file, const std::string& format) {
  LatticeInput input = load_lattice_file(file);
  MinimalVectorData md = minimal_vectors(input.form);
  if (format == "json") {
    emit(to_json(md));
  } else {
    std::cout << "systole_sq           " << to_string(md.systole_sq) << "\n"
              << "minimal vectors      " << md.vectors.size() << " sign pairs ("
              << md.count_with_signs() << " signed)\n";
    for (const IntVec& v : md.vectors) std::cout << "  " << to_string(v) << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& file, const std::string& format) {
  LatticeInput input = load_lattice_file(file);
  StratumReport report = classify(input.form);
  if (format == "json") {
    emit(to_json(report));
  } else {
    std::cout << "rank<S>              " << report.k << "\n"
              << "in_X (well-rounded)  " << (report.in_x ? "yes" : "no") << "\n"
              << "in_Y (full span)     " << (report.in_y ? "yes" : "no") << "\n"
              << "index of <S>         "
              << (report.index ? to_string(*report.index) : std::string("infinite"))
              << "\n"
              << "systole_sq           " << to_string(report.systole_sq) << "\n"
              << "systole_sq^n / det   " << to_string(report.normalized_invariant)
              << "\n";
  }
  return 0;
}

int cmd_retract(const std::string& file, bool trace, const std::string& format) {
  LatticeInput input = load_lattice_file(file);
  RetractionTrace result = retract(input.form);
  if (format == "json") {
    emit(to_json(result, trace));
    return 0;
  }
  std::cout << "events               " << result.steps.size() << "\n";
  if (trace) {
    int step_number = 0;
    for (const RetractionStep& step : result.steps) {
      std::cout << "step " << ++step_number << ": r = " << to_string(step.event.ratio)
                << "  tau = " << tau_decimal(step.event.ratio, step.input.dim())
                << "  k " << step.event.k_before << " -> " << step.event.k_after
                << "  joining";
      for (const IntVec& v : step.event.joining) std::cout << " " << to_string(v);
      std::cout << "\n";
    }
  }
  std::cout << "final gram\n" << pretty_gram(result.final);
  return 0;
}

int cmd_flow_at(const std::string& file, const std::string& t_text,
                const std::string& format) {
  LatticeInput input = load_lattice_file(file);
  Rat t = parse_rat(t_text);
  SymForm moved = flow_at(input.form, t);
  if (format == "json") {
    emit(json{{"t", rat_to_json(t)}, {"gram", gram_to_json(moved)}});
  } else {
    std::cout << "t = " << to_string(t) << "\n" << pretty_gram(moved);
  }
  return 0;
}

int cmd_exhaustion(const std::string& file, const std::string& tol_text,
                   const std::string& format) {
  LatticeInput input = load_lattice_file(file);
  Real tolerance(tol_text);
  ExhaustionValue value = exhaustion_value(input.form, tolerance);
  if (format == "json") {
    emit(to_json(value));
  } else {
    std::cout << "value                " << value.value.str(30) << "\n"
              << "tail bound           " << value.tail_bound.str(10) << "\n"
              << "truncation radius^2  " << to_string(value.truncation_radius_sq)
              << "\n"
              << "(high-precision float; every other command is exact)\n";
  }
  return 0;
}

int cmd_verify(const std::vector<int>& dims, int samples, std::uint64_t seed,
               const std::string& format) {
  SuiteOptions options;
  if (!dims.empty()) options.dims = dims;
  options.samples = samples;
  options.seed = seed;
  std::vector<VerificationReport> reports = run_claim_suite(options);
  bool ok = suite_ok(reports);
  if (format == "json") {
    json out = {{"seed", options.seed},
                {"samples", options.samples},
                {"ok", ok},
                {"results", json::array()}};
    for (const VerificationReport& r : reports) out["results"].push_back(to_json(r));
    emit(out);
  } else {
    for (const VerificationReport& r : reports) {
      std::string status = r.pass ? "PASS" : (r.expected_pass ? "FAIL" : "FAIL-expected");
      std::cout << "[" << status << "] " << r.claim << " n=" << r.n << ": " << r.detail
                << "\n";
      if (r.pass != r.expected_pass)
        std::cout << "         mismatch: expected "
                  << (r.expected_pass ? "pass" : "fail") << "\n";
    }
    std::cout << (ok ? "all claims as expected" : "MISMATCH") << " (seed "
              << options.seed << ", " << options.samples << " samples per claim)\n";
  }
  return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wrlat: exact systoles, well-rounded strata, and the retraction flow "
               "of lattices"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "pretty"}));
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "Seed for sampled verifications");

  std::string file;
  std::string t_text;
  std::string tol_text = "1e-6";
  bool trace = false;
  std::vector<int> dims;
  int samples = 50;

  CLI::App* systole = app.add_subcommand("systole", "Systole and minimal vectors");
  systole->add_option("file", file, "Lattice JSON file, or - for stdin")->required();

  CLI::App* classify_cmd = app.add_subcommand("classify", "Stratum membership report");
  classify_cmd->add_option("file", file, "Lattice JSON file, or - for stdin")->required();

  CLI::App* retract_cmd =
      app.add_subcommand("retract", "Flow into the well-rounded locus");
  retract_cmd->add_option("file", file, "Lattice JSON file, or - for stdin")->required();
  retract_cmd->add_flag("--trace", trace, "Include per-event data");

  CLI::App* flow_cmd = app.add_subcommand("flow-at", "Gram form at flow time t");
  flow_cmd->add_option("file", file, "Lattice JSON file, or - for stdin")->required();
  flow_cmd->add_option("--t", t_text, "Flow parameter in [1, r], as p/q")->required();

  CLI::App* exhaustion_cmd =
      app.add_subcommand("exhaustion", "Exhaustion-function value with tail bound");
  exhaustion_cmd->add_option("file", file, "Lattice JSON file, or - for stdin")
      ->required();
  exhaustion_cmd->add_option("--tol", tol_text, "Tail tolerance (default 1e-6)");

  CLI::App* verify_cmd =
      app.add_subcommand("verify-paper", "Run the built-in claim verification suite");
  verify_cmd->add_option("--n", dims, "Dimensions to check (default 5 6 7 8)");
  verify_cmd->add_option("--samples", samples, "Random draws per claim (default 50)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (systole->parsed()) return cmd_systole(file, format);
    if (classify_cmd->parsed()) return cmd_classify(file, format);
    if (retract_cmd->parsed()) return cmd_retract(file, trace, format);
    if (flow_cmd->parsed()) return cmd_flow_at(file, t_text, format);
    if (exhaustion_cmd->parsed()) return cmd_exhaustion(file, tol_text, format);
    if (verify_cmd->parsed()) return cmd_verify(dims, samples, seed, format);
  } catch (const wrlat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
