// ghdist command line: exact distances and bounds between finite metric
// spaces, canonical JSON space files, identity verification, stabilizer
// probes. Exit codes: 0 ok, 1 invalid input, 2 budget exhausted, 3 failed
// verification, 64 usage.

#include <cstdint>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ghdist/cloud_algebra.hpp"
#include "ghdist/constructions.hpp"
#include "ghdist/correspondence.hpp"
#include "ghdist/errors.hpp"
#include "ghdist/gh_search.hpp"
#include "ghdist/metric_space.hpp"
#include "ghdist/realization.hpp"
#include "ghdist/space_io.hpp"
#include "ghdist/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitBudget = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitUsage = 64;

struct UsageError {
  std::string message;
};

ghdist::Rational flag_rational(const std::string& text, const char* flag) {
  try {
    return ghdist::parse_rational(text);
  } catch (const ghdist::GhError&) {
    throw UsageError{std::string(flag) + " expects an integer or p/q, got '" +
                     text + "'"};
  }
}

std::vector<std::size_t> flag_index_list(const std::string& text, const char* flag) {
  std::vector<std::size_t> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(start, comma - start);
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw UsageError{std::string(flag) + " expects comma-separated indices, got '" +
                       text + "'"};
    }
    out.push_back(std::stoul(item));
    start = comma + 1;
  }
  return out;
}

std::vector<ghdist::Rational> parse_lambda_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = first == std::string::npos ? std::string::npos
                                                 : text.find(':', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      text.find(':', second + 1) != std::string::npos) {
    throw UsageError{"--lambda-grid expects START:END:STEP"};
  }
  ghdist::Rational start = flag_rational(text.substr(0, first), "--lambda-grid");
  ghdist::Rational end = flag_rational(text.substr(first + 1, second - first - 1),
                                       "--lambda-grid");
  ghdist::Rational step = flag_rational(text.substr(second + 1), "--lambda-grid");
  if (step <= 0 || start <= 0 || end < start) {
    throw UsageError{"--lambda-grid needs 0 < START <= END and STEP > 0"};
  }
  std::vector<ghdist::Rational> grid;
  for (ghdist::Rational v = start; v <= end; v += step) {
    grid.push_back(v);
  }
  return grid;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    ghdist::write_text_file(out_path, text);
  }
}

std::string witness_line(const ghdist::Correspondence& witness) {
  std::string line = "witness:";
  for (const auto& [i, j] : witness.pairs()) {
    line += " (" + std::to_string(i) + "," + std::to_string(j) + ")";
  }
  return line;
}

int cmd_space_validate(const std::string& file) {
  std::string text = ghdist::read_text_file(file);
  ghdist::Json doc;
  try {
    doc = ghdist::Json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    std::cout << "invalid: not JSON (" << err.what() << ")\n";
    return kExitInvalid;
  }
  try {
    ghdist::FiniteMetricSpace space = ghdist::space_from_json(doc);
    std::cout << "valid: " << space.size() << " points, diameter "
              << ghdist::to_string(ghdist::diameter(space)) << "\n";
    return kExitOk;
  } catch (const ghdist::ValidationError& err) {
    std::cout << "invalid: " << err.violations().size() << " violation"
              << (err.violations().size() == 1 ? "" : "s") << "\n";
    for (const auto& violation : err.violations()) {
      std::cout << "- " << violation.describe() << "\n";
    }
    return kExitInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact distances between finite metric spaces"};
  app.require_subcommand(1);

  // space
  auto* space = app.add_subcommand("space", "create, validate, transform space files");
  space->require_subcommand(1);

  auto* space_validate = space->add_subcommand("validate", "check a space file against the metric axioms");
  std::string validate_file;
  space_validate->add_option("file", validate_file, "space JSON file")->required();

  auto* space_construct = space->add_subcommand("construct", "build a space from a named family");
  space_construct->set_help_flag("--help", "print help");  // frees -h for the step flag
  std::string construct_family, construct_out;
  std::string opt_n, opt_h, opt_p, opt_q, opt_a, opt_d, opt_phi;
  space_construct->add_option("--family", construct_family,
                              "integers|segment|rtilde|geometric|phi|gapped")->required();
  space_construct->add_option("--n", opt_n, "half-width / point count");
  space_construct->add_option("--h", opt_h, "grid step");
  space_construct->add_option("--p", opt_p, "integer base");
  space_construct->add_option("--q", opt_q, "rational base");
  space_construct->add_option("--a", opt_a, "gap center");
  space_construct->add_option("--d", opt_d, "gap radius");
  space_construct->add_option("--phi", opt_phi, "exponent family: 1 squares, 2 powers of two");
  space_construct->add_option("--out", construct_out, "output file (default stdout)");

  auto* space_scale = space->add_subcommand("scale", "multiply all distances by a factor");
  std::string scale_file, scale_factor, scale_out;
  space_scale->add_option("file", scale_file, "space JSON file")->required();
  space_scale->add_option("--factor", scale_factor, "nonnegative rational")->required();
  space_scale->add_option("--out", scale_out, "output file (default stdout)");

  // dist
  auto* dist = app.add_subcommand("dist", "distances, bounds, Hausdorff certificates");
  dist->require_subcommand(1);

  auto* dist_exact = dist->add_subcommand("exact", "exact distance by branch and bound");
  std::string exact_a, exact_b;
  std::uint64_t exact_budget = 0;
  bool exact_deterministic = false;
  dist_exact->add_option("A", exact_a, "first space file")->required();
  dist_exact->add_option("B", exact_b, "second space file")->required();
  dist_exact->add_option("--budget", exact_budget, "search node budget (0 = unlimited)");
  dist_exact->add_flag("--deterministic", exact_deterministic,
                       "canonicalize the witness");

  auto* dist_bounds = dist->add_subcommand("bounds", "cheap lower and greedy upper bound");
  std::string bounds_a, bounds_b;
  std::size_t bounds_restarts = 8;
  dist_bounds->add_option("A", bounds_a, "first space file")->required();
  dist_bounds->add_option("B", bounds_b, "second space file")->required();
  dist_bounds->add_option("--restarts", bounds_restarts, "greedy restarts (default 8)");

  auto* dist_oracle = dist->add_subcommand("oracle", "exhaustive ground truth, at most 4x4 points");
  std::string oracle_a, oracle_b;
  dist_oracle->add_option("A", oracle_a, "first space file")->required();
  dist_oracle->add_option("B", oracle_b, "second space file")->required();

  auto* dist_hausdorff = dist->add_subcommand("hausdorff", "Hausdorff distance between two subsets of one ambient space");
  std::string hausdorff_file, hausdorff_a, hausdorff_b;
  dist_hausdorff->add_option("ambient", hausdorff_file, "ambient space file")->required();
  dist_hausdorff->add_option("--a", hausdorff_a, "indices of subset A")->required();
  dist_hausdorff->add_option("--b", hausdorff_b, "indices of subset B")->required();

  // probe
  auto* probe = app.add_subcommand("probe", "bound curves over parameterized families");
  probe->require_subcommand(1);

  auto* probe_stab = probe->add_subcommand("stabilizer", "bounds on |X, lambda X| over a factor grid");
  probe_stab->set_help_flag("--help", "print help");
  std::string probe_family = "geometric", probe_grid, probe_out;
  std::string probe_n, probe_h, probe_p, probe_q, probe_a, probe_d, probe_phi;
  std::size_t probe_restarts = 8;
  probe_stab->add_option("--family", probe_family, "family name (default geometric)");
  probe_stab->add_option("--n", probe_n, "half-width / point count");
  probe_stab->add_option("--h", probe_h, "grid step");
  probe_stab->add_option("--p", probe_p, "integer base");
  probe_stab->add_option("--q", probe_q, "rational base");
  probe_stab->add_option("--a", probe_a, "gap center");
  probe_stab->add_option("--d", probe_d, "gap radius");
  probe_stab->add_option("--phi", probe_phi, "exponent family: 1 squares, 2 powers of two");
  probe_stab->add_option("--lambda-grid", probe_grid, "START:END:STEP")->required();
  probe_stab->add_option("--restarts", probe_restarts, "greedy restarts (default 8)");
  probe_stab->add_option("--out", probe_out, "CSV output file")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "run the identity verification suite");
  verify->require_subcommand(1);

  auto* verify_paper_cmd = verify->add_subcommand("paper", "all finite-scale identity checks");
  verify_paper_cmd->set_help_flag("--help", "print help");
  long verify_n = 2;
  std::string verify_h = "1/2";
  std::uint64_t verify_budget = 0;
  bool verify_deterministic = false;
  std::string verify_report_path;
  verify_paper_cmd->add_option("--n", verify_n, "half-width (default 2)");
  verify_paper_cmd->add_option("--h", verify_h, "grid step (default 1/2)");
  verify_paper_cmd->add_option("--budget", verify_budget, "search node budget (0 = unlimited)");
  verify_paper_cmd->add_flag("--deterministic", verify_deterministic,
                             "canonical witnesses and byte-stable report");
  verify_paper_cmd->add_option("--report", verify_report_path, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (space_validate->parsed()) {
      return cmd_space_validate(validate_file);
    }

    if (space_construct->parsed()) {
      ghdist::FamilySpec spec;
      spec.kind = ghdist::family_from_name(construct_family);
      if (!opt_n.empty()) spec.params["n"] = flag_rational(opt_n, "--n");
      if (!opt_h.empty()) spec.params["h"] = flag_rational(opt_h, "--h");
      if (!opt_p.empty()) spec.params["p"] = flag_rational(opt_p, "--p");
      if (!opt_q.empty()) spec.params["q"] = flag_rational(opt_q, "--q");
      if (!opt_a.empty()) spec.params["a"] = flag_rational(opt_a, "--a");
      if (!opt_d.empty()) spec.params["d"] = flag_rational(opt_d, "--d");
      if (!opt_phi.empty()) spec.params["phi"] = flag_rational(opt_phi, "--phi");
      ghdist::FiniteMetricSpace result = ghdist::instantiate(spec);
      emit(ghdist::space_to_text(result), construct_out);
      return kExitOk;
    }

    if (space_scale->parsed()) {
      ghdist::FiniteMetricSpace space_in = ghdist::read_space_file(scale_file);
      ghdist::Rational factor = flag_rational(scale_factor, "--factor");
      emit(ghdist::space_to_text(ghdist::scale(space_in, factor)), scale_out);
      return kExitOk;
    }

    if (dist_exact->parsed()) {
      ghdist::FiniteMetricSpace a = ghdist::read_space_file(exact_a);
      ghdist::FiniteMetricSpace b = ghdist::read_space_file(exact_b);
      ghdist::SearchOptions options;
      options.budget = exact_budget;
      options.deterministic = exact_deterministic;
      ghdist::GHResult result = ghdist::gh_exact(a, b, options);
      if (result.status == ghdist::SolveStatus::Exact) {
        std::cout << "value: " << ghdist::to_string(result.value) << "\n"
                  << "status: exact\n"
                  << "nodes: " << result.nodes << "\n"
                  << witness_line(result.witness) << "\n";
        return kExitOk;
      }
      std::cout << "status: bounds\n"
                << "lower: " << ghdist::to_string(result.lower) << "\n"
                << "upper: " << ghdist::to_string(result.upper) << "\n"
                << "nodes: " << result.nodes << "\n"
                << witness_line(result.witness) << "\n";
      return kExitBudget;
    }

    if (dist_bounds->parsed()) {
      ghdist::FiniteMetricSpace a = ghdist::read_space_file(bounds_a);
      ghdist::FiniteMetricSpace b = ghdist::read_space_file(bounds_b);
      ghdist::Rational lower = ghdist::gh_lower_bound(a, b);
      auto [upper, witness] = ghdist::gh_upper_bound_greedy(a, b, bounds_restarts);
      std::cout << "lower: " << ghdist::to_string(lower) << "\n"
                << "upper: " << ghdist::to_string(upper) << "\n"
                << witness_line(witness) << "\n";
      return kExitOk;
    }

    if (dist_oracle->parsed()) {
      ghdist::FiniteMetricSpace a = ghdist::read_space_file(oracle_a);
      ghdist::FiniteMetricSpace b = ghdist::read_space_file(oracle_b);
      ghdist::GHResult result = ghdist::gh_oracle(a, b);
      std::cout << "value: " << ghdist::to_string(result.value) << "\n"
                << "status: exact\n"
                << witness_line(result.witness) << "\n";
      return kExitOk;
    }

    if (dist_hausdorff->parsed()) {
      ghdist::FiniteMetricSpace ambient = ghdist::read_space_file(hausdorff_file);
      ghdist::Realization realization(std::move(ambient),
                                      flag_index_list(hausdorff_a, "--a"),
                                      flag_index_list(hausdorff_b, "--b"));
      std::cout << "value: " << ghdist::to_string(ghdist::hausdorff_in_ambient(realization))
                << "\n";
      return kExitOk;
    }

    if (probe_stab->parsed()) {
      ghdist::FamilySpec spec;
      spec.kind = ghdist::family_from_name(probe_family);
      if (!probe_n.empty()) spec.params["n"] = flag_rational(probe_n, "--n");
      if (!probe_h.empty()) spec.params["h"] = flag_rational(probe_h, "--h");
      if (!probe_p.empty()) spec.params["p"] = flag_rational(probe_p, "--p");
      if (!probe_q.empty()) spec.params["q"] = flag_rational(probe_q, "--q");
      if (!probe_a.empty()) spec.params["a"] = flag_rational(probe_a, "--a");
      if (!probe_d.empty()) spec.params["d"] = flag_rational(probe_d, "--d");
      if (!probe_phi.empty()) spec.params["phi"] = flag_rational(probe_phi, "--phi");
      auto points = ghdist::stabilizer_probe(spec, parse_lambda_grid(probe_grid),
                                             probe_restarts);
      ghdist::write_text_file(probe_out, ghdist::probe_csv(points));
      return kExitOk;
    }

    if (verify_paper_cmd->parsed()) {
      ghdist::VerifyOptions options;
      options.n = verify_n;
      options.h = flag_rational(verify_h, "--h");
      options.budget = verify_budget;
      options.deterministic = verify_deterministic;
      ghdist::VerifyReport report = ghdist::verify_paper(options);
      std::cout << ghdist::report_text(report);
      if (!verify_report_path.empty()) {
        ghdist::write_text_file(verify_report_path,
                                ghdist::canonical_text(ghdist::report_to_json(report)));
      }
      return report.all_required_pass() ? kExitOk : kExitVerifyFailed;
    }
  } catch (const UsageError& err) {
    std::cerr << "usage error: " << err.message << "\n";
    return kExitUsage;
  } catch (const ghdist::ValidationError& err) {
    std::cerr << "error: invalid metric space\n";
    for (const auto& violation : err.violations()) {
      std::cerr << "- " << violation.describe() << "\n";
    }
    return kExitInvalid;
  } catch (const ghdist::GhError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInvalid;
  }

  std::cerr << "usage error: missing subcommand\n";
  return kExitUsage;
}
