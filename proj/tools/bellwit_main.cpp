// bellwit: build multisetting tripartite Bell inequalities, bound them, and
// certify genuine tripartite entanglement from correlation data.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <string>

#include "bellwit/io.hpp"
#include "bellwit/optimize.hpp"
#include "bellwit/witness.hpp"

namespace {

using bellwit::BellTensor;
using bellwit::Family;

struct TensorSource {
  std::string family;
  long long m = 0;
  std::optional<double> delta;
  std::string tensor_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void add_tensor_source(CLI::App* cmd, TensorSource& src, bool allow_file = true) {
  cmd->add_option("--family", src.family, "Tensor family: cosine or parity");
  cmd->add_option("--m", src.m, "Number of settings per party");
  cmd->add_option("--delta", src.delta, "Cosine phase offset (default -0.5)");
  if (allow_file) cmd->add_option("--tensor", src.tensor_path, "Tensor JSON file");
}

void check_tensor_source(const TensorSource& src) {
  const bool by_family = !src.family.empty() || src.m != 0;
  const bool by_file = !src.tensor_path.empty();
  if (by_family == by_file)
    throw UsageError("give either --family with --m, or --tensor, not both");
  if (by_family && (src.family.empty() || src.m == 0))
    throw UsageError("--family and --m are required together");
  if (src.delta && src.family != "cosine")
    throw UsageError("--delta applies to the cosine family only");
}

BellTensor make_tensor(const TensorSource& src) {
  if (!src.tensor_path.empty())
    return bellwit::io::tensor_from_json(bellwit::io::load_json_file(src.tensor_path));
  const Family family = bellwit::family_from_name(src.family);
  const int m = static_cast<int>(src.m);
  if (family == Family::Cosine) return bellwit::build_cosine_tensor(m, src.delta.value_or(-0.5));
  if (family == Family::Parity) return bellwit::build_parity_tensor(m);
  throw UsageError("custom tensors must be supplied as a --tensor file");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    bellwit::io::write_text_file(out_path, text);
}

void check_format(const std::string& format) {
  if (format != "json" && format != "csv") throw UsageError("--format must be json or csv");
}

std::pair<long long, long long> parse_m_range(const std::string& text) {
  const auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      const long long m = std::stoll(text);
      return {m, m};
    }
    return {std::stoll(text.substr(0, pos)), std::stoll(text.substr(pos + 2))};
  } catch (const std::exception&) {
    throw UsageError("--m expects an integer or an inclusive range a..b");
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Multisetting tripartite Bell inequalities: bounds, optimization and "
               "device-independent certification of genuine tripartite entanglement"};
  app.require_subcommand(1);

  std::string out_path;
  const auto add_out = [&out_path](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  // build
  auto* build = app.add_subcommand("build", "Construct a Bell coefficient tensor");
  TensorSource build_src;
  add_tensor_source(build, build_src, /*allow_file=*/false);
  add_out(build);

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Quantum and biseparable bounds for a tensor");
  TensorSource bounds_src;
  add_tensor_source(bounds, bounds_src);
  std::string bounds_format = "json";
  bounds->add_option("--format", bounds_format, "Output format: json or csv");
  bool closed_only = false;
  bounds->add_flag("--closed-only", closed_only, "Skip the brute-force enumeration");
  add_out(bounds);

  // optimize
  auto* optimize = app.add_subcommand("optimize", "See-saw search for the quantum maximum");
  TensorSource opt_src;
  add_tensor_source(optimize, opt_src);
  int restarts = 20;
  std::uint64_t seed = 0;
  double opt_tol = 1e-9;
  optimize->add_option("--restarts", restarts, "Independent random restarts")->capture_default_str();
  optimize->add_option("--seed", seed, "Seed for the restart streams")->capture_default_str();
  optimize->add_option("--tol", opt_tol, "Relative-improvement stopping tolerance")
      ->capture_default_str();
  add_out(optimize);

  // certify
  auto* certify = app.add_subcommand("certify", "Certify genuine tripartite entanglement from data");
  std::string certify_tensor, certify_data, certify_format = "json";
  double certify_tol = 1e-9;
  std::optional<double> stat_tol;
  certify->add_option("--tensor", certify_tensor, "Tensor JSON file")->required();
  certify->add_option("--data", certify_data, "Correlation JSON file")->required();
  certify->add_option("--tol", certify_tol, "Certification tolerance")->capture_default_str();
  certify->add_option("--stat-tol", stat_tol,
                      "Override tolerance for data with statistical error bars");
  certify->add_option("--format", certify_format, "Output format: json or csv");
  add_out(certify);

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Closed-form bounds over a range of settings");
  std::string sweep_family, sweep_m, sweep_format = "csv";
  std::optional<double> sweep_delta;
  sweep_cmd->add_option("--family", sweep_family, "cosine or parity")->required();
  sweep_cmd->add_option("--m", sweep_m, "Inclusive range a..b (or a single m)")->required();
  sweep_cmd->add_option("--delta", sweep_delta, "Cosine phase offset (default -0.5)");
  sweep_cmd->add_option("--format", sweep_format, "Output format: csv or json");
  add_out(sweep_cmd);

  // simulate
  auto* simulate = app.add_subcommand("simulate", "Correlators of a noisy GHZ experiment");
  TensorSource sim_src;
  add_tensor_source(simulate, sim_src);
  double visibility = 1.0;
  std::string angles_path;
  simulate->add_option("--V", visibility, "Visibility of the noisy GHZ state")->required();
  simulate->add_option("--angles", angles_path,
                       "Angles JSON file (defaults to the canonical angles of the tensor)");
  add_out(simulate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? 0 : 2;
  }

  if (build->parsed()) {
    check_tensor_source(build_src);
    emit(bellwit::io::dump(bellwit::io::tensor_to_json(make_tensor(build_src))), out_path);
  } else if (bounds->parsed()) {
    check_format(bounds_format);
    check_tensor_source(bounds_src);
    bellwit::BoundsReport report;
    const bool big = bounds_src.tensor_path.empty() && bounds_src.m > bellwit::kBruteForceMaxSettings;
    if (big)
      report = bellwit::compute_bounds_closed(bellwit::family_from_name(bounds_src.family),
                                              bounds_src.m, bounds_src.delta.value_or(-0.5));
    else
      report = bellwit::compute_bounds(make_tensor(bounds_src), closed_only);
    emit(bounds_format == "json" ? bellwit::io::dump(bellwit::io::bounds_report_to_json(report))
                                 : bellwit::io::bounds_report_to_csv(report),
         out_path);
  } else if (optimize->parsed()) {
    check_tensor_source(opt_src);
    const auto result = bellwit::seesaw_quantum_max(make_tensor(opt_src), restarts, seed, opt_tol);
    emit(bellwit::io::dump(bellwit::io::opt_result_to_json(result)), out_path);
  } else if (certify->parsed()) {
    check_format(certify_format);
    const auto tensor = bellwit::io::tensor_from_json(bellwit::io::load_json_file(certify_tensor));
    const auto data =
        bellwit::io::correlations_from_json(bellwit::io::load_json_file(certify_data));
    const auto result = bellwit::certify(tensor, data, stat_tol.value_or(certify_tol));
    emit(certify_format == "json" ? bellwit::io::dump(bellwit::io::certification_to_json(result))
                                  : bellwit::io::certification_to_csv(result),
         out_path);
  } else if (sweep_cmd->parsed()) {
    check_format(sweep_format);
    const auto [lo, hi] = parse_m_range(sweep_m);
    if (sweep_delta && sweep_family != "cosine")
      throw UsageError("--delta applies to the cosine family only");
    const auto rows = bellwit::sweep(bellwit::family_from_name(sweep_family), lo, hi,
                                     sweep_delta.value_or(-0.5));
    emit(sweep_format == "csv" ? bellwit::io::sweep_to_csv(rows)
                               : bellwit::io::dump(bellwit::io::sweep_to_json(rows)),
         out_path);
  } else if (simulate->parsed()) {
    bellwit::CorrelationTensor corr;
    if (!angles_path.empty()) {
      const auto angles = bellwit::io::angles_from_json(bellwit::io::load_json_file(angles_path));
      corr = bellwit::ghz_correlators(angles, bellwit::StateSpec{visibility});
    } else {
      check_tensor_source(sim_src);
      corr = bellwit::simulate_noisy_ghz(make_tensor(sim_src), visibility);
    }
    emit(bellwit::io::dump(bellwit::io::correlations_to_json(corr)), out_path);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const bellwit::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
