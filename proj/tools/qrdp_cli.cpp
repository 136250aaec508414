// Command-line front end: budget queries, parameter sweeps, exact
// per-instance budgets, utility/privacy tables, multi-round composition
// simulation, and channel validation. All file formats are documented in
// include/qrdp/json_io.hpp.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qrdp/accountant.hpp"
#include "qrdp/budget.hpp"
#include "qrdp/channels.hpp"
#include "qrdp/eig.hpp"
#include "qrdp/errors.hpp"
#include "qrdp/fidelity.hpp"
#include "qrdp/format.hpp"
#include "qrdp/json_io.hpp"
#include "qrdp/parallel.hpp"
#include "qrdp/random.hpp"
#include "qrdp/sweep.hpp"

namespace {

using namespace qrdp;

constexpr int kExitUsage = 2;
constexpr int kExitMathDomain = 3;
constexpr int kExitBadDocument = 4;
constexpr int kExitScheduleConflict = 5;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case errc::param_out_of_range:
    case errc::delta_out_of_range:
      return kExitMathDomain;
    case errc::schedule_conflict:
      return kExitScheduleConflict;
    default:
      return kExitBadDocument;
  }
}

struct MechFlags {
  std::string mech = "dep";
  double p = 0.5;
  double gamma = 0.3;
  double lambda = 0.2;
  std::size_t dim = 2;

  NoiseSpec build() const {
    if (mech == "gad") return NoiseSpec::gad(p, gamma);
    if (mech == "pd") return NoiseSpec::pd(lambda);
    if (mech == "pad") return NoiseSpec::pad(p, gamma, lambda);
    if (mech == "dep") return NoiseSpec::dep(p, dim);
    raise(errc::param_out_of_range, "unknown mechanism '" + mech + "'");
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--mech", mech, "mechanism: gad|pd|pad|dep")
        ->check(CLI::IsMember({"gad", "pd", "pad", "dep"}));
    cmd->add_option("--p", p, "exchange/error probability");
    cmd->add_option("--gamma", gamma, "damping strength");
    cmd->add_option("--lambda", lambda, "dephasing probability");
    cmd->add_option("--D", dim, "Hilbert space dimension (dep)");
  }
};

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) raise(errc::bad_document, "cannot open output file '" + path + "'");
  return file;
}

std::vector<RenyiOrder> parse_alpha_list(const std::vector<std::string>& texts) {
  std::vector<RenyiOrder> orders;
  for (const auto& t : texts) orders.push_back(RenyiOrder::parse(t));
  return orders;
}

DensityMatrix default_reference_state() {
  return DensityMatrix::validate(ComplexMatrix::from_rows({{0.3, 0.2}, {0.2, 0.7}}));
}

SweepSpec default_utility_spec() {
  SweepSpec spec;
  spec.base = NoiseSpec::dep(0.5, 2);
  spec.param = SweptParam::p;
  spec.lo = 0.1;
  spec.hi = 0.9;
  spec.steps = 9;
  spec.alphas = {RenyiOrder::finite(2.0), RenyiOrder::finite(4.0), RenyiOrder::finite(8.0)};
  spec.d = 0.1;
  return spec;
}

int cmd_budget(const MechFlags& mech, double d, const std::string& alpha_text,
               std::optional<double> delta) {
  const NoiseSpec spec = mech.build();
  const RenyiOrder alpha = RenyiOrder::parse(alpha_text);
  const RdpBudget budget = intuitive_budget(spec, d, alpha);
  std::cout << "mechanism=" << spec.describe() << " d=" << format_fixed6(d)
            << " alpha=" << alpha.to_string() << "\n";
  std::cout << "eps_hat=" << format_fixed6(budget.epsilon) << "\n";
  if (delta.has_value()) {
    const DpBudget dp = rdp_to_dp(budget, *delta);
    std::cout << "dp_epsilon=" << format_fixed6(dp.epsilon) << " delta=" << format_full(dp.delta)
              << "\n";
  }
  return 0;
}

int cmd_sweep(const std::string& spec_path, const std::string& out_path, int threads) {
  set_thread_count(threads);
  const SweepSpec spec = sweep_from_json(load_json_file(spec_path));
  const auto rows = budget_sweep(spec);
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  out << "param,alpha,eps_hat\n";
  for (const auto& row : rows)
    out << format_full(row.param) << "," << row.alpha.to_string() << ","
        << format_full(row.eps_hat) << "\n";
  return 0;
}

int cmd_exact(const std::string& rho_path, const std::string& sigma_path,
              const std::string& povm_path, const MechFlags& mech, const std::string& alpha_text,
              int search_trials, std::uint64_t seed) {
  const DensityMatrix rho = state_from_json(load_json_file(rho_path));
  const DensityMatrix sigma = state_from_json(load_json_file(sigma_path));
  const Povm povm = povm_from_json(load_json_file(povm_path));
  const NoiseSpec spec = mech.build();
  const RenyiOrder alpha = RenyiOrder::parse(alpha_text);

  const double tau = trace_distance(rho, sigma);
  const NeighborPair forward(rho, sigma, std::max(tau, 1e-12));
  const NeighborPair reverse(sigma, rho, std::max(tau, 1e-12));

  const double fwd = exact_budget(forward, spec, povm, alpha);
  const double rev = exact_budget(reverse, spec, povm, alpha);
  std::cout << "trace_distance=" << format_fixed6(tau) << "\n";
  std::cout << "forward=" << format_fixed6(fwd) << "\n";
  std::cout << "reverse=" << format_fixed6(rev) << "\n";
  std::cout << "max=" << format_fixed6(std::max(fwd, rev)) << "\n";
  if (search_trials > 0) {
    const double searched = search_budget(forward, spec, alpha, search_trials, seed);
    std::cout << "searched_max=" << format_fixed6(searched) << " trials=" << search_trials
              << " seed=" << seed << "\n";
  }
  return 0;
}

int cmd_utility(const std::string& spec_path, const std::string& rho_path,
                const std::string& out_path, int threads) {
  set_thread_count(threads);
  const SweepSpec spec =
      spec_path.empty() ? default_utility_spec() : sweep_from_json(load_json_file(spec_path));
  const DensityMatrix rho_ref =
      rho_path.empty() ? default_reference_state() : state_from_json(load_json_file(rho_path));
  const auto rows = utility_sweep(spec, rho_ref);
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  out << "param,alpha,eps_hat,fidelity\n";
  for (const auto& row : rows)
    out << format_full(row.param) << "," << row.alpha.to_string() << ","
        << format_full(row.eps_hat) << "," << format_full(row.fidelity) << "\n";
  return 0;
}

int cmd_simulate(const std::string& workload_path, double delta,
                 const std::vector<std::string>& alpha_texts, const std::string& out_path,
                 const std::string& json_path, int threads) {
  set_thread_count(threads);
  const WorkloadSpec workload = workload_from_json(load_json_file(workload_path));
  const AlphaGrid grid =
      alpha_texts.empty() ? AlphaGrid::default_grid() : AlphaGrid(parse_alpha_list(alpha_texts));
  const SimulationReport report = simulate_rounds(workload, grid, delta);

  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  out << "round,alpha,round_eps,cumulative_eps,best_dp_eps,best_alpha\n";
  for (std::size_t r = 0; r < report.rounds.size(); ++r) {
    const RoundReport& round = report.rounds[r];
    for (std::size_t j = 0; j < grid.size(); ++j) {
      out << (r + 1) << "," << grid.orders()[j].to_string() << ","
          << format_full(round.round_eps[j]) << "," << format_full(round.cumulative_eps[j]) << ","
          << format_full(round.best.budget.epsilon) << "," << round.best.alpha.to_string() << "\n";
    }
  }

  if (!json_path.empty()) {
    nlohmann::json summary;
    summary["delta"] = delta;
    summary["rounds"] = report.rounds.size();
    nlohmann::json grid_json = nlohmann::json::array();
    for (const auto& o : grid.orders()) grid_json.push_back(o.to_string());
    summary["alpha_grid"] = grid_json;
    if (!report.rounds.empty()) {
      const RoundReport& last = report.rounds.back();
      nlohmann::json totals = nlohmann::json::array();
      for (double t : last.cumulative_eps) totals.push_back(t);
      summary["cumulative_eps"] = totals;
      summary["best_dp"] = {{"epsilon", last.best.budget.epsilon},
                            {"delta", last.best.budget.delta},
                            {"alpha", last.best.alpha.to_string()}};
    }
    std::ofstream jf(json_path);
    if (!jf) raise(errc::bad_document, "cannot open output file '" + json_path + "'");
    jf << summary.dump(2) << "\n";
  }
  return 0;
}

int cmd_check_channel(const std::string& channel_path) {
  const nlohmann::json doc = load_json_file(channel_path);

  // Raw Kraus sets are examined without the constructor's validation so a
  // broken set still produces a report instead of an abort.
  if (doc.is_object() && doc.contains("kind") && doc["kind"] == "kraus") {
    if (!doc.contains("ops") || !doc["ops"].is_array() || doc["ops"].empty())
      raise(errc::bad_document, "kraus channel needs a nonempty 'ops' array");
    std::vector<ComplexMatrix> ops;
    for (const auto& op : doc["ops"]) ops.push_back(matrix_from_json(op));
    const std::size_t dim = ops.front().dim();
    for (const auto& op : ops)
      if (op.dim() != dim) raise(errc::bad_document, "Kraus operators must share one dimension");

    ComplexMatrix sum(dim);
    for (const auto& op : ops) sum += op.adjoint() * op;
    const double deviation = sum.max_abs_diff(ComplexMatrix::identity(dim));
    std::cout << "kind=kraus dim=" << dim << " operators=" << ops.size() << "\n";
    std::cout << "completeness_deviation=" << format_full(deviation) << "\n";

    double worst_trace = 0.0;
    Rng rng(1);
    for (int probe = 0; probe < 8; ++probe) {
      const DensityMatrix rho = random_density_matrix(dim, rng);
      ComplexMatrix image(dim);
      for (const auto& op : ops) image += op * rho.mat() * op.adjoint();
      worst_trace = std::max(worst_trace, std::abs(image.trace().real() - 1.0));
    }
    std::cout << "max_trace_deviation=" << format_full(worst_trace) << "\n";
    const bool ok = deviation <= 1e-9 && worst_trace <= 1e-9;
    std::cout << (ok ? "pass" : "fail") << "\n";
    return ok ? 0 : kExitBadDocument;
  }

  const NoiseSpec spec = noise_from_json(doc);
  std::cout << "kind=" << spec.describe() << "\n";
  if (spec.kind == NoiseKind::dep) {
    // affine form: probe the basis projectors plus random states
    Rng rng(1);
    double worst_trace = 0.0;
    double worst_eig = 0.0;
    for (int probe = 0; probe < 8; ++probe) {
      DensityMatrix rho = [&] {
        if (probe < static_cast<int>(spec.dim)) {
          ComplexMatrix proj(spec.dim);
          proj(probe, probe) = Complex{1.0, 0.0};
          return DensityMatrix::validate(proj);
        }
        return random_density_matrix(spec.dim, rng);
      }();
      const DensityMatrix image = dep_apply(rho, spec.p, spec.dim);
      worst_trace = std::max(worst_trace, std::abs(image.mat().trace().real() - 1.0));
      worst_eig = std::min(worst_eig, hermitian_eigenvalues(image.mat()).front());
    }
    std::cout << "max_trace_deviation=" << format_full(worst_trace) << "\n";
    std::cout << "min_probe_eigenvalue=" << format_full(worst_eig) << "\n";
    const bool ok = worst_trace <= 1e-9 && worst_eig >= -1e-9;
    std::cout << (ok ? "pass" : "fail") << "\n";
    return ok ? 0 : kExitBadDocument;
  }

  const KrausChannel channel = [&] {
    switch (spec.kind) {
      case NoiseKind::gad: return gad_channel(spec.p, spec.gamma);
      case NoiseKind::pd: return pd_channel(spec.lambda);
      default: return pad_channel(spec.p, spec.gamma, spec.lambda);
    }
  }();
  const double deviation = channel.completeness_deviation();
  std::cout << "completeness_deviation=" << format_full(deviation) << "\n";

  Rng rng(1);
  double worst_trace = 0.0;
  for (int probe = 0; probe < 8; ++probe) {
    const DensityMatrix rho = random_density_matrix(2, rng);
    const DensityMatrix image = apply_channel(channel, rho);
    worst_trace = std::max(worst_trace, std::abs(image.mat().trace().real() - 1.0));
  }
  std::cout << "max_trace_deviation=" << format_full(worst_trace) << "\n";
  const bool ok = deviation <= 1e-9 && worst_trace <= 1e-9;
  std::cout << (ok ? "pass" : "fail") << "\n";
  return ok ? 0 : kExitBadDocument;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"privacy accounting for noisy quantum computation"};
  app.require_subcommand(1);

  // budget
  auto* budget = app.add_subcommand("budget", "closed-form (alpha, eps) budget of a mechanism");
  MechFlags budget_mech;
  budget_mech.attach(budget);
  double budget_d = 0.1;
  std::string budget_alpha = "2";
  std::optional<double> budget_delta;
  budget->add_option("--d", budget_d, "trace-distance bound of neighboring states");
  budget->add_option("--alpha", budget_alpha, "Renyi order (> 1 or 'inf')");
  budget->add_option("--delta", budget_delta, "also convert to (eps, delta)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "budget table over a parameter grid (CSV)");
  std::string sweep_spec_path;
  std::string sweep_out;
  int sweep_threads = 0;
  sweep->add_option("--spec", sweep_spec_path, "sweep spec JSON")->required();
  sweep->add_option("--out", sweep_out, "output CSV path (default stdout)");
  sweep->add_option("--threads", sweep_threads, "worker threads (0 = library default)");

  // exact
  auto* exact = app.add_subcommand("exact", "per-instance budget of a concrete pair and POVM");
  std::string exact_rho, exact_sigma, exact_povm;
  MechFlags exact_mech;
  exact_mech.attach(exact);
  std::string exact_alpha = "2";
  int exact_search = 0;
  std::uint64_t exact_seed = 1;
  exact->add_option("--rho", exact_rho, "state JSON (first argument of the divergence)")->required();
  exact->add_option("--sigma", exact_sigma, "state JSON (second argument)")->required();
  exact->add_option("--povm", exact_povm, "POVM JSON")->required();
  exact->add_option("--alpha", exact_alpha, "Renyi order (> 1 or 'inf')");
  exact->add_option("--search", exact_search, "also sample N random POVMs for a worst-case bound");
  exact->add_option("--seed", exact_seed, "seed for the randomized search");

  // utility
  auto* utility = app.add_subcommand("utility", "privacy-utility table (CSV)");
  std::string utility_spec_path, utility_rho, utility_out;
  int utility_threads = 0;
  utility->add_option("--spec", utility_spec_path, "sweep spec JSON (default: dep p-sweep)");
  utility->add_option("--rho", utility_rho, "reference state JSON (default: built-in)");
  utility->add_option("--out", utility_out, "output CSV path (default stdout)");
  utility->add_option("--threads", utility_threads, "worker threads (0 = library default)");

  // simulate
  auto* simulate = app.add_subcommand("simulate", "multi-QPU round accounting (CSV + JSON)");
  std::string sim_workload, sim_out, sim_json;
  double sim_delta = 0.01;
  std::vector<std::string> sim_alphas;
  int sim_threads = 0;
  simulate->add_option("--workload", sim_workload, "workload JSON")->required();
  simulate->add_option("--delta", sim_delta, "target delta for best-(eps, delta) extraction");
  simulate->add_option("--alpha", sim_alphas, "orders of the accounting grid (default grid)");
  simulate->add_option("--out", sim_out, "output CSV path (default stdout)");
  simulate->add_option("--json", sim_json, "also write a JSON summary here");
  simulate->add_option("--threads", sim_threads, "worker threads (0 = library default)");

  // check-channel
  auto* check = app.add_subcommand("check-channel", "CPTP validation report for a channel file");
  std::string check_path;
  check->add_option("--channel", check_path, "channel JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (budget->parsed()) return cmd_budget(budget_mech, budget_d, budget_alpha, budget_delta);
    if (sweep->parsed()) return cmd_sweep(sweep_spec_path, sweep_out, sweep_threads);
    if (exact->parsed())
      return cmd_exact(exact_rho, exact_sigma, exact_povm, exact_mech, exact_alpha, exact_search,
                       exact_seed);
    if (utility->parsed())
      return cmd_utility(utility_spec_path, utility_rho, utility_out, utility_threads);
    if (simulate->parsed())
      return cmd_simulate(sim_workload, sim_delta, sim_alphas, sim_out, sim_json, sim_threads);
    if (check->parsed()) return cmd_check_channel(check_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitUsage;
}
