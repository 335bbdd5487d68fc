#include <cstdint>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "specnorm/errors.hpp"
#include "specnorm/extremal.hpp"
#include "specnorm/graph.hpp"
#include "specnorm/io.hpp"
#include "specnorm/linalg.hpp"
#include "specnorm/oracle.hpp"
#include "specnorm/report.hpp"
#include "specnorm/witness.hpp"

namespace {

using nlohmann::json;
using namespace specnorm;

struct RunConfig {
  std::uint64_t seed = 0x5EED;
  double tol = 1e-10;
  std::size_t max_iter = 10'000;
  std::size_t delta_cap = kDefaultDeltaCap;
  std::size_t rho_real_cap = kDefaultRhoRealCap;
  std::size_t rho_pair_cap = kDefaultRhoPairCap;
  bool json_output = false;

  SolverOptions solver() const { return {tol, max_iter, seed}; }
};

void print_text(const json& j, const std::string& prefix, std::ostream& os) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      print_text(*it, key, os);
    } else if (it->is_string()) {
      os << key << ": " << it->get<std::string>() << '\n';
    } else {
      os << key << ": " << it->dump() << '\n';
    }
  }
}

void emit(const RunConfig& cfg, const json& report) {
  if (cfg.json_output) {
    std::cout << report.dump(2) << '\n';
  } else {
    print_text(report, "", std::cout);
  }
}

ComplexMatrix load_matrix(const std::string& path) { return parse_matrix(read_text_file(path)); }
Graph load_graph(const std::string& path) { return parse_graph(read_text_file(path)); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete matrix norms: constructive witnesses, exact oracles and audits"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Seed of the singular-solver start block")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Relative residual tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-iter", cfg.max_iter, "Solver sweep limit")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_flag("--json", cfg.json_output, "Emit JSON instead of key: value lines");

  std::function<void()> action;
  std::string file;

  auto* norms = app.add_subcommand("norms", "Norm profile of a matrix file");
  norms->add_option("FILE", file, "Matrix file")->required();
  norms->callback([&] {
    action = [&] {
      const ComplexMatrix a = load_matrix(file);
      const TopSingular top = top_two_singular(a, cfg.solver());
      emit(cfg, report_norms(a, norm_profile(a, top), top.second.value));
    };
  });

  auto* witness = app.add_subcommand("witness", "Constructive binary witnesses");
  witness->require_subcommand(1);
  auto* witness_delta = witness->add_subcommand("delta", "Discrete-norm witness");
  witness_delta->add_option("FILE", file, "Matrix file")->required();
  witness_delta->callback([&] {
    action = [&] { emit(cfg, report_delta_witness(delta_witness(load_matrix(file), cfg.solver()))); };
  });
  auto* witness_rho = witness->add_subcommand("rho", "Discrete Rayleigh-norm witness");
  witness_rho->add_option("FILE", file, "Matrix file")->required();
  witness_rho->callback([&] {
    action = [&] { emit(cfg, report_rho_witness(rho_witness(load_matrix(file), cfg.solver()))); };
  });

  auto* oracle = app.add_subcommand("oracle", "Exact brute-force discrete norms");
  oracle->require_subcommand(1);
  auto* oracle_delta = oracle->add_subcommand("delta", "Exact discrete norm (Gray-code walk)");
  oracle_delta->add_option("FILE", file, "Matrix file")->required();
  oracle_delta->add_option("--cap", cfg.delta_cap, "Largest column count enumerated")->capture_default_str();
  oracle_delta->callback([&] {
    action = [&] { emit(cfg, report_oracle("delta", exact_delta(load_matrix(file), cfg.delta_cap))); };
  });
  auto* oracle_rho = oracle->add_subcommand("rho", "Exact discrete Rayleigh norm");
  oracle_rho->add_option("FILE", file, "Matrix file")->required();
  oracle_rho->add_option("--cap", cfg.rho_real_cap, "Largest row count on the real path")->capture_default_str();
  oracle_rho->add_option("--pair-cap", cfg.rho_pair_cap, "Largest rows+cols on the pair path")
      ->capture_default_str();
  oracle_rho->callback([&] {
    action = [&] {
      emit(cfg, report_oracle("rho", exact_rho(load_matrix(file), cfg.rho_real_cap, cfg.rho_pair_cap)));
    };
  });

  std::size_t samples = 1000;
  auto* graph = app.add_subcommand("graph", "Graph audits; e(X,Y) counts ordered pairs, so edges inside X and Y count twice");
  graph->require_subcommand(1);
  auto* graph_audit = graph->add_subcommand("audit", "Spectral profile and forward bounds on sampled subsets");
  graph_audit->add_option("FILE", file, "Edge-list file")->required();
  graph_audit->add_option("--samples", samples, "Sampled subset pairs")->capture_default_str();
  graph_audit->callback([&] {
    action = [&] {
      const Graph g = load_graph(file);
      const GraphSpectralProfile p = spectral_profile(g, cfg.solver());
      const ForwardAudit f = forward_audit(g, p, samples, cfg.seed);
      emit(cfg, report_graph_audit(g, p, f));
      if (f.violations > 0) fail(ErrorKind::InvariantViolation, "forward bound violated on a sampled subset");
    };
  });
  auto* graph_witness = graph->add_subcommand("witness", "Subset witnesses for the converse bounds");
  graph_witness->add_option("FILE", file, "Edge-list file")->required();
  graph_witness->callback([&] {
    action = [&] {
      const Graph g = load_graph(file);
      const SubsetWitness s = delta_subset_witness(g, cfg.solver());
      const CenteredReport c = centered_witnesses(g, cfg.solver());
      emit(cfg, report_graph_witness(g, s, c));
    };
  });

  std::size_t gen_n = 0;
  unsigned gen_m = 0;
  auto* gen = app.add_subcommand("gen", "Write extremal matrices in the matrix text format");
  gen->require_subcommand(1);
  auto* gen_invsqrt_cmd = gen->add_subcommand("invsqrt", "Rank-one matrix with entries 1/sqrt(ij)");
  gen_invsqrt_cmd->add_option("N", gen_n, "Order, 4..2048")->required();
  gen_invsqrt_cmd->callback([&] { action = [&] { std::cout << format_matrix(gen_invsqrt(gen_n)); }; });
  auto* gen_tensor_cmd = gen->add_subcommand("tensor", "m-fold tensor power of [[1,1],[1,0]]");
  gen_tensor_cmd->add_option("M", gen_m, "Power, 1..10 for dense output")->required();
  gen_tensor_cmd->callback([&] {
    action = [&] {
      if (gen_m > kTensorDenseCap) fail(ErrorKind::OutOfRange, "dense output is limited to m <= 10");
      const TensorPowerMatrix t = gen_tensor_power(gen_m, cfg.solver());
      std::cout << format_matrix(*t.matrix);
    };
  });

  unsigned audit_m = 0;
  auto* kneser = app.add_subcommand("kneser-audit", "Exact discrete norms of the tensor power A_m");
  kneser->add_option("M", audit_m, "Power (exact paths need 2^m within the caps)")->required();
  kneser->add_option("--cap", cfg.delta_cap, "Oracle cap for the discrete norm")->capture_default_str();
  kneser->callback([&] {
    action = [&] {
      emit(cfg, report_kneser(kneser_norm_audit(audit_m, cfg.delta_cap, cfg.rho_real_cap, cfg.solver())));
    };
  });

  double step = 1e-3;
  auto* entropy_cmd = app.add_subcommand("entropy", "Entropy-function analytics and saddle bound on a grid");
  entropy_cmd->add_option("--step", step, "Grid step in (0, 0.01]")->capture_default_str();
  entropy_cmd->callback([&] { action = [&] { emit(cfg, report_entropy(entropy_analysis(step))); }; });

  unsigned tau_m = 0;
  auto* tau_cmd = app.add_subcommand("tau", "Exact tau_m(j) table and its scaled maximum");
  tau_cmd->add_option("M", tau_m, "1..3000")->required();
  tau_cmd->callback([&] { action = [&] { emit(cfg, report_tau(tau_max_scan(tau_m))); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    action();
    return 0;
  } catch (const Error& e) {
    std::cerr << report_error(e).dump() << '\n';
    return e.kind() == ErrorKind::InvariantViolation ? 2 : 1;
  } catch (const std::exception& e) {
    json err = {{"schema_version", kSchemaVersion}, {"kind", "error"}, {"error", "Internal"}, {"message", e.what()}};
    std::cerr << err.dump() << '\n';
    return 2;
  }
}
