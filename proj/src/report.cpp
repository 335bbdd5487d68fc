#include "specnorm/report.hpp"

#include <string>

namespace specnorm {

using nlohmann::json;

namespace {

json envelope(std::string_view kind) {
  return json{{"schema_version", kSchemaVersion},
              {"kind", std::string(kind)},
              {"log_convention", std::string(kLogConvention)}};
}

json graph_fields(const Graph& g, const GraphSpectralProfile& p) {
  return json{{"n", g.vertex_count()},       {"edges", g.edge_count()},
              {"max_degree", p.max_degree},  {"avg_degree", p.avg_degree},
              {"rho", p.rho},                {"sigma", p.sigma}};
}

}  // namespace

json to_json(const NormProfile& p) {
  return json{{"col_norm", p.col_norm},
              {"row_norm", p.row_norm},
              {"spectral", p.spectral},
              {"spectral_residual", p.spectral_residual},
              {"iterations", p.iterations},
              {"height", p.height}};
}

json report_norms(const ComplexMatrix& a, const NormProfile& p, double sigma2) {
  json out = envelope("norms");
  out["rows"] = a.rows();
  out["cols"] = a.cols();
  out["norm_profile"] = to_json(p);
  out["sigma2"] = sigma2;
  return out;
}

json report_delta_witness(const DeltaWitness& w) {
  json out = envelope("delta_witness");
  out["norm_profile"] = to_json(w.profile);
  out["xi_bits_hex"] = w.xi.to_hex();
  out["ratio"] = w.ratio;
  out["floor_thm"] = w.floor_thm;
  out["floor_sharp"] = w.floor_sharp;
  out["provenance"] = w.provenance;
  return out;
}

json report_rho_witness(const RhoWitness& w) {
  json out = envelope("rho_witness");
  out["norm_profile"] = to_json(w.profile);
  out["xi_bits_hex"] = w.xi.to_hex();
  out["eta_bits_hex"] = w.eta.to_hex();
  out["ratio"] = w.value;
  out["floor_thm"] = w.floor_thm;
  out["provenance"] = w.provenance;
  return out;
}

json report_oracle(std::string_view kind, const OracleResult& r) {
  json out = envelope(std::string("oracle_") + std::string(kind));
  out["xi_bits_hex"] = r.argmax_xi.to_hex();
  if (r.argmax_eta) out["eta_bits_hex"] = r.argmax_eta->to_hex();
  out["ratio"] = r.value;
  out["enumerated"] = r.enumerated;
  out["method"] = r.method;
  out["drift"] = r.drift;
  out["provenance"] = "oracle";
  return out;
}

json report_graph_audit(const Graph& g, const GraphSpectralProfile& p, const ForwardAudit& f) {
  json out = envelope("graph_audit");
  out.update(graph_fields(g, p));
  out["forward"] = json{{"samples", f.samples},
                        {"max_energy_ratio", f.max_energy_ratio},
                        {"max_edge_ratio", f.max_edge_ratio},
                        {"violations", f.violations}};
  out["edge_count_convention"] = "ordered pairs";
  return out;
}

json report_graph_witness(const Graph& g, const SubsetWitness& s, const CenteredReport& c) {
  json out = envelope("graph_witness");
  out.update(graph_fields(g, c.profile));
  out["subset"] = json{{"x_bits_hex", s.x.to_hex()},
                       {"energy", s.energy},
                       {"energy_per_vertex", s.energy_per_vertex},
                       {"floor", s.floor},
                       {"provenance", s.provenance}};
  out["centered"] = json{{"x_bits_hex", c.x.to_hex()},
                         {"lhs", c.lhs},
                         {"floor", c.floor},
                         {"K", c.K},
                         {"delta_ratio", c.delta_ratio},
                         {"delta_floor_K", c.delta_floor_K},
                         {"rho_value", c.rho_value},
                         {"rho_floor_K", c.rho_floor_K}};
  out["mixing"] = json{{"x_bits_hex", c.mixing.x.to_hex()},
                       {"y_bits_hex", c.mixing.y.to_hex()},
                       {"edges", c.mixing.edges},
                       {"discrepancy", c.mixing.discrepancy},
                       {"floor", c.mixing.floor},
                       {"upper", c.mixing.upper}};
  return out;
}

json report_kneser(const KneserAudit& k) {
  json out = envelope("kneser_audit");
  out["m"] = k.m;
  out["phi_power"] = k.phi_power;
  out["spectral"] = k.spectral;
  out["exact_delta"] = k.exact_delta.value;
  out["exact_delta_xi_bits_hex"] = k.exact_delta.argmax_xi.to_hex();
  out["exact_rho"] = k.exact_rho.value;
  out["exact_rho_xi_bits_hex"] = k.exact_rho.argmax_xi.to_hex();
  out["exact_rho_eta_bits_hex"] = k.exact_rho.argmax_eta->to_hex();
  out["witness_delta"] = k.witness_delta;
  out["witness_rho"] = k.witness_rho;
  out["r_delta"] = k.r_delta;
  out["r_rho"] = k.r_rho;
  out["full_delta"] = k.full_delta;
  out["full_rho"] = k.full_rho;
  out["tau_max_scaled"] = k.tau_max_scaled;
  return out;
}

json report_entropy(const EntropyAnalysis& e) {
  json out = envelope("entropy");
  out["x0"] = e.x0;
  out["z0"] = e.z0;
  out["fmax"] = e.fmax;
  out["f_at_x0"] = e.f_at_x0;
  out["h_prime_z0"] = e.h_prime_z0;
  out["h_second_max"] = e.h_second_max;
  out["grid_margin"] = e.grid_margin;
  out["margin_at"] = json::array({e.margin_x, e.margin_y});
  out["grid_nodes"] = e.grid_nodes;
  out["grid_step"] = e.grid_step;
  out["concavity_violations"] = e.concavity_violations;
  return out;
}

json report_tau(const TauTable& t) {
  json out = envelope("tau");
  out["m"] = t.m;
  json values = json::array();
  for (const BigInt& v : t.values) values.push_back(v.str());
  out["values"] = std::move(values);
  out["argmax"] = t.argmax;
  out["tau_max_scaled"] = t.max_scaled;
  return out;
}

json report_error(const Error& e) {
  json out = envelope("error");
  out["error"] = std::string(to_string(e.kind()));
  out["message"] = e.what();
  return out;
}

}  // namespace specnorm
