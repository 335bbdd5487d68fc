#pragma once

#include <string_view>

#include "json.hpp"
#include "specnorm/errors.hpp"
#include "specnorm/extremal.hpp"
#include "specnorm/graph.hpp"
#include "specnorm/linalg.hpp"
#include "specnorm/oracle.hpp"
#include "specnorm/witness.hpp"

namespace specnorm {

/// Frozen JSON field names. Bump on any rename or removal.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const NormProfile& p);

nlohmann::json report_norms(const ComplexMatrix& a, const NormProfile& p, double sigma2);
nlohmann::json report_delta_witness(const DeltaWitness& w);
nlohmann::json report_rho_witness(const RhoWitness& w);
/// kind is "delta" or "rho".
nlohmann::json report_oracle(std::string_view kind, const OracleResult& r);
nlohmann::json report_graph_audit(const Graph& g, const GraphSpectralProfile& p, const ForwardAudit& f);
nlohmann::json report_graph_witness(const Graph& g, const SubsetWitness& s, const CenteredReport& c);
nlohmann::json report_kneser(const KneserAudit& k);
nlohmann::json report_entropy(const EntropyAnalysis& e);
nlohmann::json report_tau(const TauTable& t);
nlohmann::json report_error(const Error& e);

}  // namespace specnorm
