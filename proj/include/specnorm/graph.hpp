#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specnorm/binary_vector.hpp"
#include "specnorm/linalg.hpp"
#include "specnorm/matrix.hpp"

namespace specnorm {

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  using Edge = std::pair<std::size_t, std::size_t>;

  /// Edges may come in any orientation and may repeat; loops are rejected.
  Graph(std::size_t vertex_count, const std::vector<Edge>& edges);

  std::size_t vertex_count() const noexcept { return neighbors_.size(); }
  /// Sorted, each edge once as (u, v) with u < v.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return neighbors_.at(v); }
  std::size_t degree(std::size_t v) const { return neighbors_.at(v).size(); }
  std::size_t max_degree() const noexcept;
  /// d = 2|E| / n.
  double avg_degree() const noexcept;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> neighbors_;
};

/// Edge list: optional header line holding only n, then `u v` per line,
/// 0-indexed, `#` comments, duplicates ignored. Without a header the vertex
/// count is 1 + the largest id.
Graph parse_graph(std::string_view text);

/// Symmetric 0/1 adjacency matrix.
ComplexMatrix adjacency(const Graph& g);

struct GraphSpectralProfile {
  double rho = 0.0;    // ||A||
  double sigma = 0.0;  // sigma_2(A)
  std::size_t max_degree = 0;
  double avg_degree = 0.0;
};

/// All zeros for a graph without edges.
GraphSpectralProfile spectral_profile(const Graph& g, const SolverOptions& opts = {});

/// sum_v |N_X(v)|^2 by direct count. With rho given, also asserts the forward
/// bound <= rho^2 |X| (1 + 1e-8) and throws InvariantViolation otherwise.
std::uint64_t neighborhood_energy(const Graph& g, const BinaryVector& x,
                                  std::optional<double> rho = std::nullopt);

/// e(X, Y) = |{(x, y) in X x Y : xy in E}|, ordered pairs, so an edge inside
/// X cap Y counts twice. With rho given and X, Y nonempty, asserts
/// e(X, Y) <= rho sqrt(|X||Y|) (1 + 1e-8).
std::uint64_t edge_count(const Graph& g, const BinaryVector& x, const BinaryVector& y,
                         std::optional<double> rho = std::nullopt);

inline constexpr double kForwardSlack = 1e-8;

struct SubsetWitness {
  BinaryVector x{1};
  std::uint64_t energy = 0;        // sum_v |N_X(v)|^2
  double energy_per_vertex = 0.0;  // energy / |X|
  double floor = 0.0;              // rho^2 / (128 (ln(Delta/rho) + 2))
  std::string provenance;
  GraphSpectralProfile profile;
};

/// Subset X with large neighborhood energy. Throws EmptyGraph without edges.
SubsetWitness delta_subset_witness(const Graph& g, const SolverOptions& opts = {});

struct MixingReport {
  BinaryVector x{1};
  BinaryVector y{1};
  std::uint64_t edges = 0;  // e(X, Y)
  double discrepancy = 0.0; // |e(X, Y) - d |X||Y| / n|
  double floor = 0.0;       // sigma / (32 sqrt2 (ln(2 Delta/sigma) + 4)) sqrt(|X||Y|)
  double upper = 0.0;       // sigma sqrt(|X||Y|), forward reference value
};

struct CenteredReport {
  GraphSpectralProfile profile;
  double K = 0.0;  // 2 sqrt(||A||_1 ||A||_inf) / sigma_2
  // Lower half of the centered neighborhood-energy bound.
  BinaryVector x{1};
  double lhs = 0.0;    // sum_v (|N_X(v)| - d|X|/n)^2
  double floor = 0.0;  // sigma^2 |X| / (128 (ln(2 Delta/sigma) + 2))
  MixingReport mixing;
  // Matrix-level floors with K.
  double delta_ratio = 0.0;      // ||B xi|| / ||xi||, B = A - mean(A)
  double delta_floor_K = 0.0;    // sigma / (8 sqrt2 sqrt(ln K + 2))
  double rho_value = 0.0;        // |xi^t B eta| / (||xi|| ||eta||)
  double rho_floor_K = 0.0;      // sigma / (32 sqrt2 (ln K + 4))
};

/// Witnesses for the converse mixing bounds on B = A - mean(A). Throws
/// RankDeficient when sigma_2 vanishes and InvariantViolation if a floor fails.
CenteredReport centered_witnesses(const Graph& g, const SolverOptions& opts = {});

struct ForwardAudit {
  std::size_t samples = 0;
  double max_energy_ratio = 0.0;  // max energy / (rho^2 |X|)
  double max_edge_ratio = 0.0;    // max e(X, Y) / (rho sqrt(|X||Y|))
  std::size_t violations = 0;
};

/// Samples nonempty subset pairs and checks the forward (upper) bounds.
ForwardAudit forward_audit(const Graph& g, const GraphSpectralProfile& profile,
                           std::size_t samples, std::uint64_t seed);

}  // namespace specnorm
