#include "specnorm/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "specnorm/errors.hpp"
#include "specnorm/witness.hpp"
#include "text_util.hpp"

namespace specnorm {

Graph::Graph(std::size_t vertex_count, const std::vector<Edge>& edges) {
  if (vertex_count == 0) fail(ErrorKind::InvalidArgument, "a graph needs at least one vertex");
  for (auto [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count) {
      fail(ErrorKind::OutOfRange, "edge endpoint outside the vertex range");
    }
    if (u == v) fail(ErrorKind::LoopRejected, "self-loop at vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  neighbors_.resize(vertex_count);
  for (auto [u, v] : edges_) {
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
  }
  for (auto& list : neighbors_) std::sort(list.begin(), list.end());
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : neighbors_) best = std::max(best, list.size());
  return best;
}

double Graph::avg_degree() const noexcept {
  return 2.0 * static_cast<double>(edges_.size()) / static_cast<double>(neighbors_.size());
}

Graph parse_graph(std::string_view text) {
  const auto lines = text::tokenize(text);
  std::optional<std::size_t> declared;
  std::vector<Graph::Edge> edges;
  std::size_t largest = 0;

  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto& line = lines[k];
    const std::string where = "line " + std::to_string(line.number);
    if (k == 0 && line.tokens.size() == 1) {
      declared = text::parse_count(line.tokens[0]);
      if (!declared || *declared == 0) fail(ErrorKind::ParseError, where + ": bad vertex count");
      continue;
    }
    if (line.tokens.size() != 2) fail(ErrorKind::ParseError, where + ": expected `u v`");
    const auto u = text::parse_count(line.tokens[0]);
    const auto v = text::parse_count(line.tokens[1]);
    if (!u || !v) fail(ErrorKind::ParseError, where + ": vertex ids must be non-negative integers");
    if (declared && (*u >= *declared || *v >= *declared)) {
      fail(ErrorKind::ParseError, where + ": vertex id out of range");
    }
    if (*u == *v) fail(ErrorKind::LoopRejected, where + ": self-loop at vertex " + std::to_string(*u));
    largest = std::max({largest, *u, *v});
    edges.emplace_back(*u, *v);
  }
  if (!declared && edges.empty()) fail(ErrorKind::ParseError, "edge list is empty and has no header");
  return Graph(declared ? *declared : largest + 1, edges);
}

ComplexMatrix adjacency(const Graph& g) {
  const std::size_t n = g.vertex_count();
  ComplexMatrix a(n, n);
  for (auto [u, v] : g.edges()) {
    a(u, v) = 1.0;
    a(v, u) = 1.0;
  }
  return a;
}

namespace {

GraphSpectralProfile make_profile(const Graph& g, const TopSingular& top) {
  return {top.first.value, top.second.value, g.max_degree(), g.avg_degree()};
}

std::vector<std::uint64_t> neighbor_counts(const Graph& g, const BinaryVector& x) {
  if (x.dim() != g.vertex_count()) fail(ErrorKind::InvalidArgument, "subset dimension mismatch");
  std::vector<std::uint64_t> counts(g.vertex_count(), 0);
  for (std::size_t u : x.indices())
    for (std::size_t v : g.neighbors(u)) ++counts[v];
  return counts;
}

void require_edges(const Graph& g) {
  if (g.edge_count() == 0) fail(ErrorKind::EmptyGraph, "graph has no edges");
}

}  // namespace

GraphSpectralProfile spectral_profile(const Graph& g, const SolverOptions& opts) {
  if (g.edge_count() == 0) return {0.0, 0.0, 0, 0.0};
  return make_profile(g, top_two_singular(adjacency(g), opts));
}

std::uint64_t neighborhood_energy(const Graph& g, const BinaryVector& x, std::optional<double> rho) {
  if (x.popcount() == 0) fail(ErrorKind::EmptySubset, "neighborhood energy of the empty set");
  std::uint64_t energy = 0;
  for (std::uint64_t c : neighbor_counts(g, x)) energy += c * c;
  if (rho) {
    const double bound = *rho * *rho * static_cast<double>(x.popcount());
    if (static_cast<double>(energy) > bound * (1.0 + kForwardSlack)) {
      fail(ErrorKind::InvariantViolation, "neighborhood energy exceeds rho^2 |X|");
    }
  }
  return energy;
}

std::uint64_t edge_count(const Graph& g, const BinaryVector& x, const BinaryVector& y,
                         std::optional<double> rho) {
  if (y.dim() != g.vertex_count()) fail(ErrorKind::InvalidArgument, "subset dimension mismatch");
  const std::vector<std::uint64_t> counts = neighbor_counts(g, x);
  std::uint64_t e = 0;
  for (std::size_t v : y.indices()) e += counts[v];
  if (rho && x.popcount() > 0 && y.popcount() > 0) {
    const double bound = *rho * std::sqrt(static_cast<double>(x.popcount() * y.popcount()));
    if (static_cast<double>(e) > bound * (1.0 + kForwardSlack)) {
      fail(ErrorKind::InvariantViolation, "edge count exceeds rho sqrt(|X||Y|)");
    }
  }
  return e;
}

SubsetWitness delta_subset_witness(const Graph& g, const SolverOptions& opts) {
  require_edges(g);
  const ComplexMatrix a = adjacency(g);
  const DeltaWitness w = delta_witness(a, opts);

  SubsetWitness out;
  out.profile = spectral_profile(g, opts);
  out.x = w.xi;
  out.energy = neighborhood_energy(g, out.x, out.profile.rho);
  out.energy_per_vertex = static_cast<double>(out.energy) / static_cast<double>(out.x.popcount());
  const double rho = out.profile.rho;
  const double delta = static_cast<double>(out.profile.max_degree);
  out.floor = rho * rho / (128.0 * (std::log(delta / rho) + 2.0));
  out.provenance = w.provenance;
  if (out.energy_per_vertex < out.floor * (1.0 - kFloorSlack)) {
    fail(ErrorKind::InvariantViolation, "subset witness fell below its neighborhood-energy floor");
  }
  return out;
}

CenteredReport centered_witnesses(const Graph& g, const SolverOptions& opts) {
  const ComplexMatrix a = adjacency(g);
  if (a.is_zero()) fail(ErrorKind::RankDeficient, "graph without edges has a zero adjacency matrix");
  const TopSingular top = top_two_singular(a, opts);

  CenteredReport out;
  out.profile = make_profile(g, top);
  out.K = centered_height_bound(a, top);
  const double sigma = out.profile.sigma;
  const double two_delta_over_sigma = 2.0 * static_cast<double>(out.profile.max_degree) / sigma;
  const double n = static_cast<double>(g.vertex_count());
  const double d = out.profile.avg_degree;

  const ComplexMatrix b = a - mean_matrix(a);
  const DeltaWitness dw = delta_witness(b, opts);
  out.x = dw.xi;
  const double size_x = static_cast<double>(out.x.popcount());
  out.lhs = 0.0;
  for (std::uint64_t c : neighbor_counts(g, out.x)) {
    const double dev = static_cast<double>(c) - d * size_x / n;
    out.lhs += dev * dev;
  }
  out.floor = sigma * sigma * size_x / (128.0 * (std::log(two_delta_over_sigma) + 2.0));
  out.delta_ratio = dw.ratio;
  out.delta_floor_K = floors::delta_certified(sigma, out.K);

  const RhoWitness rw = rho_witness(b, opts);
  MixingReport& mix = out.mixing;
  mix.x = rw.eta;
  mix.y = rw.xi;
  mix.edges = edge_count(g, mix.x, mix.y);
  const double sx = static_cast<double>(mix.x.popcount());
  const double sy = static_cast<double>(mix.y.popcount());
  mix.discrepancy = std::abs(static_cast<double>(mix.edges) - d * sx * sy / n);
  mix.floor = sigma / (32.0 * std::numbers::sqrt2 * (std::log(two_delta_over_sigma) + 4.0)) *
              std::sqrt(sx * sy);
  mix.upper = sigma * std::sqrt(sx * sy);
  out.rho_value = rw.value;
  out.rho_floor_K = floors::rho_certified(sigma, out.K);

  if (out.lhs < out.floor * (1.0 - kFloorSlack)) {
    fail(ErrorKind::InvariantViolation, "centered energy witness fell below its floor");
  }
  if (mix.discrepancy < mix.floor * (1.0 - kFloorSlack)) {
    fail(ErrorKind::InvariantViolation, "mixing discrepancy witness fell below its floor");
  }
  return out;
}

ForwardAudit forward_audit(const Graph& g, const GraphSpectralProfile& profile,
                           std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = g.vertex_count();
  auto sample = [&] {
    const double p = unit(rng);
    BinaryVector s(n);
    for (std::size_t v = 0; v < n; ++v)
      if (unit(rng) < p) s.set(v);
    if (s.popcount() == 0) s.set(static_cast<std::size_t>(rng() % n));
    return s;
  };

  ForwardAudit out;
  out.samples = samples;
  const double rho = profile.rho;
  for (std::size_t k = 0; k < samples; ++k) {
    const BinaryVector x = sample();
    const BinaryVector y = sample();
    const double sx = static_cast<double>(x.popcount());
    const double sy = static_cast<double>(y.popcount());
    const double energy = static_cast<double>(neighborhood_energy(g, x));
    const double edges = static_cast<double>(edge_count(g, x, y));
    const double er = rho > 0.0 ? energy / (rho * rho * sx) : (energy > 0.0 ? INFINITY : 0.0);
    const double xr = rho > 0.0 ? edges / (rho * std::sqrt(sx * sy)) : (edges > 0.0 ? INFINITY : 0.0);
    out.max_energy_ratio = std::max(out.max_energy_ratio, er);
    out.max_edge_ratio = std::max(out.max_edge_ratio, xr);
    if (er > 1.0 + kForwardSlack || xr > 1.0 + kForwardSlack) ++out.violations;
  }
  return out;
}

}  // namespace specnorm
