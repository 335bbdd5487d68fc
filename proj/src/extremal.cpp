#include "specnorm/extremal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "specnorm/errors.hpp"
#include "specnorm/witness.hpp"

namespace specnorm {

namespace {

constexpr long double kPhiL = 1.6180339887498948482045868343656381L;

void require_range(bool ok, const std::string& message) {
  if (!ok) fail(ErrorKind::OutOfRange, message);
}

std::vector<double> invsqrt_vector(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 / std::sqrt(static_cast<double>(i + 1));
  return x;
}

long double entropy_l(long double p) {
  if (p <= 0.0L || p >= 1.0L) return 0.0L;
  return -p * std::log(p) - (1.0L - p) * std::log1p(-p);
}

}  // namespace

ComplexMatrix gen_invsqrt(std::size_t n) {
  require_range(n >= 4, "invsqrt needs n >= 4");
  require_range(n <= kInvsqrtDenseCap, "invsqrt dense size above " + std::to_string(kInvsqrtDenseCap));
  const std::vector<double> x = invsqrt_vector(n);
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = x[i] * x[j];
  return a;
}

InvsqrtCertificate invsqrt_certificate(std::size_t n) {
  require_range(n >= 4, "invsqrt needs n >= 4");
  require_range(n <= kInvsqrtCertificateCap, "invsqrt certificate size out of range");
  const std::vector<double> x = invsqrt_vector(n);
  std::vector<double> sq(n);
  for (std::size_t i = 0; i < n; ++i) sq[i] = x[i] * x[i];

  InvsqrtCertificate out;
  out.n = n;
  out.spectral = pairwise_sum(sq);
  out.col_norm = pairwise_sum(x);
  out.height = out.col_norm / out.spectral;

  const BinaryChoice best = exact_rank1_binary(ComplexVector::from_real(x));
  out.delta = std::sqrt(out.spectral) * best.value;
  out.delta_xi = best.xi;
  out.rho = best.value * best.value;

  const double log_h = std::log(out.height);
  out.delta_bound = 2.0 * out.spectral / std::sqrt(log_h);
  out.rho_bound = 4.0 * out.spectral / log_h;
  return out;
}

TensorPowerOperator::TensorPowerOperator(unsigned m) : m_(m) {
  require_range(m >= 1 && m <= kTensorMaxM, "tensor power order must lie in [1, 24]");
}

void TensorPowerOperator::apply(std::span<const Complex> x, std::span<Complex> y) const {
  std::copy(x.begin(), x.end(), y.begin());
  const std::size_t n = y.size();
  for (unsigned b = 0; b < m_; ++b) {
    const std::size_t stride = std::size_t{1} << b;
    for (std::size_t base = 0; base < n; base += 2 * stride) {
      for (std::size_t u = base; u < base + stride; ++u) {
        const Complex lo = y[u];
        y[u] = lo + y[u + stride];
        y[u + stride] = lo;
      }
    }
  }
}

TensorPowerMatrix gen_tensor_power(unsigned m, const SolverOptions& opts) {
  require_range(m >= 1 && m <= kTensorMaxM, "tensor power order must lie in [1, 24]");
  TensorPowerMatrix out;
  out.m = m;
  out.phi_power = std::pow(kPhi, static_cast<double>(m));
  if (m <= kTensorDenseCap) {
    const std::size_t n = std::size_t{1} << m;
    ComplexMatrix a(n, n);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (tensor_entry(u, v)) a(u, v) = 1.0;
    out.matrix = std::move(a);
  }
  if (m <= kTensorVerifyCap) {
    const TopSingular top = top_two_singular(TensorPowerOperator(m), opts);
    out.spectral = top.first.value;
    out.spectral_residual = top.first.residual;
  }
  return out;
}

GammaDegreeLaw gamma_degree_law(unsigned m) {
  require_range(m >= 1 && m <= 12, "degree law is counted directly for m <= 12");
  const std::uint64_t n = std::uint64_t{1} << m;
  GammaDegreeLaw out;
  out.m = m;
  out.law_holds = true;
  for (std::uint64_t v = 0; v < n; ++v) {
    std::uint64_t deg = 0;
    for (std::uint64_t u = 0; u < n; ++u) deg += tensor_entry(u, v) ? 1 : 0;
    if (deg != (std::uint64_t{1} << (m - std::popcount(v)))) out.law_holds = false;
    out.max_degree = std::max(out.max_degree, deg);
    out.degree_sum += deg;
    out.energy += deg * deg;
  }
  out.edge_pairs = out.degree_sum;
  return out;
}

KneserAudit kneser_norm_audit(unsigned m, std::size_t delta_cap, std::size_t rho_real_cap,
                              const SolverOptions& opts, const OracleOptions& oracle) {
  require_range(m >= 1 && m <= kTensorMaxM, "tensor power order must lie in [1, 24]");
  const std::size_t n = std::size_t{1} << m;
  if (n > delta_cap || n > rho_real_cap || m > kTensorDenseCap) {
    fail(ErrorKind::CapExceeded, "exact audit of A_" + std::to_string(m) + " needs " +
                                     std::to_string(n) + " binary coordinates");
  }
  const TensorPowerMatrix t = gen_tensor_power(m, opts);
  const ComplexMatrix& a = *t.matrix;

  KneserAudit out;
  out.m = m;
  out.phi_power = t.phi_power;
  out.spectral = *t.spectral;
  out.exact_delta = exact_delta(a, delta_cap, oracle);
  out.exact_rho = exact_rho(a, rho_real_cap, kDefaultRhoPairCap, oracle);
  out.witness_delta = delta_witness(a, opts).ratio;
  out.witness_rho = rho_witness(a, opts).value;
  const double md = static_cast<double>(m);
  out.r_delta = out.exact_delta.value * std::pow(md, 0.25) / t.phi_power;
  out.r_rho = out.exact_rho.value * std::sqrt(md) / t.phi_power;
  out.full_delta = std::pow(2.5, md / 2.0);
  out.full_rho = std::pow(1.5, md);
  out.tau_max_scaled = tau_max_scaled(m);
  return out;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  // Each partial product r * (n - i) / (i + 1) is itself a binomial, so the
  // division is exact.
  for (unsigned i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

long double to_long_double(const BigInt& v) {
  if (v.is_zero()) return 0.0L;
  const bool negative = v.sign() < 0;
  const BigInt mag = negative ? BigInt(-v) : v;
  const std::size_t msb = boost::multiprecision::msb(mag);
  long double out;
  if (msb < 64) {
    out = static_cast<long double>(static_cast<std::uint64_t>(mag));
  } else {
    const std::size_t shift = msb - 63;
    const auto mantissa = static_cast<std::uint64_t>(BigInt(mag >> shift));
    out = std::ldexp(static_cast<long double>(mantissa), static_cast<int>(shift));
  }
  return negative ? -out : out;
}

BigInt tau(unsigned m, unsigned j) {
  require_range(j <= m && m <= kTauMaxM, "tau needs 0 <= j <= m <= 3000");
  // Term i is C(m-i, j) C(m-j, i); consecutive terms differ by the factor
  // (m-i-j)^2 / ((m-i)(i+1)), and every term is an integer.
  BigInt term = binomial(m, j);
  BigInt sum = term;
  for (unsigned i = 0; i + j < m; ++i) {
    const unsigned top = m - i - j;
    term *= top;
    term *= top;
    term /= static_cast<std::uint64_t>(m - i) * (i + 1);
    sum += term;
  }
  return sum;
}

TauTable tau_max_scan(unsigned m) {
  require_range(m >= 1 && m <= kTauMaxM, "tau scan needs 1 <= m <= 3000");
  TauTable out;
  out.m = m;
  out.values.reserve(m + 1);
  for (unsigned j = 0; j <= m; ++j) {
    out.values.push_back(tau(m, j));
    if (out.values.back() > out.values[out.argmax]) out.argmax = j;
  }
  const long double scaled = to_long_double(out.values[out.argmax]) *
                             std::sqrt(static_cast<long double>(m)) /
                             std::pow(kPhiL, 2.0L * m);
  out.max_scaled = static_cast<double>(scaled);
  return out;
}

double tau_max_scaled(unsigned m) {
  require_range(m >= 1 && m <= kTauMaxM, "tau scan needs 1 <= m <= 3000");
  const long double norm = std::pow(kPhiL, 2.0L * m);
  long double c_mj = 1.0L;  // C(m, j)
  long double best = 0.0L;
  for (unsigned j = 0; j <= m; ++j) {
    long double term = c_mj / norm;
    long double sum = term;
    for (unsigned i = 0; i + j < m; ++i) {
      const long double top = static_cast<long double>(m - i - j);
      term *= top * top / (static_cast<long double>(m - i) * (i + 1));
      sum += term;
    }
    best = std::max(best, sum);
    c_mj = c_mj * (m - j) / (j + 1);
  }
  return static_cast<double>(best * std::sqrt(static_cast<long double>(m)));
}

std::vector<double> tau_scaled_series(unsigned m_max, std::size_t workers) {
  require_range(m_max >= 1 && m_max <= kTauMaxM, "tau scan needs 1 <= m <= 3000");
  std::vector<double> out(m_max);
  workers = std::min<std::size_t>(resolve_workers(workers), m_max);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    // Interleaved so the quadratic cost per m is spread evenly.
    pool.emplace_back([&out, w, workers, m_max] {
      for (std::size_t m = w + 1; m <= m_max; m += workers) {
        out[m - 1] = tau_max_scaled(static_cast<unsigned>(m));
      }
    });
  }
  for (std::thread& t : pool) t.join();
  return out;
}

SphereEnergy sphere_energy_identity(unsigned m, unsigned r) {
  require_range(r <= m && m <= 14, "sphere energy needs r <= m <= 14");
  const std::uint64_t n = std::uint64_t{1} << m;
  std::vector<std::uint64_t> sphere;
  for (std::uint64_t u = 0; u < n; ++u)
    if (static_cast<unsigned>(std::popcount(u)) == r) sphere.push_back(u);

  SphereEnergy out;
  out.m = m;
  out.r = r;
  out.sphere_size = sphere.size();
  for (std::uint64_t v = 0; v < n; ++v) {
    std::uint64_t seen = 0;
    for (std::uint64_t u : sphere) seen += tensor_entry(u, v) ? 1 : 0;
    out.energy += seen * seen;
  }
  out.rhs = static_cast<std::uint64_t>(tau(m, r));
  return out;
}

double entropy(double z) {
  if (z <= 0.0 || z >= 1.0) return 0.0;
  return -z * std::log(z) - (1.0 - z) * std::log1p(-z);
}

double entropy_prime(double z) { return std::log((1.0 - z) / z); }

double entropy_second(double z) { return -1.0 / (z * (1.0 - z)); }

double entropy_f(double x, double y) {
  auto term = [](double a, double b) {
    if (a <= 0.0) return 0.0;
    return a * entropy(std::clamp(b / a, 0.0, 1.0));
  };
  return term(1.0 - x, y) + term(1.0 - y, x);
}

EntropyAnalysis entropy_analysis(double step) {
  if (!(step > 0.0 && step <= 1e-2)) fail(ErrorKind::OutOfRange, "grid step must lie in (0, 1e-2]");
  EntropyAnalysis out;
  out.grid_step = step;
  out.x0 = (5.0 - std::sqrt(5.0)) / 10.0;
  out.z0 = 2.0 - kPhi;
  out.fmax = 2.0 * std::log(kPhi);
  out.f_at_x0 = entropy_f(out.x0, out.x0);
  out.h_prime_z0 = entropy_prime(out.z0);

  const auto n = static_cast<std::size_t>(std::floor(1.0 / step + 1e-9));
  out.h_second_max = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 1; k < n; ++k) {
    out.h_second_max = std::max(out.h_second_max, entropy_second(static_cast<double>(k) * step));
  }

  // Row-major table of f on {(i, j) : i + j <= n}, row i holding n - i + 1 values.
  std::vector<std::vector<double>> f(n + 1);
  out.grid_margin = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i <= n; ++i) {
    const double x = static_cast<double>(i) * step;
    const double bound = out.fmax - (2.0 / 3.0) * (x - out.x0) * (x - out.x0);
    f[i].resize(n - i + 1);
    for (std::size_t j = 0; j + i <= n; ++j) {
      const double y = static_cast<double>(j) * step;
      f[i][j] = entropy_f(x, y);
      ++out.grid_nodes;
      const double margin = f[i][j] - bound;
      if (margin > out.grid_margin) {
        out.grid_margin = margin;
        out.margin_x = x;
        out.margin_y = y;
      }
    }
  }

  constexpr double kConcavityTol = 1e-12;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j + i < n; ++j) {
      if (f[i - 1][j] - 2.0 * f[i][j] + f[i + 1][j] > kConcavityTol) ++out.concavity_violations;
      if (f[i][j - 1] - 2.0 * f[i][j] + f[i][j + 1] > kConcavityTol) ++out.concavity_violations;
    }
  }
  return out;
}

BinomialTail binomial_tail_check(unsigned m, unsigned k) {
  require_range(m >= 1 && m <= kTauMaxM && 2 * k <= m, "binomial check needs 1 <= m <= 3000, k <= m/2");
  BinomialTail out;
  out.m = m;
  out.k = k;
  BigInt c = 1;
  BigInt sum = 1;
  for (unsigned i = 0; i < k; ++i) {
    c *= m - i;
    c /= i + 1;
    sum += c;
  }
  out.central = to_long_double(c);
  out.value = to_long_double(sum);
  out.upper = std::exp(static_cast<long double>(m) *
                       entropy_l(static_cast<long double>(k) / static_cast<long double>(m)));
  out.lower = out.upper / std::sqrt(2.0L * m);
  constexpr long double kSlack = 1e-12L;
  out.holds = out.lower <= out.central * (1.0L + kSlack) && out.central <= out.value &&
              out.value <= out.upper * (1.0L + kSlack);
  return out;
}

}  // namespace specnorm
