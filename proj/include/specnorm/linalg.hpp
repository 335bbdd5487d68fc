#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "specnorm/errors.hpp"
#include "specnorm/matrix.hpp"

namespace specnorm {

/// Every logarithm in heights and floors is the natural logarithm.
inline constexpr std::string_view kLogConvention = "ln";

/// Relative slack absorbing iterative-solver error in norm inequalities.
inline constexpr double kRelEps = 1e-9;

struct SolverOptions {
  double tol = 1e-10;             // relative residual target
  std::size_t max_iter = 10'000;
  std::uint64_t seed = 0x5EED;
};

struct SingularPair {
  double value = 0.0;
  ComplexVector right{1};  // unit, dimension = cols
  ComplexVector left{1};   // unit, dimension = rows
  /// Bounds both ||A right - value*left|| and ||A^*A right - value^2 right|| / sigma_1.
  double residual = 0.0;
};

struct TopSingular {
  SingularPair first;
  SingularPair second;
  std::size_t iterations = 0;
};

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& message, TopSingular best)
      : Error(ErrorKind::NonConvergence, message), best_(std::move(best)) {}
  const TopSingular& best_iterate() const noexcept { return best_; }

 private:
  TopSingular best_;
};

/// Largest absolute column sum, ||A||_1.
double col_norm(const ComplexMatrix& a);
/// Largest absolute row sum, ||A||_inf.
double row_norm(const ComplexMatrix& a);

/// Top two singular triplets by block subspace iteration on A^*A.
///
/// The iteration carries a few guard vectors beyond the two reported ones and
/// performs a Rayleigh-Ritz step every sweep, so the second pair converges at
/// the rate of the first excluded singular value rather than sigma_3. The run
/// stops once both reported residuals are at most tol * sigma_1.
///
/// For a single column sigma_2 is reported as 0; that pair is a placeholder
/// whose residual is sigma_1.
///
/// Throws ZeroMatrix for A = 0 and NonConvergenceError (carrying the best
/// iterate) when max_iter sweeps are not enough.
TopSingular top_two_singular(const LinearOperator& op, const SolverOptions& opts = {});
TopSingular top_two_singular(const ComplexMatrix& a, const SolverOptions& opts = {});

struct NormProfile {
  double col_norm = 0.0;
  double row_norm = 0.0;
  double spectral = 0.0;
  double spectral_residual = 0.0;
  std::size_t iterations = 0;
  double height = 1.0;
};

/// All induced norms plus h(A). Throws ZeroMatrix for A = 0.
NormProfile norm_profile(const ComplexMatrix& a, const SolverOptions& opts = {});
NormProfile norm_profile(const ComplexMatrix& a, const TopSingular& top);

/// sqrt(||A||_1 ||A||_inf) / ||A|| using the profile's values.
double height(const ComplexMatrix& a, const NormProfile& profile);

/// sqrt(||z||_1 ||z||_inf) / ||z||_2.
double vector_height(const ComplexVector& z);

/// max |z_i| / min{|z_i| : z_i != 0}.
double log_diameter(const ComplexVector& z);

/// Constant matrix whose entries equal the mean of the entries of A.
ComplexMatrix mean_matrix(const ComplexMatrix& a);

/// K = 2 sqrt(||A||_1 ||A||_inf) / sigma_2, an upper bound on h(A - mean(A)).
/// Throws RankDeficient when sigma_2 <= tol * sigma_1.
double centered_height_bound(const ComplexMatrix& a, const TopSingular& top, double tol = 1e-10);

/// For Hermitian A: a unit x with |<Ax, x>| = ||A|| up to solver accuracy.
/// The top right singular vector may mix the +sigma and -sigma eigenspaces,
/// so it is projected onto the heavier of the two.
ComplexVector dominant_eigenvector(const ComplexMatrix& a, const TopSingular& top);

}  // namespace specnorm
