#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Dense>

namespace relkit {

using Complex = std::complex<double>;
using Matrix  = Eigen::MatrixXcd;
using Vector  = Eigen::VectorXcd;
using Index   = Eigen::Index;

struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct HypothesisViolated : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInResolventSet : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInGammaSet : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numerical thresholds threaded through every operation. eps_rank is a
/// relative singular-value cutoff for rank decisions, eps_orth bounds the
/// orthonormality residual of stored bases, and eps_eq bounds equality
/// residuals for subspaces and matrices.
struct Tolerances {
  double eps_rank = 1e-10;
  double eps_orth = 1e-12;
  double eps_eq   = 1e-8;

  void validate() const;

  /// Defaults, with RELKIT_TOL_EQ (when set) overriding eps_eq.
  static Tolerances from_env();
};

bool all_finite(const Matrix& m);

/// Largest singular value; 0 for empty matrices.
double spectral_norm(const Matrix& m);

/// Moore-Penrose inverse with relative singular-value cutoff.
Matrix pseudo_inverse(const Matrix& m, double eps_rank = 1e-10);

/// Orthonormal basis of the null space, shape cols(m) x nullity.
Matrix kernel_basis(const Matrix& m, double eps_rank = 1e-10);

/// SplitMix64 stream with a Box-Muller Gaussian on top. Deterministic and
/// portable across platforms; gauss() always consumes exactly two raw draws
/// so call sequences replay identically.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  std::uint64_t below(std::uint64_t n);  // uniform-ish in [0, n)
  double uniform();                      // [0, 1)
  double gauss();
  Complex cgauss();                      // complex standard normal, E|z|^2 = 1

  /// Derives an independent stream for a trial index; serial and parallel
  /// schedules see the same per-trial sequences.
  static Rng substream(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t state_;
};

}  // namespace relkit
