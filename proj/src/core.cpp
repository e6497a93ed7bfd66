#include "relkit/core.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace relkit {

void Tolerances::validate() const {
  if (!(eps_rank > 0.0) || !(eps_orth > 0.0) || !(eps_eq > 0.0))
    throw InvalidInput("tolerances must be strictly positive");
  if (eps_rank > eps_eq) throw InvalidInput("eps_rank must not exceed eps_eq");
}

Tolerances Tolerances::from_env() {
  Tolerances tol;
  if (const char* s = std::getenv("RELKIT_TOL_EQ")) {
    char* end = nullptr;
    const double v = std::strtod(s, &end);
    if (end == s || !(v > 0.0)) throw InvalidInput("RELKIT_TOL_EQ must be a positive number");
    tol.eps_eq = v;
  }
  tol.validate();
  return tol;
}

bool all_finite(const Matrix& m) { return m.allFinite(); }

double spectral_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Matrix pseudo_inverse(const Matrix& m, double eps_rank) {
  if (m.rows() == 0 || m.cols() == 0) return Matrix::Zero(m.cols(), m.rows());
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd& sv = svd.singularValues();
  const double cutoff = eps_rank * sv(0);
  Vector inv = Vector::Zero(sv.size());
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff && sv(i) > 0.0) inv(i) = Complex(1.0 / sv(i), 0.0);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

Matrix kernel_basis(const Matrix& m, double eps_rank) {
  const Index q = m.cols();
  if (q == 0) return Matrix::Zero(0, 0);
  if (m.rows() == 0) return Matrix::Identity(q, q);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
  const Eigen::VectorXd& sv = svd.singularValues();
  Index rank = 0;
  if (sv.size() > 0 && sv(0) > 0.0) {
    const double cutoff = eps_rank * sv(0);
    for (Index i = 0; i < sv.size(); ++i)
      if (sv(i) > cutoff) ++rank;
  }
  return svd.matrixV().rightCols(q - rank);
}

std::uint64_t Rng::next() {
  // splitmix64 (Vigna); public-domain reference constants
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) { return n == 0 ? 0 : next() % n; }

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::gauss() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log1p(u1 - 1.0 + 0x1.0p-53));  // keeps u1 away from 0
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

Complex Rng::cgauss() {
  const double re = gauss();
  const double im = gauss();
  return Complex(re, im) / std::sqrt(2.0);
}

Rng Rng::substream(std::uint64_t seed, std::uint64_t index) {
  Rng mixer(seed);
  const std::uint64_t base = mixer.next();
  Rng stream(base + 0x9E3779B97F4A7C15ULL * (index + 1));
  stream.next();
  return stream;
}

}  // namespace relkit
