#include "bohrseq/unitary.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

namespace bohrseq {

namespace {

constexpr int kMaxPowerIterations = 10000;
constexpr double kRelTol = 1e-12;

void require_finite(const CMatrix& m) {
  if (!m.allFinite()) throw NumericError("matrix has non-finite entries");
}

void require_same_dim(const Unitary& u, const Unitary& v) {
  if (u.dim() != v.dim()) {
    throw NumericError("dimension mismatch: " + std::to_string(u.dim()) +
                       " vs " + std::to_string(v.dim()));
  }
}

// One power-iteration run on the Hermitian PSD matrix h from the given
// start vector. Returns the converged Rayleigh quotient.
double power_iterate(const CMatrix& h, Eigen::VectorXcd v) {
  const double scale = h.cwiseAbs().maxCoeff();
  v.normalize();
  double lambda = 0.0;
  double prev = -1.0;
  int stable = 0;
  int perturbations = 0;
  for (int iter = 0; iter < kMaxPowerIterations; ++iter) {
    Eigen::VectorXcd w = h * v;
    const double wn = w.norm();
    if (wn <= scale * 1e-300) {
      // Start vector annihilated; rotate in a basis direction and retry.
      v.setZero();
      v(perturbations++ % v.size()) = 1.0;
      continue;
    }
    lambda = v.dot(w).real();
    v = w / wn;
    if (std::abs(lambda - prev) <= kRelTol * std::max(std::abs(lambda), 1e-300)) {
      if (++stable >= 3) return lambda;
    } else {
      stable = 0;
    }
    prev = lambda;
  }
  throw NonConvergence(prev, lambda, kMaxPowerIterations);
}

// splitmix64 finalizer, used only to derive a fixed second start vector.
std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

}  // namespace

NonConvergence::NonConvergence(double previous, double current, int iters)
    : NumericError("power iteration did not converge after " +
                   std::to_string(iters) + " iterations; last interval [" +
                   std::to_string(previous) + ", " + std::to_string(current) +
                   "]"),
      previous_estimate(previous),
      current_estimate(current),
      iterations(iters) {}

double unitarity_defect(const CMatrix& m) {
  if (m.rows() != m.cols()) throw NumericError("matrix is not square");
  return (m.adjoint() * m - CMatrix::Identity(m.rows(), m.cols())).norm();
}

Unitary::Unitary(CMatrix m) : m_(std::move(m)) {
  require_finite(m_);
  const double defect = unitarity_defect(m_);
  if (defect > kUnitarityTolerance) {
    throw NumericError("unitarity defect " + std::to_string(defect) +
                       " exceeds tolerance");
  }
}

Unitary Unitary::identity(Eigen::Index n) {
  return Unitary(CMatrix::Identity(n, n), Trusted{});
}

Unitary mul(const Unitary& u, const Unitary& v) {
  require_same_dim(u, v);
  return Unitary(u.m_ * v.m_, Unitary::Trusted{});
}

Unitary adjoint(const Unitary& u) {
  return Unitary(u.m_.adjoint(), Unitary::Trusted{});
}

double op_norm(const CMatrix& m) {
  require_finite(m);
  if (m.size() == 0) return 0.0;
  if (m.cwiseAbs().maxCoeff() == 0.0) return 0.0;
  const Eigen::Index n = m.cols();
  const CMatrix h = m.adjoint() * m;

  // Primary start: normalized all-ones. A second fixed start guards against
  // the all-ones vector lying in a lower eigenspace.
  const double lambda1 = power_iterate(h, Eigen::VectorXcd::Ones(n));
  Eigen::VectorXcd alt(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto idx = static_cast<std::uint64_t>(i);
    const double re = 0.5 + static_cast<double>(mix64(idx + 1) >> 40) * 0x1.0p-24;
    const double im = static_cast<double>(mix64(~idx) >> 40) * 0x1.0p-24 - 0.5;
    alt(i) = Complex(re, im);
  }
  const double lambda2 = power_iterate(h, alt);
  return std::sqrt(std::max({lambda1, lambda2, 0.0}));
}

double ell(const Unitary& u) {
  return op_norm(CMatrix::Identity(u.dim(), u.dim()) - u.matrix());
}

double dist(const Unitary& u, const Unitary& v) {
  require_same_dim(u, v);
  return op_norm(u.matrix() - v.matrix());
}

Unitary haar(Eigen::Index n, RngStream& rng) {
  if (n < 1) throw NumericError("dimension must be >= 1");
  for (int attempt = 0; attempt < 64; ++attempt) {
    CMatrix g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = 0; j < n; ++j) {
        g(i, j) = rng.next_complex_gaussian();
      }
    }
    Eigen::HouseholderQR<CMatrix> qr(g);
    CMatrix q = qr.householderQ();
    bool singular = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      const Complex r = qr.matrixQR()(i, i);
      const double mag = std::abs(r);
      if (mag == 0.0) {
        singular = true;
        break;
      }
      q.col(i) *= r / mag;
    }
    if (singular) continue;  // probability zero; redraw
    return Unitary(std::move(q));
  }
  throw NumericError("haar sampling kept drawing singular matrices");
}

Unitary finite_order(Eigen::Index n, std::uint64_t order, RngStream& rng) {
  if (n < 1) throw NumericError("dimension must be >= 1");
  if (order < 1) throw NumericError("order must be >= 1");
  const Unitary v = haar(n, rng);

  std::vector<std::uint64_t> exps(static_cast<std::size_t>(n));
  for (auto& e : exps) e = rng.next_u64() % order;
  // Force one entry to a primitive root so the order is exactly `order`.
  const auto slot = static_cast<std::size_t>(rng.next_u64() % static_cast<std::uint64_t>(n));
  std::uint64_t unit = rng.next_u64() % order;
  while (std::gcd(unit, order) != 1) unit = rng.next_u64() % order;
  exps[slot] = unit;

  Eigen::VectorXcd d(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double angle = 2.0 * std::numbers::pi *
                         static_cast<double>(exps[static_cast<std::size_t>(i)]) /
                         static_cast<double>(order);
    d(i) = std::polar(1.0, angle);
  }
  CMatrix m = v.matrix() * d.asDiagonal() * v.matrix().adjoint();
  return Unitary(std::move(m));
}

Unitary reunitarize(const CMatrix& m) {
  require_finite(m);
  if (m.rows() != m.cols()) throw NumericError("matrix is not square");
  const double defect = unitarity_defect(m);
  if (defect > kReprojectLimit) {
    throw NumericError("reunitarize: defect " + std::to_string(defect) +
                       " too large; upstream numerical blowup");
  }
  Eigen::HouseholderQR<CMatrix> qr(m);
  CMatrix q = qr.householderQ();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const Complex r = qr.matrixQR()(i, i);
    const double mag = std::abs(r);
    if (mag == 0.0) throw NumericError("reunitarize: singular input");
    q.col(i) *= r / mag;
  }
  return Unitary(std::move(q));
}

RepF2::RepF2(Unitary a_image, Unitary b_image)
    : A(std::move(a_image)), B(std::move(b_image)) {
  if (A.dim() != B.dim()) {
    throw NumericError("representation images have different dimensions");
  }
}

RepF2 char_rep(double alpha, double beta) {
  CMatrix a(1, 1), b(1, 1);
  a(0, 0) = std::polar(1.0, alpha);
  b(0, 0) = std::polar(1.0, beta);
  return RepF2(Unitary(std::move(a)), Unitary(std::move(b)));
}

}  // namespace bohrseq
