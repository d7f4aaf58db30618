#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "bohrseq/rng.hpp"

namespace bohrseq {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;

// Frobenius defect accepted when constructing a Unitary.
constexpr double kUnitarityTolerance = 1e-10;
// Defect that triggers reprojection inside long product chains.
constexpr double kReprojectTrigger = 1e-12;
// Defect beyond which reunitarize refuses (upstream numerical blowup).
constexpr double kReprojectLimit = 0.1;

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Power iteration ran out of its iteration budget; carries the last bracket.
class NonConvergence : public NumericError {
 public:
  NonConvergence(double previous, double current, int iterations);
  double previous_estimate;
  double current_estimate;
  int iterations;
};

// ||m* m - I||_F
double unitarity_defect(const CMatrix& m);

// n x n unitary matrix; the defect bound is checked on construction.
class Unitary {
 public:
  explicit Unitary(CMatrix m);
  static Unitary identity(Eigen::Index n);

  const CMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  struct Trusted {};
  Unitary(CMatrix m, Trusted) : m_(std::move(m)) {}
  CMatrix m_;

  friend Unitary mul(const Unitary&, const Unitary&);
  friend Unitary adjoint(const Unitary&);
  friend Unitary haar(Eigen::Index, RngStream&);
  friend Unitary finite_order(Eigen::Index, std::uint64_t, RngStream&);
  friend Unitary reunitarize(const CMatrix&);
};

Unitary mul(const Unitary& u, const Unitary& v);
Unitary adjoint(const Unitary& u);

// Largest singular value via power iteration on m*·m, relative tolerance
// 1e-12, at most 10^4 iterations, deterministic start vectors.
double op_norm(const CMatrix& m);

// Length function ||1 - u|| and the induced bi-invariant metric ||u - v||.
double ell(const Unitary& u);
double dist(const Unitary& u, const Unitary& v);

// Haar-distributed unitary: complex Ginibre fill, QR, columns rescaled so
// the triangular factor has a positive real diagonal.
Unitary haar(Eigen::Index n, RngStream& rng);

// V D V* with V Haar and D m-th roots of unity, at least one of them
// primitive, so the result has exact multiplicative order m.
Unitary finite_order(Eigen::Index n, std::uint64_t order, RngStream& rng);

// Projection back to the unitary group (QR route with positive-diagonal
// normalization); requires defect <= 0.1.
Unitary reunitarize(const CMatrix& m);

// Representation of the rank-2 free group: an ordered pair of unitaries.
struct RepF2 {
  RepF2(Unitary a_image, Unitary b_image);
  Unitary A;  // image of generator a
  Unitary B;  // image of generator b
  Eigen::Index dim() const { return A.dim(); }
};

// One-dimensional representation a -> e^{i alpha}, b -> e^{i beta}.
RepF2 char_rep(double alpha, double beta);

}  // namespace bohrseq
