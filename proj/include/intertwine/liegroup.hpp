// Numerical Iwasawa machinery for SL_n(R): group-level NAK factorization,
// the linear n + a + k projection on the Lie algebra, Haar sampling on SO(n),
// and the p_X functions for general rank.
//
// a and a* are identified with trace-zero diagonal vectors under the trace
// form <X, Y> = tr(XY). Against the abstract gram pairing of the root-system
// module this identification differs by the Killing-form constant 2n for
// sl_n; cross-module checks carry that factor explicitly.

#pragma once

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "special.hpp"  // constants

namespace itw::lie {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

constexpr double kEpsFix = 1e-9;
constexpr double kEpsSep = 1e-8;

struct NAKFactors {
  Matrix n;       // unit upper triangular
  Vector a_log;   // diagonal logs, sums to zero
  Matrix k;       // special orthogonal

  Matrix reconstruct() const {
    return n * a_log.array().exp().matrix().asDiagonal() * k;
  }
};

// g = n a k via the RQ decomposition: QR-factorize g^T J, where J reverses
// coordinates; the upper-triangular factor comes back reversed.
inline NAKFactors iwasawa_nak(const Matrix& g) {
  const auto n = g.rows();
  if (n != g.cols()) throw std::invalid_argument("iwasawa_nak: square matrix required");
  if (n > 12) throw std::invalid_argument("iwasawa_nak: guarded to n <= 12");
  if (std::abs(g.determinant() - 1.0) > 1e-10)
    throw std::invalid_argument("iwasawa_nak: input must have determinant 1");

  Matrix J = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) J(i, n - 1 - i) = 1.0;

  const Matrix M = g.transpose() * J;
  Eigen::HouseholderQR<Matrix> qr(M);
  Matrix Q1 = qr.householderQ();
  Matrix R1 = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix signs so R1 has positive diagonal.
  for (Eigen::Index i = 0; i < n; ++i)
    if (R1(i, i) < 0) {
      R1.row(i) *= -1.0;
      Q1.col(i) *= -1.0;
    }
  // g = R Q with R = J R1^T J (upper triangular, positive diagonal), Q = J Q1^T.
  const Matrix R = J * R1.transpose() * J;
  NAKFactors f;
  f.k = J * Q1.transpose();
  f.a_log = R.diagonal().array().log();
  f.n = R * R.diagonal().asDiagonal().inverse();
  return f;
}

struct LieTriple {
  Matrix Xn;  // strictly upper triangular
  Matrix Xa;  // traceless diagonal
  Matrix Xk;  // antisymmetric
};

// Exact linear projection g = n + a + k:
//   Xa = diag(X), Xn = 2U, Xk = skew(X) + (U^T - U),
// with U the strict upper part of the symmetric part of X.
inline LieTriple lie_iwasawa(const Matrix& X) {
  if (std::abs(X.trace()) > 1e-9)
    throw std::invalid_argument("lie_iwasawa: X must be traceless");
  const Matrix sym = 0.5 * (X + X.transpose());
  const Matrix skew = 0.5 * (X - X.transpose());
  Matrix U = sym.triangularView<Eigen::StrictlyUpper>();
  LieTriple t;
  t.Xa = Matrix(X.diagonal().asDiagonal());
  t.Xn = 2.0 * U;
  t.Xk = skew + U.transpose() - U;
  return t;
}

// p_X(k) = (1/i) <X_a(k), nu~> : the a-component of Ad(k) X paired with the
// imaginary part of nu~ in diagonal coordinates under the trace form.
inline double p_X_general(const Matrix& X, const Matrix& k, const Vector& nu_im) {
  const LieTriple t = lie_iwasawa(k * X * k.transpose());
  return t.Xa.diagonal().dot(nu_im);
}

// Haar-distributed element of SO(n): QR of a seeded Gaussian matrix with the
// R diagonal sign-fixed, then a column flip to land in the det = +1 component.
inline Matrix haar_sample_k(int n, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("haar_sample_k: n >= 2 required");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = gauss(rng);
  Eigen::HouseholderQR<Matrix> qr(G);
  Matrix Q = qr.householderQ();
  const Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (R(i, i) < 0) Q.col(i) *= -1.0;
  if (Q.determinant() < 0) Q.col(n - 1) *= -1.0;
  return Q;
}

inline Matrix haar_sample_k(int n, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  return haar_sample_k(n, rng);
}

// Basis of sl_n: elementary E_ij (i != j) and H_i = E_ii - E_{i+1,i+1}.
inline std::vector<Matrix> sl_basis(int n) {
  std::vector<Matrix> basis;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix E = Matrix::Zero(n, n);
      E(i, j) = 1.0;
      basis.push_back(E);
    }
  for (int i = 0; i + 1 < n; ++i) {
    Matrix H = Matrix::Zero(n, n);
    H(i, i) = 1.0;
    H(i + 1, i + 1) = -1.0;
    basis.push_back(H);
  }
  return basis;
}

// Same M_1-coset test: m = k' k^T centralizes nu~ under Ad.
inline bool same_m1_coset(const Matrix& k, const Matrix& kp, const Vector& nu_im,
                          double eps = kEpsFix) {
  const Matrix m = kp * k.transpose();
  const Matrix d = Matrix(nu_im.asDiagonal());
  return (m * d * m.transpose() - d).lpNorm<Eigen::Infinity>() <= eps;
}

struct SeparationSweepReport {
  int pairs_sampled = 0;
  int pairs_tested = 0;
  int same_coset_skipped = 0;
  std::vector<std::pair<int, double>> failures;  // (pair index, best gap)
  bool pass() const { return failures.empty(); }
};

// Sample Haar pairs (k, k'), discard same-coset pairs, and require some basis
// element X to separate the rest via p_X with gap > eps_sep.
inline SeparationSweepReport separation_sweep(int n, const Vector& nu_im, int num_pairs,
                                              unsigned long long seed,
                                              double eps_sep = kEpsSep) {
  if (std::abs(nu_im.sum()) > 1e-9)
    throw std::invalid_argument("separation_sweep: nu~ must be trace-free in diagonal coordinates");
  SeparationSweepReport rep;
  std::mt19937_64 rng(seed);
  const auto basis = sl_basis(n);
  for (int p = 0; p < num_pairs; ++p) {
    const Matrix k = haar_sample_k(n, rng);
    const Matrix kp = haar_sample_k(n, rng);
    ++rep.pairs_sampled;
    if (same_m1_coset(k, kp, nu_im)) {
      ++rep.same_coset_skipped;
      continue;
    }
    ++rep.pairs_tested;
    double best = 0.0;
    for (const auto& X : basis)
      best = std::max(best, std::abs(p_X_general(X, k, nu_im) - p_X_general(X, kp, nu_im)));
    if (best <= eps_sep) rep.failures.emplace_back(p, best);
  }
  return rep;
}

}  // namespace itw::lie
