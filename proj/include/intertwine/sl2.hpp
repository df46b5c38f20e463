// The fully explicit SL2(R) compact picture: Iwasawa geometry of 2x2
// matrices, the singular convolution kernel of the intertwining operator on
// the circle, its closed-form Fourier eigenvalues, the normalized
// coefficients c_{2m}(z), and the operator-norm bound sweep.
//
// Spectral parameters are scalars z in C via z -> (tH -> z t), so rho = 1 and
// the unitary axis is Re(z) = 0.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "quadrature.hpp"
#include "ratfun.hpp"
#include "special.hpp"

namespace itw::sl2 {

using Mat2 = Eigen::Matrix2d;

constexpr double kEpsSep = 1e-8;

inline Mat2 basis_H() { return (Mat2() << 1, 0, 0, -1).finished(); }
inline Mat2 basis_X() { return (Mat2() << 0, 1, 0, 0).finished(); }
inline Mat2 basis_Xbar() { return (Mat2() << 0, 0, 1, 0).finished(); }

inline Mat2 rotation(double phi) {
  return (Mat2() << std::cos(phi), std::sin(phi), -std::sin(phi), std::cos(phi)).finished();
}

inline Mat2 nbar(double u) { return (Mat2() << 1, 0, u, 1).finished(); }
inline Mat2 weyl_rep() { return (Mat2() << 0, 1, -1, 0).finished(); }

// g = n(x) exp(tH) k_phi
struct IwasawaFactors {
  double n_param = 0;
  double t = 0;
  double phi = 0;

  Mat2 reconstruct() const {
    Mat2 n;
    n << 1, n_param, 0, 1;
    Mat2 a;
    a << std::exp(t), 0, 0, std::exp(-t);
    return n * a * rotation(phi);
  }
};

inline IwasawaFactors iwasawa_nak_2x2(const Mat2& g) {
  if (std::abs(g.determinant() - 1.0) > 1e-12)
    throw std::invalid_argument("iwasawa_nak_2x2: input must be unimodular");
  IwasawaFactors f;
  const double c = g(1, 0), d = g(1, 1);
  const double r = std::hypot(c, d);  // = e^{-t}
  f.t = -std::log(r);
  f.phi = std::atan2(-c, d);
  if (f.phi < 0) f.phi += 2 * kPi;
  // n a k = g  =>  n = g k^{-1} a^{-1}
  const Mat2 nm = g * rotation(f.phi).transpose() *
                  (Mat2() << std::exp(-f.t), 0, 0, std::exp(f.t)).finished();
  f.n_param = nm(0, 1);
  return f;
}

// ---------------------------------------------------------------------------
// The intertwining operator in the Fourier basis phi_{2m}(theta) = e^{2 m i theta}

struct QuadratureConfig {
  double sigma_min = 0.05;  // divergence guard on Re(z)
  int order = 256;
  double tol = 1e-11;
  int max_nodes = 1 << 14;
};

// Eigenvalue of the convolution kernel (1/pi) int_0^pi |sin t|^{z-1} F(k_{phi+t}) dt
// on phi_{2m}, by quadrature. The endpoint singularities sin(theta)^{z-1} are
// algebraic of exponent Re(z) - 1 > -1, which the tanh-sinh (double
// exponential) transform theta = pi * sigmoid(pi sinh t) absorbs for any
// Re(z) > 0. Magnitudes are assembled in log space so the extreme nodes
// underflow gracefully instead of overflowing the sin^{z-1} factor.
inline Complex kernel_apply(Complex z, int m, const QuadratureConfig& cfg = {},
                            double base_phi = 0.0) {
  if (z.real() < cfg.sigma_min)
    throw std::invalid_argument("kernel_apply: Re(z) below divergence guard");
  const Complex zm1 = z - 1.0;

  // log sigmoid(y) = -log(1 + e^{-y}), stable for either sign of y.
  auto log_sigmoid = [](double y) {
    return y >= 0 ? -std::log1p(std::exp(-y)) : y - std::log1p(std::exp(y));
  };

  auto term = [&](double t) -> Complex {
    const double x = kPi * std::sinh(t);               // 2x of the sigmoid argument
    const double ls_near = log_sigmoid(-std::abs(x));  // log sigmoid at the close endpoint
    const double theta_near = kPi * std::exp(ls_near); // distance to the nearer endpoint
    const double theta = (x >= 0) ? kPi - theta_near : theta_near;
    // sin(theta) = sin(theta_near) exactly; safe to take logs of.
    const double log_sin = (theta_near < 1e-8) ? std::log(kPi) + ls_near
                                               : std::log(std::sin(theta_near));
    // dtheta/dt = pi^2 cosh(t) sigmoid(x) sigmoid(-x)
    const double log_w =
        std::log(kPi * kPi * std::cosh(t)) + log_sigmoid(x) + log_sigmoid(-x);
    const Complex expo = zm1 * log_sin + log_w;
    if (expo.real() < -745.0) return Complex(0, 0);
    return std::exp(expo + Complex(0, 2.0 * m * (base_phi + theta)));
  };

  const double t_max = 6.5;
  double h = 0.5;
  Complex prev(0, 0), integral(0, 0);
  long nodes = 0;
  for (int level = 0;; ++level) {
    Complex sum(0, 0);
    const long kmax = static_cast<long>(t_max / h);
    for (long k = -kmax; k <= kmax; ++k) sum += term(k * h);
    nodes += 2 * kmax + 1;
    integral = sum * h;
    if (level >= 2 && std::abs(integral - prev) <= cfg.tol * (std::abs(integral) + 1e-300)) break;
    if (nodes > cfg.max_nodes) break;
    prev = integral;
    h *= 0.5;
  }
  // Convolution: output is (coefficient) * phi_{2m}; strip the base point.
  return integral / kPi / std::exp(Complex(0, 2.0 * m * base_phi));
}

// A phi_{2m} = (-1)^m 2^{1-z} Gamma(z) / (Gamma((z+1)/2 + m) Gamma((z+1)/2 - m)) phi_{2m}
inline SymValue closed_form_eigenvalue(Complex z, int m) {
  SymValue g = gamma_ratio({z}, {(z + 1.0) / 2.0 + static_cast<double>(m),
                                 (z + 1.0) / 2.0 - static_cast<double>(m)});
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return sym_mul(SymValue::finite(sign * std::pow(Complex(2, 0), 1.0 - z)), g);
}

// r(z) = 2^{1-z} Gamma(z) / Gamma((z+1)/2)^2
inline SymValue r_sl2(Complex z) {
  SymValue g = gamma_ratio({z}, {(z + 1.0) / 2.0, (z + 1.0) / 2.0});
  return sym_mul(SymValue::finite(std::pow(Complex(2, 0), 1.0 - z)), g);
}

// The Gamma-free finite product prod_{j=0}^{m-1} (z - (2j+1)) / (z + (2j+1)).
// The full normalized coefficient is c_{2m}(z) = sign_convention(m) * this;
// its modulus is convention-free.
inline Complex normalized_coeff(Complex z, int m) {
  Complex acc(1, 0);
  for (int j = 0; j < m; ++j) {
    const double odd = 2.0 * j + 1.0;
    const Complex den = z + odd;
    if (std::abs(den) < 1e-300)
      throw std::domain_error("normalized_coeff: pole at z = -(2j+1)");
    acc *= (z - odd) / den;
  }
  return acc;
}

inline double sign_convention(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

// c_{2m} as a rational function of z, for the max-principle checker.
inline RationalFunction normalized_coeff_ratfun(int m) {
  std::vector<Complex> zeros, pole_locs;
  for (int j = 0; j < m; ++j) {
    zeros.emplace_back(2.0 * j + 1.0, 0.0);
    pole_locs.emplace_back(-(2.0 * j + 1.0), 0.0);
  }
  return {poly::from_roots(zeros), poly::from_roots(pole_locs), zeros, pole_locs, true};
}

struct BoundReport {
  int grid_points = 0;
  int m_max = 0;
  std::vector<double> sup_per_m;  // indexed by m
  double sup = 0.0;
  Complex argmax{};
  int argmax_m = 0;
  bool pass = false;
};

// Assert |c_{2m}(z)| <= 1 + 1e-12 over the grid (all points need Re(z) >= 0).
inline BoundReport verify_bound(const std::vector<Complex>& grid, int m_max,
                                double slack = 1e-12) {
  BoundReport rep;
  rep.m_max = m_max;
  rep.sup_per_m.assign(static_cast<size_t>(m_max) + 1, 0.0);
  for (const auto& z : grid) {
    if (z.real() < 0)
      throw std::invalid_argument("verify_bound: grid point with Re(z) < 0");
    ++rep.grid_points;
    Complex acc(1, 0);
    for (int m = 0; m <= m_max; ++m) {
      if (m > 0) {
        const double odd = 2.0 * m - 1.0;
        acc *= (z - odd) / (z + odd);
      }
      const double mag = std::abs(acc);
      if (mag > rep.sup_per_m[static_cast<size_t>(m)]) rep.sup_per_m[static_cast<size_t>(m)] = mag;
      if (mag > rep.sup) {
        rep.sup = mag;
        rep.argmax = z;
        rep.argmax_m = m;
      }
    }
  }
  rep.pass = rep.sup <= 1.0 + slack;
  return rep;
}

// ---------------------------------------------------------------------------
// Adjoint Iwasawa components and the p_X functions

// Coefficient of H in the n + a + k decomposition of Ad(k_phi) X.
// For sl2 the a-part of a traceless Y is its (0,0) entry.
inline double ad_iwasawa_a_component(const Mat2& X, double phi) {
  if (std::abs(X.trace()) > 1e-12)
    throw std::invalid_argument("ad_iwasawa_a_component: X must be traceless");
  const Mat2 k = rotation(phi);
  const Mat2 y = k * X * k.transpose();
  return y(0, 0);
}

// p_X(k_phi) = (1/i) <X_a(k_phi), nu~> with nu~ = i * tau purely imaginary.
inline double p_X(const Mat2& X, double phi, double nu_im) {
  return nu_im * ad_iwasawa_a_component(X, phi);
}

struct SeparationReport {
  int pairs_tested = 0;
  int same_coset_skipped = 0;
  std::vector<std::pair<double, double>> failures;
  bool pass() const { return failures.empty(); }
};

// Check that {p_H, p_X, p_Xbar} separate distinct M-cosets (phi mod pi) in the
// sample. Requires a regular parameter (nu_im != 0).
inline SeparationReport separation_check(const std::vector<std::pair<double, double>>& phi_pairs,
                                         double nu_im, double eps_sep = kEpsSep) {
  if (nu_im == 0.0) throw std::invalid_argument("separation_check: parameter must be regular");
  SeparationReport rep;
  const Mat2 basis[3] = {basis_H(), basis_X(), basis_Xbar()};
  for (const auto& [a, b] : phi_pairs) {
    const double diff = std::remainder(a - b, kPi);
    if (std::abs(diff) < 1e-12) {
      ++rep.same_coset_skipped;
      continue;
    }
    ++rep.pairs_tested;
    double best = 0.0;
    for (const auto& X : basis)
      best = std::max(best, std::abs(p_X(X, a, nu_im) - p_X(X, b, nu_im)));
    if (best <= eps_sep) rep.failures.emplace_back(a, b);
  }
  return rep;
}

}  // namespace itw::sl2
