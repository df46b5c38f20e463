// Rational functions of one complex variable and a sampled maximum-principle
// checker for the right half-plane: a function bounded on the imaginary axis
// with no poles to its right should attain its half-plane sup on the axis.
// The checker is a falsifier over grids, not a proof.

#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "special.hpp"  // Complex

namespace itw {

constexpr double kEpsRoot = 1e-8;

// Coefficients ascending in degree. Denominator never identically zero.
// Constructors that know the factorization may also store the root lists;
// monomial coefficients of high-degree products are too ill-conditioned to
// recover well-separated roots (Wilkinson effect), so pole extraction prefers
// the factored form when present.
struct RationalFunction {
  std::vector<Complex> num;
  std::vector<Complex> den;
  std::vector<Complex> num_roots;
  std::vector<Complex> den_roots;
  bool factored = false;
};

namespace poly {

inline void trim(std::vector<Complex>& c) {
  while (c.size() > 1 && std::abs(c.back()) == 0.0) c.pop_back();
}

inline int degree(const std::vector<Complex>& c) {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (std::abs(c[static_cast<size_t>(i)]) > 0.0) return i;
  return -1;  // zero polynomial
}

inline Complex eval(const std::vector<Complex>& c, Complex z) {
  Complex acc(0, 0);
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) acc = acc * z + c[static_cast<size_t>(i)];
  return acc;
}

inline Complex eval_derivative(const std::vector<Complex>& c, Complex z) {
  Complex acc(0, 0);
  for (int i = static_cast<int>(c.size()) - 1; i >= 1; --i)
    acc = acc * z + static_cast<double>(i) * c[static_cast<size_t>(i)];
  return acc;
}

// Magnitude scale of the polynomial at |z|, for relative zero tests.
inline double scale_at(const std::vector<Complex>& c, Complex z) {
  double s = 0.0, zp = 1.0;
  const double az = std::abs(z);
  for (const auto& ck : c) {
    s += std::abs(ck) * zp;
    zp *= az;
  }
  return s;
}

inline std::vector<Complex> mul(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> c(a.size() + b.size() - 1, Complex(0, 0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline std::vector<Complex> from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{Complex(1, 0)};
  for (const auto& r : roots) c = mul(c, {-r, Complex(1, 0)});
  return c;
}

// All roots via a scaled companion matrix, polished by Newton iteration.
// The variable is rescaled so the companion stays well conditioned for
// factored products whose coefficients span many orders of magnitude.
inline std::vector<Complex> roots(std::vector<Complex> c) {
  trim(c);
  const int n = degree(c);
  if (n <= 0) return {};
  // Scale z = s * y with s = (|c0|/|cn|)^(1/n) when meaningful.
  double s = 1.0;
  const double c0 = std::abs(c.front()), cn = std::abs(c.back());
  if (c0 > 0.0 && cn > 0.0) s = std::pow(c0 / cn, 1.0 / n);
  if (!(s > 1e-12 && s < 1e12)) s = 1.0;

  std::vector<Complex> sc(static_cast<size_t>(n) + 1);
  double sp = 1.0;
  for (int k = 0; k <= n; ++k) {
    sc[static_cast<size_t>(k)] = c[static_cast<size_t>(k)] * sp;
    sp *= s;
  }
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -sc[static_cast<size_t>(i)] / sc[static_cast<size_t>(n)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, false);

  std::vector<Complex> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Complex z = es.eigenvalues()[i] * s;
    for (int it = 0; it < 8; ++it) {
      const Complex p = eval(c, z), dp = eval_derivative(c, z);
      if (std::abs(dp) == 0.0) break;
      const Complex step = p / dp;
      z -= step;
      if (std::abs(step) <= 1e-14 * (1.0 + std::abs(z))) break;
    }
    out.push_back(z);
  }
  return out;
}

}  // namespace poly

struct EvalResult {
  bool is_pole = false;
  Complex value{};
};

inline EvalResult evaluate(const RationalFunction& f, Complex z) {
  const Complex d = poly::eval(f.den, z);
  const double scale = poly::scale_at(f.den, z);
  if (std::abs(d) < kEpsRoot * std::max(scale, 1e-300)) return {true, Complex(0, 0)};
  return {false, poly::eval(f.num, z) / d};
}

// Denominator roots minus those cancelled by the numerator (within eps_root
// relative). Multiple poles appear with multiplicity.
inline std::vector<Complex> poles(const RationalFunction& f) {
  auto den_roots = f.factored ? f.den_roots : poly::roots(f.den);
  auto num_roots = f.factored ? f.num_roots : poly::roots(f.num);
  std::vector<Complex> out;
  std::vector<bool> used(num_roots.size(), false);
  for (const auto& p : den_roots) {
    bool cancelled = false;
    for (size_t j = 0; j < num_roots.size(); ++j) {
      if (used[j]) continue;
      if (std::abs(num_roots[j] - p) <= kEpsRoot * (1.0 + std::abs(p))) {
        used[j] = true;
        cancelled = true;
        break;
      }
    }
    if (!cancelled) out.push_back(p);
  }
  return out;
}

// g(w) = f((1+w)/(1-w)): coefficient-level composition mapping the unit disk
// onto the right half-plane.
inline RationalFunction mobius_to_disk(const RationalFunction& f) {
  const int dn = std::max(poly::degree(f.num), 0);
  const int dd = std::max(poly::degree(f.den), 0);
  const int N = std::max(dn, dd);
  auto compose = [N](const std::vector<Complex>& c) {
    std::vector<Complex> acc(1, Complex(0, 0));
    // sum_k c_k (1+w)^k (1-w)^(N-k)
    for (int k = 0; k <= N; ++k) {
      const Complex ck = (k < static_cast<int>(c.size())) ? c[static_cast<size_t>(k)] : Complex(0, 0);
      if (std::abs(ck) == 0.0) continue;
      std::vector<Complex> term{ck};
      for (int i = 0; i < k; ++i) term = poly::mul(term, {Complex(1, 0), Complex(1, 0)});
      for (int i = 0; i < N - k; ++i) term = poly::mul(term, {Complex(1, 0), Complex(-1, 0)});
      if (term.size() > acc.size()) acc.resize(term.size(), Complex(0, 0));
      for (size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
    }
    poly::trim(acc);
    return acc;
  };
  RationalFunction g;
  g.num = compose(f.num);
  g.den = compose(f.den);
  return g;
}

enum class MaxPrincipleVerdict {
  Consistent,           // S_half <= S_axis (1 + tol) over all samples
  Violation,            // a half-plane sample exceeded the axis sup
  PoleInHalfPlane,      // hypothesis failure: pole with Re >= -eps
  UnboundedOnAxis,      // hypothesis failure: growth along the axis
};

struct MaxPrincipleConfig {
  int axis_samples = 4001;
  int re_samples = 60;       // log-spaced Re in [re_min, re_max]
  int im_samples = 201;
  int arc_samples = 721;
  double re_min = 1e-3;
  double re_max = 1e3;
  double arc_radius = 1e3;
  double tol = 1e-6;
};

struct MaxPrincipleReport {
  MaxPrincipleVerdict verdict = MaxPrincipleVerdict::Consistent;
  std::vector<Complex> pole_list;
  double s_axis = 0.0;
  double s_half = 0.0;
  Complex worst_point{};
  Complex offending_pole{};
};

inline MaxPrincipleReport max_principle_check(const RationalFunction& f, double t_min, double t_max,
                                              const MaxPrincipleConfig& cfg = {}) {
  MaxPrincipleReport rep;
  rep.pole_list = poles(f);

  for (const auto& p : rep.pole_list) {
    if (p.real() >= -kEpsRoot * (1.0 + std::abs(p))) {
      rep.verdict = MaxPrincipleVerdict::PoleInHalfPlane;
      rep.offending_pole = p;
      return rep;
    }
  }
  // Boundedness on the axis: degree comparison, falling back to sampled growth.
  if (poly::degree(f.num) > poly::degree(f.den)) {
    const double near = std::abs(evaluate(f, Complex(0, t_max)).value);
    const double far = std::abs(evaluate(f, Complex(0, 1e6 * std::max(1.0, t_max))).value);
    if (far > 10.0 * (near + 1.0)) {
      rep.verdict = MaxPrincipleVerdict::UnboundedOnAxis;
      return rep;
    }
  }

  auto consider = [&rep](Complex z, double v, bool axis) {
    if (axis) {
      if (v > rep.s_axis) rep.s_axis = v;
    } else if (v > rep.s_half) {
      rep.s_half = v;
      rep.worst_point = z;
    }
  };

  for (int i = 0; i < cfg.axis_samples; ++i) {
    const double t = t_min + (t_max - t_min) * i / (cfg.axis_samples - 1);
    const auto e = evaluate(f, Complex(0, t));
    if (!e.is_pole) consider(Complex(0, t), std::abs(e.value), true);
  }
  for (int i = 0; i < cfg.re_samples; ++i) {
    const double x =
        cfg.re_min * std::pow(cfg.re_max / cfg.re_min, static_cast<double>(i) / (cfg.re_samples - 1));
    for (int j = 0; j < cfg.im_samples; ++j) {
      const double t = t_min + (t_max - t_min) * j / (cfg.im_samples - 1);
      const auto e = evaluate(f, Complex(x, t));
      if (!e.is_pole) consider(Complex(x, t), std::abs(e.value), false);
    }
  }
  // Large-radius arc guarding the behavior at infinity.
  for (int i = 0; i < cfg.arc_samples; ++i) {
    const double phi = -kPi / 2 + kPi * i / (cfg.arc_samples - 1);
    const Complex z = cfg.arc_radius * Complex(std::cos(phi), std::sin(phi));
    const auto e = evaluate(f, z);
    if (!e.is_pole) consider(z, std::abs(e.value), false);
  }

  rep.verdict = (rep.s_half <= rep.s_axis * (1.0 + cfg.tol)) ? MaxPrincipleVerdict::Consistent
                                                             : MaxPrincipleVerdict::Violation;
  return rep;
}

inline std::string verdict_name(MaxPrincipleVerdict v) {
  switch (v) {
    case MaxPrincipleVerdict::Consistent: return "consistent";
    case MaxPrincipleVerdict::Violation: return "violation found";
    case MaxPrincipleVerdict::PoleInHalfPlane: return "hypothesis violated: pole in half-plane";
    case MaxPrincipleVerdict::UnboundedOnAxis: return "hypothesis violated: unbounded on axis";
  }
  return "?";
}

}  // namespace itw
