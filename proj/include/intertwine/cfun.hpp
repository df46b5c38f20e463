// The spherical c-function r(nu; w) as a product over Phi_w of Gamma-quotient
// factors, with symbolic zero/pole propagation, plus a grid sweep that checks
// it stays finite and nonzero on chamber-interior parameters.

#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "rootsys.hpp"
#include "special.hpp"

namespace itw {

struct CFactor {
  int root_index = -1;
  int p = 1;
  int q = 0;
  Complex nu_b{};     // nu_beta for this root
  SymValue value;
};

struct CFunctionValue {
  std::vector<CFactor> factors;
  SymValue value;
};

// Single-root bracket:
//   Gamma(p+q)/Gamma((p+q)/2) * Gamma(nu_b/2)/Gamma((nu_b+p)/2)
//     * Gamma((nu_b+p)/4)/Gamma((nu_b+p)/4 + q/2)
inline SymValue c_factor_value(int p, int q, Complex nu_b) {
  if (p < 1) throw std::invalid_argument("c_factor: multiplicity p must be >= 1");
  const double pd = p, qd = q;
  return gamma_ratio(
      {Complex(pd + qd, 0), nu_b / 2.0, (nu_b + pd) / 4.0},
      {Complex((pd + qd) / 2.0, 0), (nu_b + pd) / 2.0, (nu_b + pd) / 4.0 + qd / 2.0});
}

inline CFactor c_factor(const RootSystem& rs, int root_index, const SpectralParameter& nu) {
  CFactor f;
  f.root_index = root_index;
  f.p = rs.p_of(root_index);
  f.q = rs.q_of(root_index);
  f.nu_b = nu_beta(rs, nu, rs.root(root_index));
  f.value = c_factor_value(f.p, f.q, f.nu_b);
  return f;
}

// r(nu; w) = prod_{beta in Phi_w} [bracket]
inline CFunctionValue r_function(const RootSystem& rs, const WeylElement& w,
                                 const SpectralParameter& nu) {
  CFunctionValue out;
  out.value = SymValue::finite(Complex(1, 0));
  for (int idx : phi_w(rs, w)) {
    const CFactor f = c_factor(rs, idx, nu);
    out.value = sym_mul(out.value, f.value);
    out.factors.push_back(f);
  }
  return out;
}

// Apply a Weyl element to a spectral parameter (component-wise on re/im).
inline SpectralParameter weyl_apply(const WeylElement& w, const SpectralParameter& nu) {
  const Eigen::MatrixXd m = to_eigen(w.matrix);
  SpectralParameter out;
  out.re = m * nu.re;
  out.im = m * nu.im;
  return out;
}

struct SweepViolation {
  SpectralParameter nu;
  int factor_index = -1;  // offending factor within r_function, -1 if product-level
  SymKind kind = SymKind::Finite;
};

struct SweepReport {
  int points = 0;
  std::vector<SweepViolation> violations;
  bool clean() const { return violations.empty(); }
};

// Assert r(nu; w) is finite and nonzero over the sampled grid. Callers are
// responsible for choosing grids with Re(nu) in the interior chamber for w;
// out-of-domain points are how the negative tests exercise the reporting.
inline SweepReport verify_no_zeros_poles(const RootSystem& rs, const WeylElement& w,
                                         const std::vector<SpectralParameter>& grid) {
  SweepReport report;
  for (const auto& nu : grid) {
    ++report.points;
    const CFunctionValue v = r_function(rs, w, nu);
    if (v.value.is_finite() && std::abs(v.value.value) > 0.0) continue;
    SweepViolation viol;
    viol.nu = nu;
    viol.kind = v.value.kind;
    for (size_t i = 0; i < v.factors.size(); ++i)
      if (!v.factors[i].value.is_finite()) {
        viol.factor_index = static_cast<int>(i);
        break;
      }
    report.violations.push_back(viol);
  }
  return report;
}

inline std::string sym_kind_name(SymKind k) {
  switch (k) {
    case SymKind::Finite: return "finite";
    case SymKind::Zero: return "zero";
    case SymKind::Pole: return "pole";
    case SymKind::Indeterminate: return "indeterminate";
  }
  return "?";
}

}  // namespace itw
