// Complex log-Gamma (Lanczos g=7, 9 terms) and overflow-safe Gamma ratios
// with symbolic zero/pole bookkeeping. All Gamma products are assembled in
// log space so large imaginary arguments stay in range.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace itw {

using Complex = std::complex<double>;

constexpr double kEpsPole = 1e-9;
constexpr double kPi = 3.14159265358979323846;

struct LogGammaValue {
  Complex value{};     // principal branch of log Gamma; unspecified at poles
  bool is_pole = false;
};

// Is z within eps of a nonpositive integer?
inline bool near_nonpositive_integer(Complex z, double eps = kEpsPole) {
  if (z.real() > 0.5 || std::abs(z.imag()) > eps) return false;
  return std::abs(z.real() - std::round(z.real())) <= eps;
}

namespace detail {

// Godfrey's coefficients, g = 7, 9 terms.
inline constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,    12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};

// log sin(pi z), stable for large |Im z|; branch may differ from the
// principal one by 2 pi i k, which cancels under exponentiation.
inline Complex log_sin_pi(Complex z) {
  const Complex ipz = Complex(0, 1) * kPi * z;
  if (z.imag() > 0)
    return -ipz + std::log((std::exp(2.0 * ipz) - 1.0) / Complex(0, 2));
  return ipz + std::log((1.0 - std::exp(-2.0 * ipz)) / Complex(0, 2));
}

inline Complex log_gamma_right(Complex z) {
  // Re(z) >= 0.5
  Complex acc = kLanczos[0];
  for (int k = 1; k < 9; ++k) acc += kLanczos[k] / (z - 1.0 + static_cast<double>(k));
  const Complex t = z + 6.5;
  return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(acc);
}

}  // namespace detail

inline LogGammaValue log_gamma(Complex z) {
  LogGammaValue out;
  if (near_nonpositive_integer(z)) {
    out.is_pole = true;
    return out;
  }
  if (z.real() >= 0.5) {
    out.value = detail::log_gamma_right(z);
  } else {
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
    out.value = std::log(kPi) - detail::log_sin_pi(z) - detail::log_gamma_right(1.0 - z);
  }
  return out;
}

inline Complex gamma_fn(Complex z) {
  const auto lg = log_gamma(z);
  if (lg.is_pole) throw std::domain_error("gamma_fn: pole");
  return std::exp(lg.value);
}

// ---------------------------------------------------------------------------
// Symbolic values: finite / zero / pole (and an explicit indeterminate state
// for products mixing zeros with poles).

enum class SymKind { Finite, Zero, Pole, Indeterminate };

struct SymValue {
  SymKind kind = SymKind::Finite;
  Complex value{};

  static SymValue finite(Complex v) { return {SymKind::Finite, v}; }
  static SymValue zero() { return {SymKind::Zero, Complex(0, 0)}; }
  static SymValue pole() { return {SymKind::Pole, Complex(0, 0)}; }
  static SymValue indeterminate() { return {SymKind::Indeterminate, Complex(0, 0)}; }

  bool is_finite() const { return kind == SymKind::Finite; }
};

inline SymValue sym_mul(const SymValue& a, const SymValue& b) {
  const bool az = a.kind == SymKind::Zero, bz = b.kind == SymKind::Zero;
  const bool ap = a.kind == SymKind::Pole, bp = b.kind == SymKind::Pole;
  if (a.kind == SymKind::Indeterminate || b.kind == SymKind::Indeterminate ||
      (az && bp) || (ap && bz))
    return SymValue::indeterminate();
  if (ap || bp) return SymValue::pole();
  if (az || bz) return SymValue::zero();
  return SymValue::finite(a.value * b.value);
}

// prod Gamma(num_i) / prod Gamma(den_j), evaluated in log space.
//
// Pole accounting: Gamma poles are simple, at the nonpositive integers. A pole
// in the denominator contributes a zero, one in the numerator a pole; equal
// counts cancel pairwise with the limiting residue ratio
//   lim Gamma(-n + eps) / Gamma(-m + eps) = (-1)^{n - m} m! / n!.
inline SymValue gamma_ratio(const std::vector<Complex>& num, const std::vector<Complex>& den) {
  Complex log_acc(0, 0);
  std::vector<long long> num_poles, den_poles;
  for (const auto& z : num) {
    const auto lg = log_gamma(z);
    if (lg.is_pole)
      num_poles.push_back(std::llround(-z.real()));
    else
      log_acc += lg.value;
  }
  for (const auto& z : den) {
    const auto lg = log_gamma(z);
    if (lg.is_pole)
      den_poles.push_back(std::llround(-z.real()));
    else
      log_acc -= lg.value;
  }
  if (num_poles.size() > den_poles.size()) return SymValue::pole();
  if (num_poles.size() < den_poles.size()) return SymValue::zero();

  std::sort(num_poles.begin(), num_poles.end());
  std::sort(den_poles.begin(), den_poles.end());
  double sign = 1.0;
  for (size_t k = 0; k < num_poles.size(); ++k) {
    const long long n = num_poles[k], m = den_poles[k];
    if ((n + m) % 2 != 0) sign = -sign;
    log_acc += std::lgamma(static_cast<double>(m) + 1.0) -
               std::lgamma(static_cast<double>(n) + 1.0);
  }
  return SymValue::finite(sign * std::exp(log_acc));
}

}  // namespace itw
