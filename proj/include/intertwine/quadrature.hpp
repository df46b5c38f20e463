// Gauss-Legendre panels with adaptive doubling. Node/weight sets are computed
// by Newton iteration on the Legendre recurrence and cached per order.

#pragma once

#include <cmath>
#include <functional>
#include <map>
#include <vector>

#include "special.hpp"  // Complex

namespace itw {

struct GaussRule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

inline const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  GaussRule rule;
  rule.nodes.resize(static_cast<size_t>(n));
  rule.weights.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess, then Newton on P_n.
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[static_cast<size_t>(i)] = x;
    rule.weights[static_cast<size_t>(i)] = 2.0 / ((1.0 - x * x) * pp * pp);
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

// Composite Gauss-Legendre of `f` over [a, b] with `panels` equal panels.
inline Complex integrate_panels(const std::function<Complex(double)>& f, double a, double b,
                                int panels, int order) {
  const GaussRule& rule = gauss_legendre(order);
  Complex acc(0, 0);
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h, half = 0.5 * h;
    for (size_t i = 0; i < rule.nodes.size(); ++i)
      acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return acc * (0.5 * (b - a) / panels);
}

// Double the panel count until two successive estimates agree to `tol`
// (relative) or the node budget is exhausted; returns the last estimate.
inline Complex integrate_adaptive(const std::function<Complex(double)>& f, double a, double b,
                                  int order, double tol, int max_nodes) {
  Complex prev = integrate_panels(f, a, b, 1, order);
  for (int panels = 2; panels * order <= max_nodes; panels *= 2) {
    const Complex cur = integrate_panels(f, a, b, panels, order);
    if (std::abs(cur - prev) <= tol * (1.0 + std::abs(cur))) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace itw
