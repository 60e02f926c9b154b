#include "repkern/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace repkern {

QuadRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  QuadRule rule;
  rule.x.resize(n);
  rule.w.resize(n);
  for (int i = 0; i < n; ++i) {
    // Chebyshev initial guess, Newton on the Legendre recurrence.
    double xi = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double p0 = 1.0, p1 = 0.0, dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2 * j + 1) * xi * p1 - j * p2) / (j + 1);
      }
      dp = n * (xi * p0 - p1) / (xi * xi - 1.0);
      const double dx = p0 / dp;
      xi -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    p0 = 1.0;
    p1 = 0.0;
    for (int j = 0; j < n; ++j) {
      const double p2 = p1;
      p1 = p0;
      p0 = ((2 * j + 1) * xi * p1 - j * p2) / (j + 1);
    }
    dp = n * (xi * p0 - p1) / (xi * xi - 1.0);
    rule.x[i] = a + (b - a) * 0.5 * (1.0 - xi);
    rule.w[i] = (b - a) / ((1.0 - xi * xi) * dp * dp);
  }
  return rule;
}

}  // namespace repkern
