#pragma once

#include <vector>

namespace repkern {

// Nodes and weights of a quadrature rule on a real interval.
struct QuadRule {
  std::vector<double> x;
  std::vector<double> w;
};

// n-point Gauss-Legendre rule on [a, b]. Nodes computed by Newton iteration on
// the Legendre recurrence; deterministic, accurate to machine precision.
QuadRule gauss_legendre(int n, double a, double b);

}  // namespace repkern
