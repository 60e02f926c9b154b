#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

namespace repkern {

using cd = std::complex<double>;
using CnPoint = std::array<cd, 2>;

enum class DomainKind { ball, egg };

// Domain in C^2 given by a defining function rho (rho < 0 inside, 0 on the
// boundary). Carries the analytic data used by the strongly-pseudoconvex and
// finite-type estimates:
//   gamma  - lower bound of the complex Hessian sum_jk rho_{z_j zbar_k} w_j wbar_k
//            on the validity collar (for the egg, the cap |z_2| >= 1/2 away from
//            the Levi-degenerate circle z_2 = 0, where the estimate is used);
//   kappa  - gradient floor |grad rho| >= kappa on the collar;
//   K      - bound on the Hessian and its variation over the collar;
//   delta  - collar width |rho| < delta;
//   m      - finite type order (ball: 1, egg: 2).
struct DefiningDomain {
  DomainKind kind = DomainKind::ball;
  int n = 2;
  double radius = 1.0;  // ball only; egg is the unit egg
  double gamma = 1.0;
  double kappa = 1.0;
  double K = 1.0;
  double delta = 0.1;
  int m = 1;

  double rho(const CnPoint& z) const;
  // Wirtinger gradient (d rho / d z_1, d rho / d z_2).
  std::array<cd, 2> drho(const CnPoint& z) const;
  // Holomorphic Hessian d^2 rho / (d z_j d z_k).
  std::array<std::array<cd, 2>, 2> holo_hessian(const CnPoint& z) const;
  // Mixed Hessian d^2 rho / (d z_j d zbar_k); Hermitian.
  std::array<std::array<cd, 2>, 2> mixed_hessian(const CnPoint& z) const;

  std::string name() const { return kind == DomainKind::ball ? "ball" : "egg"; }
};

DefiningDomain make_ball(double radius = 1.0);
DefiningDomain make_egg();

// Orthonormal basis of the complex tangent space at boundary point P:
// n-1 vectors tau with sum_j drho_j(P) tau_j = 0, canonical phase (first
// component of significant modulus made positive real).
// Throws std::domain_error if P is not on the boundary (|rho| >= 1e-10) or the
// gradient is degenerate (|grad rho| < kappa/2).
std::vector<CnPoint> complex_tangent_basis(const DefiningDomain& dom, const CnPoint& P);

}  // namespace repkern
