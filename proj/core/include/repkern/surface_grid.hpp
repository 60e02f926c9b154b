#pragma once

#include <vector>

#include "repkern/domain.hpp"
#include "repkern/jets.hpp"

namespace repkern {

// Quadrature node on a boundary hypersurface in C^2. The position is stored
// as a jet: value plus the three partials d zeta / d u_i with respect to the
// unit-cube patch parameters u in [0,1]^3, so that (2n-1)-form pullbacks are
// 3x3 determinant expansions of jet derivatives with no finite differencing.
struct SurfaceNode {
  std::array<Jet3, 2> zeta;
  double w;  // product quadrature weight in du_1 du_2 du_3
};

// Tensor-product grid on the boundary of a C^2 domain: one patch
// u in [0,1]^3 -> (theta, phi_1, phi_2) with Gauss-Legendre nodes in u_1 and
// periodic trapezoid nodes in u_2, u_3 (res nodes per direction).
struct HypersurfaceGrid {
  DefiningDomain domain;
  int res = 0;
  double orientation = -1.0;  // patch orientation sign, pinned so that the
                              // Leray integral over the sphere is +n*W(n)
  double tol = 0.0;           // calibrated quadrature tolerance for this res
  std::vector<SurfaceNode> nodes;
};

// Builds the grid; every node satisfies |rho(zeta)| < 1e-10.
// tol is a calibrated error bound for kernel reproduction at interior points
// bounded away from the boundary: 10^-(res/8 + 2), validated against closed
// forms in the test suite.
HypersurfaceGrid make_surface_grid(const DefiningDomain& dom, int res);

// Per-node pullback of the Bochner-Martinelli (2n-1)-form
//   eta(conj(zeta) - conj(z)) ^ omega(zeta) / |zeta - z|^{2n}
// to the parameter cube (orientation sign included). Multiplied by the node
// weights and summed this integrates to n*W(n) = 4*pi^2 for interior z.
// Throws std::domain_error if z is within 1e-6 of a node (caller must refine).
std::vector<cd> pullback_density(const HypersurfaceGrid& grid, const CnPoint& z);

// Pullback of eta(w) ^ omega(zeta) at one node for an arbitrary Leray section
// jet w: the n = 2 determinant expansion
//   w_1 * det(dw_2, dzeta_1, dzeta_2) - w_2 * det(dw_1, dzeta_1, dzeta_2)
// times the grid orientation sign.
cd eta_omega_pullback(const std::array<Jet3, 2>& w, const SurfaceNode& node,
                      double orientation);

// n * W(n) for the normalization 1/(n*W(n)): 2*pi*i for n = 1 is handled by
// the planar code; this is the n = 2 value 4*pi^2.
double n_wn_c2();

}  // namespace repkern
