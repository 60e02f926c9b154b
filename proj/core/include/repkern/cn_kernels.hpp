#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "repkern/domain.hpp"
#include "repkern/surface_grid.hpp"

namespace repkern {

using CnFunction = std::function<cd(cd, cd)>;
// dbar f = (df/dzbar_1, df/dzbar_2)
using CnDbar = std::function<std::array<cd, 2>(cd, cd)>;

// Cauchy-Fantappie weight: per node and interior point z, the Leray section
// w(z, zeta) as a jet in the chart parameters. Every constructed weight
// satisfies the normalization sum_j w_j (zeta_j - z_j) = 1, asserted at each
// node during integration (1e-10).
struct CFWeight {
  std::string name;
  std::function<std::array<Jet3, 2>(const SurfaceNode&, const CnPoint&)> section;
};

// Bochner-Martinelli weight w_j = (conj(zeta_j) - conj(z_j)) / |zeta - z|^2.
CFWeight bm_weight();
// Unit-ball Leray weight w_j = conj(zeta_j) / (1 - <z, zeta>).
CFWeight ball_leray_weight();
// Henkin weight w = P/Phi with P_i = -drho/dzeta_i(zeta) and
// Phi(z, zeta) = rho(zeta) + sum_j drho_j(zeta) (z_j - zeta_j); convex domains.
CFWeight henkin_weight(const DefiningDomain& dom);

// Generic Cauchy-Fantappie reproduction
//   (1/(n W(n))) * integral of f(zeta) eta(w) ^ omega(zeta)
// over the grid; equals f(z) for holomorphic f, independent of the weight.
// Throws std::runtime_error if the weight normalization fails at any node.
cd cf_reproduce(const HypersurfaceGrid& grid, const CFWeight& weight,
                const CnFunction& f, const CnPoint& z);

// Bochner-Martinelli surface reproduction (cf_reproduce with bm_weight).
cd bm_reproduce(const HypersurfaceGrid& grid, const CnFunction& f, const CnPoint& z);

// Radial volume chart resolution for the solid term of the full
// Bochner-Martinelli formula.
struct VolumeChart {
  int n_theta = 24;
  int n_phi = 24;
  int n_radial = 16;  // Gauss-Legendre in the graded variable r = R * s^2
};

// Full Bochner-Martinelli representation for f in C^1(closure):
//   surface term - volume term, where the volume term is
//   (1/pi^2) * integral over (direction xi, radius r) of
//       sum_j dbar_j f(z + r xi) conj(xi_j)   dr dsigma(xi),
// the exact radial cancellation of the |zeta - z|^{-4} singularity; the
// radial mesh is graded with exponent 2. Equals f(z) for any C^1 f.
cd bm_full(const HypersurfaceGrid& grid, const VolumeChart& chart, const CnFunction& f,
           const CnDbar& dbar_f, const CnPoint& z);

// Henkin reproduction on a convex domain via the factored kernel
// eta(P)(zeta) ^ omega(zeta) / Phi(z, zeta)^2, which agrees pointwise with the
// eta(P/Phi) pullback (degree-n homogeneity of eta( . ) ^ omega in C^2).
cd henkin_reproduce(const DefiningDomain& dom, const HypersurfaceGrid& grid,
                    const CnFunction& f, const CnPoint& z);

// Per-node kernel densities as functions of the free variable z; used for the
// holomorphy contrast (the Henkin density is holomorphic in z, the
// Bochner-Martinelli density is not).
cd henkin_density_at(const DefiningDomain& dom, const SurfaceNode& node,
                     double orientation, const CnPoint& z);
cd bm_density_at(const SurfaceNode& node, double orientation, const CnPoint& z);

// Hefer decomposition data of the Henkin kernel on a convex domain:
// P_i(zeta) = -drho/dzeta_i(zeta), with sum_i (zeta_i - z_i) P_i = Phi(z, zeta)
// on the boundary.
std::array<cd, 2> hefer_linear(const DefiningDomain& dom, const CnPoint& z,
                               const CnPoint& zeta);

// Henkin support function Phi(z, P) = rho(P) + sum_j drho_j(P) (z_j - P_j).
// For convex domains Re Phi < 0 at interior z (strict); a vanishing |Phi| at
// an interior point is reported as std::domain_error (domain not convex).
cd henkin_phi_convex(const DefiningDomain& dom, const CnPoint& z, const CnPoint& P);

// Levi polynomial at boundary point P:
//   L_P(z) = sum_j drho_j(P)(z_j - P_j)
//          + 1/2 sum_jk d2rho/dz_j dz_k (P) (z_j - P_j)(z_k - P_k).
cd levi_polynomial(const DefiningDomain& dom, const CnPoint& P, const CnPoint& z);

// Worst-case separation margin
//   min over samples z of [ rho(z) - (gamma/2)|z - P|^2 - 2 Re L_P(z) ]
// over a deterministic sample cloud in the ball |z - P| < lambda,
// lambda = gamma/(2(K+1)). Nonnegative (up to rounding) on strongly
// pseudoconvex data; on the ball the margin equals |z - P|^2 (1 - gamma/2).
double levi_separation_check(const DefiningDomain& dom, const CnPoint& P,
                             int samples, unsigned long long seed = 20240801ULL);

// g(z, zeta) = rho(zeta) + sum_j drho_j(z) (z_j - zeta_j)
// (gradient evaluated at the free point z).
cd g_function(const DefiningDomain& dom, const CnPoint& z, const CnPoint& zeta);

struct FiniteTypeReport {
  double c62 = 0.0;  // min |g(z,zeta)| / (dist(z) + |zeta - z|^{2m}) over sampled pairs
  double c63 = 0.0;  // min rho(zeta + t tau) / t^{2m} over boundary points, tangents, t
  CnPoint c62_z{}, c62_zeta{};  // minimizing pair
  CnPoint c63_zeta{};           // minimizing fiber base point
  double c63_t = 0.0;
  // Largest per-fiber vanishing order observed (log-log slope of
  // rho(zeta + t tau) at small t). If it exceeds 2m the declared type is too
  // small: the t^{2m}-normalized ratio tends to 0 along that fiber.
  double worst_fiber_order = 0.0;
  bool type_failure = false;
  std::string message;
};

// Empirical lower-bound constants for the finite-type estimates.
// c63 sweeps a deterministic boundary grid (phases included - the minimizing
// fiber on the egg lies at a nonzero phase pairing), tangents from
// complex_tangent_basis, radii t in (0, 0.3]. c62 samples seeded
// (interior z, boundary zeta) pairs; dist(z) is the radial gap to the
// boundary along the ray of z, an upper bound for the true boundary distance,
// so the reported c62 is a valid lower bound for the sampled minimum.
// Contract: both positive for a correctly declared type m; a declared m
// smaller than the true type sets type_failure.
FiniteTypeReport finite_type_bounds(const DefiningDomain& dom, int m, int samples,
                                    unsigned long long seed = 20240801ULL);

}  // namespace repkern
