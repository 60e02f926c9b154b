#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <functional>
#include <vector>

#include "repkern/contour.hpp"

namespace repkern {

// Dense Nystrom operator on the boundary L^2 space with inner product
// <f, g> = sum_k f_k * conj(g_k) * w_k, w_k = |gamma'(t_k)| * 2*pi/N.
struct BoundaryOperator {
  int N = 0;
  Eigen::MatrixXcd M;
  Eigen::VectorXd w;             // arclength weights
  bool projection_flag = false;  // set for operators expected to satisfy
                                 // M^2 = M, M* = M at discretization tolerance
  double projection_tol = 0.0;

  // Weighted adjoint W^{-1} M^H W; (M*)* = M up to rounding.
  BoundaryOperator adjoint() const;
};

// Weighted operator 2-norm ||W^{1/2} M W^{-1/2}||_2 (largest singular value).
double op_norm2(const BoundaryOperator& op);

// Singular values of the weighted operator, descending.
std::vector<double> weighted_singular_values(const BoundaryOperator& op);

// Nystrom matrix of the Cauchy transform
//   H f(gamma(t_j)) = (1/2*pi*i) PV integral of f(zeta) T(zeta)/(zeta - gamma(t_j)) ds,
// T = gamma'/|gamma'|. Off-diagonal entries are the plain Nystrom samples
//   (1/2*pi*i) * T_k/(gamma_k - gamma_j) * w_k
// plus the alternating-cotangent correction (1/(i*N)) * (-1)^{j-k}/(2*tan((t_j-t_k)/2))
// that makes the periodic principal-value rule spectrally accurate (the plain
// rule alone damps mode e^{imt} by exactly m/N and cannot fix holomorphic
// traces at reference accuracy). High modes |m| > N/4 are then projected out
// (Dirichlet band filter) to de-alias the adjoint, and the diagonal is set so
// that H 1 = 1 holds exactly.
// Requires even N; throws on coincident nodes.
BoundaryOperator cauchy_operator(const PlanarContour& c);

// Kerzman-Stein operator A = H* - H (weighted adjoint); skew: A* = -A.
BoundaryOperator ks_operator(const BoundaryOperator& H);

// Szego projection by direct dense solve: S = H (I - A)^{-1}.
// Throws std::runtime_error if cond(I - A) > 1e8 (inconsistent discretization;
// skew A keeps the true condition number near 1).
BoundaryOperator szego_projection_direct(const BoundaryOperator& H,
                                         const BoundaryOperator& A);

// Truncated Neumann series S_J = sum_{j=0..J} H A^j.
// Refuses (std::runtime_error) when the power-iteration estimate of ||A|| is >= 1.
BoundaryOperator szego_projection_neumann(const BoundaryOperator& H,
                                          const BoundaryOperator& A, int J);

// Power-iteration estimate of the weighted 2-norm (50 iterations, tol 1e-6).
double spectral_norm_estimate(const BoundaryOperator& op);

// Residual norms of the four projection identities, in this order:
//   ||H S - S||, ||S H* - S||, ||S H - H||, ||H* S - H*||   (weighted 2-norms).
std::array<double, 4> operator_identities_report(const BoundaryOperator& H,
                                                 const BoundaryOperator& S);

// Szego kernel extraction: applies S to the reproducing boundary density
//   k_a(zeta) = conj((1/2*pi*i) T(zeta)/(zeta - a))
// (<f, k_a> = f(a) for holomorphic traces f) giving boundary samples of
// S(., a); the interior evaluator is the Cauchy integral of those samples.
struct SzegoExtract {
  std::vector<cd> boundary;          // S(gamma(t_k), a)
  std::function<cd(cd)> interior;    // z -> S(z, a)
};
SzegoExtract szego_kernel_extract(const BoundaryOperator& S, const PlanarContour& c,
                                  cd a);

// Singular values of the weighted A, descending: numerical witness of
// compactness (super-algebraic decay for smooth contours).
std::vector<double> compactness_profile(const BoundaryOperator& A);

}  // namespace repkern
