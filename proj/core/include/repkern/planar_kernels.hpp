#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "repkern/contour.hpp"

namespace repkern {

// Leibniz/fundamental-theorem reproduction on [a, x]: returns
// integral(f * phi') + integral(f' * phi) for a C^1 weight with phi(a) = 0,
// phi(x) = 1; equals f(x). Throws std::invalid_argument if the boundary
// conditions are violated beyond 1e-12.
double ftc_reproduce(const std::function<double(double)>& f,
                     const std::function<double(double)>& fprime,
                     const std::function<double(double)>& phi,
                     const std::function<double(double)>& phiprime, double a, double x);

// Stokes/area identity residual for a 1-form alpha dz:
//   contour integral of alpha dz  -  area integral of (d alpha / d zbar) dzbar ^ dz
// with dzbar ^ dz = 2i dA. Magnitude is at quadrature level for C^1 alpha.
cd stokes_residual(const PlanarContour& c, const std::function<cd(cd)>& alpha,
                   const std::function<cd(cd)>& dbar_alpha);

// (1/2*pi*i) * contour integral of f(zeta)/(zeta - z) d zeta for a holomorphic
// boundary trace f (given as node samples); equals f(z) for interior z and 0
// for exterior z.
cd cauchy_reproduce(const PlanarContour& c, const std::vector<cd>& f_samples, cd z);

// Cauchy-Pompeiu reproduction for f in C^1(closure):
//   (1/2*pi*i) contour integral of f/(zeta - z) d zeta
//   - (1/pi)    area integral of dbar_f(zeta)/(zeta - z) dA
// (the area term uses the singularity-centered star chart). Equals f(z).
cd cauchy_pompeiu(const PlanarContour& c, const std::function<cd(cd)>& f,
                  const std::function<cd(cd)>& dbar_f, cd z);

// Closed-form disc kernels. Throw std::domain_error outside their domain.
// Bergman kernel of the unit disc: 1/(pi*(1 - z*conj(zeta))^2), |z|,|zeta| < 1.
cd bergman_disc(cd z, cd zeta);
// Szego kernel of the unit disc: 1/(2*pi*(1 - z*conj(zeta))), |z| < 1, |zeta| <= 1.
cd szego_disc(cd z, cd zeta);

enum class HoloSpace { A2, H2 };  // Bergman space (area), Hardy space (arclength)

// Orthonormalized monomial basis phi_j(z) = sum_i C[j][i] z^i on the domain
// bounded by a contour, under the area (A2) or arclength (H2) inner product.
struct HoloBasis {
  PlanarContour contour;
  HoloSpace space = HoloSpace::A2;
  int N = 0;
  // Upper-triangular coefficient matrix, positive real diagonal
  // (canonical Gram-Schmidt form): C[j] holds coefficients of phi_j.
  std::vector<std::vector<cd>> C;

  cd eval(int j, cd z) const;
};

// Modified Gram-Schmidt with one re-orthogonalization pass on 1, z, ..., z^{N-1}.
// N capped at 60 (monomial conditioning); throws std::domain_error beyond the
// cap or when the Gram matrix is numerically singular.
HoloBasis build_onb(const PlanarContour& c, int N, HoloSpace space);

// Truncated canonical kernel sum_{j < N} phi_j(z) * conj(phi_j(zeta)).
cd kernel_sum(const HoloBasis& basis, cd z, cd zeta);

}  // namespace repkern
