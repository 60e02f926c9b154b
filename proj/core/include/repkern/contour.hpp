#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace repkern {

using cd = std::complex<double>;

// Closed C^infinity planar contour sampled at N equispaced parameter nodes
// t_k = 2*pi*k/N. Stores position and derivative samples; the parametrization
// is positively oriented (winding number +1 about interior_point).
struct PlanarContour {
  int N = 0;                   // node count, even
  std::vector<double> t;       // parameter nodes 2*pi*k/N
  std::vector<cd> gamma;       // gamma(t_k)
  std::vector<cd> dgamma;      // gamma'(t_k)
  cd interior_point{0.0, 0.0}; // designated interior point for orientation checks

  // Arclength quadrature weight |gamma'(t_k)| * 2*pi/N at node k.
  double weight(int k) const { return std::abs(dgamma[k]) * two_pi_over_n(); }
  double two_pi_over_n() const;
};

// Factories. Ellipse and perturbed circle are resampled to the arclength
// parametrization (|gamma'| constant), which keeps the discrete L^2 inner
// product proportional to the plain Euclidean one; all boundary-operator
// spectra are then parametrization-intrinsic. The circle is already arclength.
PlanarContour make_circle(int N, double radius = 1.0);
PlanarContour make_ellipse(int N, double semi_major, double semi_minor);
// gamma(t) = (1 + a*cos(k t)) e^{it}
PlanarContour make_perturbed_circle(int N, double a, int k);

// Builds a contour from analytic callables and resamples it to arclength.
// The speed |gamma'| is expanded in a dense Fourier series on a fine grid and
// the cumulative arclength inverted by Newton iteration per node.
PlanarContour make_arclength_contour(const std::function<cd(double)>& g,
                                     const std::function<cd(double)>& dg, int N,
                                     cd interior_point = cd{0.0, 0.0});

// Periodic trapezoid rule in the parameter measure: sum f_k * (2*pi/N).
// Spectrally accurate for smooth periodic integrands. The integrand carries
// any gamma' factor itself (e.g. winding integrand = gamma'/(gamma - z)).
cd trapezoid_integrate(const PlanarContour& c, const std::vector<cd>& integrand);

// (1/2*pi*i) * contour integral of gamma'/(gamma - z); +1 inside, 0 outside.
cd winding_number(const PlanarContour& c, cd z);

// Area integral over the interior of the contour using a star-shaped chart
// zeta(s, t) = center + s*(gamma(t) - center), s in (0,1], with area element
// s * Im(conj(gamma - center) * gamma') ds dt. When `singularity` is set the
// chart is centered there, which cancels 1/|zeta - z| point singularities
// exactly (the Jacobian vanishes linearly at s = 0).
// Throws std::domain_error if the contour is not star-shaped about the center.
cd area_integrate(const PlanarContour& c, const std::function<cd(cd)>& f,
                  std::optional<cd> singularity = std::nullopt, int radial_nodes = 64);

// Per-node values of the n = 1 Leray density gamma'(t_k)/(gamma(t_k) - z),
// i.e. the pullback coefficient of d(zeta)/(zeta - z); trapezoid_integrate of
// it gives 2*pi*i for interior z. Guards: throws if z closer than 1e-6 to a node.
std::vector<cd> pullback_density(const PlanarContour& c, cd z);

}  // namespace repkern
