#include "repkern/contour.hpp"

#include <cmath>
#include <stdexcept>

#include "repkern/quadrature.hpp"

namespace repkern {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

void validate_closure(const std::function<cd(double)>& g) {
  if (std::abs(g(0.0) - g(kTwoPi)) > 1e-12)
    throw std::invalid_argument("contour: parametrization is not closed");
}

void validate_nodes(const PlanarContour& c) {
  if (c.N < 4 || c.N % 2 != 0)
    throw std::invalid_argument("contour: node count must be even and >= 4");
  for (int k = 0; k < c.N; ++k)
    if (std::abs(c.dgamma[k]) < 1e-14)
      throw std::invalid_argument("contour: parametrization degenerates at a node");
}

PlanarContour sample(const std::function<cd(double)>& g,
                     const std::function<cd(double)>& dg, int N, cd interior) {
  PlanarContour c;
  c.N = N;
  c.t.resize(N);
  c.gamma.resize(N);
  c.dgamma.resize(N);
  c.interior_point = interior;
  for (int k = 0; k < N; ++k) {
    c.t[k] = kTwoPi * k / N;
    c.gamma[k] = g(c.t[k]);
    c.dgamma[k] = dg(c.t[k]);
  }
  validate_closure(g);
  validate_nodes(c);
  return c;
}

}  // namespace

double PlanarContour::two_pi_over_n() const { return kTwoPi / N; }

PlanarContour make_circle(int N, double radius) {
  using namespace std::complex_literals;
  if (radius <= 0.0) throw std::invalid_argument("circle: radius must be positive");
  auto g = [radius](double t) { return radius * std::exp(1i * t); };
  auto dg = [radius](double t) { return radius * 1i * std::exp(1i * t); };
  return sample(g, dg, N, cd{0.0, 0.0});
}

PlanarContour make_arclength_contour(const std::function<cd(double)>& g,
                                     const std::function<cd(double)>& dg, int N,
                                     cd interior_point) {
  using namespace std::complex_literals;
  validate_closure(g);
  // Dense Fourier expansion of the speed |gamma'| on a fine grid; the
  // cumulative arclength s(t) then has an explicit smooth expression that
  // Newton inverts to machine precision per target node.
  const int nf = 8192;
  const int mmax = 1024;
  std::vector<double> speed(nf);
  for (int j = 0; j < nf; ++j) speed[j] = std::abs(dg(kTwoPi * j / nf));
  std::vector<cd> coef(2 * mmax + 1);
  for (int m = -mmax; m <= mmax; ++m) {
    cd s = 0.0;
    for (int j = 0; j < nf; ++j)
      s += speed[j] * std::exp(-1i * (double(m) * kTwoPi * j / nf));
    coef[m + mmax] = s / double(nf);
  }
  const double c0 = coef[mmax].real();
  const double L = kTwoPi * c0;
  auto arclen = [&](double t) {
    double s = c0 * t;
    for (int m = 1; m <= mmax; ++m) {
      const cd cm = coef[m + mmax];
      if (std::abs(cm) < 1e-18) continue;
      s += 2.0 * std::real(cm * (std::exp(1i * (m * t)) - 1.0) / cd(0.0, double(m)));
    }
    return s;
  };
  // Invert s(t_j) = j*L/N; the resampled contour has |gamma'| = L/(2*pi).
  PlanarContour c;
  c.N = N;
  c.t.resize(N);
  c.gamma.resize(N);
  c.dgamma.resize(N);
  c.interior_point = interior_point;
  for (int j = 0; j < N; ++j) {
    const double target = L * j / N;
    double t = kTwoPi * j / N;
    for (int it = 0; it < 60; ++it) {
      const double step = (arclen(t) - target) / std::abs(dg(t));
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    const cd d = dg(t);
    c.t[j] = kTwoPi * j / N;
    c.gamma[j] = g(t);
    c.dgamma[j] = (d / std::abs(d)) * (L / kTwoPi);
  }
  validate_nodes(c);
  return c;
}

PlanarContour make_ellipse(int N, double semi_major, double semi_minor) {
  using namespace std::complex_literals;
  if (semi_major <= 0 || semi_minor <= 0)
    throw std::invalid_argument("ellipse: semi-axes must be positive");
  auto g = [=](double t) { return cd(semi_major * std::cos(t), semi_minor * std::sin(t)); };
  auto dg = [=](double t) { return cd(-semi_major * std::sin(t), semi_minor * std::cos(t)); };
  return make_arclength_contour(g, dg, N, cd{0.0, 0.0});
}

PlanarContour make_perturbed_circle(int N, double a, int k) {
  using namespace std::complex_literals;
  if (std::abs(a) >= 1.0)
    throw std::invalid_argument("perturbed circle: need |a| < 1 for a regular curve");
  auto g = [=](double t) { return (1.0 + a * std::cos(k * t)) * std::exp(1i * t); };
  auto dg = [=](double t) {
    return (-a * double(k) * std::sin(k * t)) * std::exp(1i * t) +
           (1.0 + a * std::cos(k * t)) * 1i * std::exp(1i * t);
  };
  return make_arclength_contour(g, dg, N, cd{0.0, 0.0});
}

cd trapezoid_integrate(const PlanarContour& c, const std::vector<cd>& integrand) {
  if (static_cast<int>(integrand.size()) != c.N)
    throw std::invalid_argument("trapezoid_integrate: sample count differs from node count");
  cd s = 0.0;
  for (int k = 0; k < c.N; ++k) s += integrand[k];
  return s * c.two_pi_over_n();
}

cd winding_number(const PlanarContour& c, cd z) {
  std::vector<cd> integrand(c.N);
  for (int k = 0; k < c.N; ++k) integrand[k] = c.dgamma[k] / (c.gamma[k] - z);
  return trapezoid_integrate(c, integrand) / cd(0.0, kTwoPi);
}

cd area_integrate(const PlanarContour& c, const std::function<cd(cd)>& f,
                  std::optional<cd> singularity, int radial_nodes) {
  const cd center = singularity.value_or(c.interior_point);
  // Star-shaped check: the chart Jacobian s * Im(conj(gamma - center) gamma')
  // must be positive along the boundary.
  for (int k = 0; k < c.N; ++k) {
    const double jac = std::imag(std::conj(c.gamma[k] - center) * c.dgamma[k]);
    if (jac <= 0.0)
      throw std::domain_error("area_integrate: domain is not star-shaped about the chart center");
  }
  const QuadRule rs = gauss_legendre(radial_nodes, 0.0, 1.0);
  cd total = 0.0;
  for (int k = 0; k < c.N; ++k) {
    const cd ray = c.gamma[k] - center;
    const double jac_t = std::imag(std::conj(ray) * c.dgamma[k]);
    for (int q = 0; q < radial_nodes; ++q) {
      const double s = rs.x[q];
      total += f(center + s * ray) * (s * jac_t) * rs.w[q] * c.two_pi_over_n();
    }
  }
  return total;
}

std::vector<cd> pullback_density(const PlanarContour& c, cd z) {
  std::vector<cd> density(c.N);
  for (int k = 0; k < c.N; ++k) {
    if (std::abs(c.gamma[k] - z) < 1e-6)
      throw std::domain_error("pullback_density: evaluation point too close to a node");
    density[k] = c.dgamma[k] / (c.gamma[k] - z);
  }
  return density;
}

}  // namespace repkern
