#include "repkern/planar_kernels.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "repkern/quadrature.hpp"

namespace repkern {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

double ftc_reproduce(const std::function<double(double)>& f,
                     const std::function<double(double)>& fprime,
                     const std::function<double(double)>& phi,
                     const std::function<double(double)>& phiprime, double a, double x) {
  if (std::abs(phi(a)) > 1e-12 || std::abs(phi(x) - 1.0) > 1e-12)
    throw std::invalid_argument("ftc_reproduce: weight must satisfy phi(a)=0, phi(x)=1");
  const QuadRule rule = gauss_legendre(64, a, x);
  double total = 0.0;
  for (size_t q = 0; q < rule.x.size(); ++q) {
    const double t = rule.x[q];
    total += (f(t) * phiprime(t) + fprime(t) * phi(t)) * rule.w[q];
  }
  return total;
}

cd stokes_residual(const PlanarContour& c, const std::function<cd(cd)>& alpha,
                   const std::function<cd(cd)>& dbar_alpha) {
  std::vector<cd> boundary(c.N);
  for (int k = 0; k < c.N; ++k) boundary[k] = alpha(c.gamma[k]) * c.dgamma[k];
  const cd line = trapezoid_integrate(c, boundary);
  // dzbar ^ dz = 2i dA
  const cd area = cd(0.0, 2.0) * area_integrate(c, dbar_alpha);
  return line - area;
}

cd cauchy_reproduce(const PlanarContour& c, const std::vector<cd>& f_samples, cd z) {
  if (static_cast<int>(f_samples.size()) != c.N)
    throw std::invalid_argument("cauchy_reproduce: sample count differs from node count");
  std::vector<cd> integrand(c.N);
  for (int k = 0; k < c.N; ++k)
    integrand[k] = f_samples[k] * c.dgamma[k] / (c.gamma[k] - z);
  return trapezoid_integrate(c, integrand) / cd(0.0, kTwoPi);
}

cd cauchy_pompeiu(const PlanarContour& c, const std::function<cd(cd)>& f,
                  const std::function<cd(cd)>& dbar_f, cd z) {
  std::vector<cd> samples(c.N);
  for (int k = 0; k < c.N; ++k) samples[k] = f(c.gamma[k]);
  const cd boundary = cauchy_reproduce(c, samples, z);
  // (1/2*pi*i) * dzbar ^ dz = (1/pi) dA applied to dbar_f/(zeta - z); the
  // singularity-centered star chart integrates the 1/(zeta-z) pole exactly.
  const cd area =
      area_integrate(c, [&](cd zeta) { return dbar_f(zeta) / (zeta - z); }, z) / M_PI;
  return boundary - area;
}

cd bergman_disc(cd z, cd zeta) {
  if (std::abs(z) >= 1.0 || std::abs(zeta) >= 1.0)
    throw std::domain_error("bergman_disc: arguments must lie inside the unit disc");
  const cd d = 1.0 - z * std::conj(zeta);
  return 1.0 / (M_PI * d * d);
}

cd szego_disc(cd z, cd zeta) {
  if (std::abs(z) >= 1.0 || std::abs(zeta) > 1.0 + 1e-14)
    throw std::domain_error("szego_disc: need |z| < 1 and |zeta| <= 1");
  const cd d = 1.0 - z * std::conj(zeta);
  if (std::abs(d) < 1e-14)
    throw std::domain_error("szego_disc: coincident boundary singularity");
  return 1.0 / (kTwoPi * d);
}

namespace {

// Inner product <z^p, z^q> under the chosen measure, assembled once per basis
// build; area products use the star chart, arclength products the trapezoid rule.
Eigen::MatrixXcd monomial_gram(const PlanarContour& c, int N, HoloSpace space) {
  Eigen::MatrixXcd G(N, N);
  if (space == HoloSpace::H2) {
    for (int p = 0; p < N; ++p)
      for (int q = 0; q < N; ++q) {
        cd s = 0.0;
        for (int k = 0; k < c.N; ++k)
          s += std::pow(c.gamma[k], p) * std::conj(std::pow(c.gamma[k], q)) * c.weight(k);
        G(p, q) = s;
      }
    return G;
  }
  const int nr = 64;
  const QuadRule rs = gauss_legendre(nr, 0.0, 1.0);
  G.setZero();
  for (int k = 0; k < c.N; ++k) {
    const cd ray = c.gamma[k] - c.interior_point;
    const double jac_t = std::imag(std::conj(ray) * c.dgamma[k]);
    for (int q = 0; q < nr; ++q) {
      const cd zeta = c.interior_point + rs.x[q] * ray;
      const double wq = rs.x[q] * jac_t * rs.w[q] * c.two_pi_over_n();
      // accumulate all pairs from the powers at this quadrature point
      std::vector<cd> pw(N);
      cd acc = 1.0;
      for (int p = 0; p < N; ++p) {
        pw[p] = acc;
        acc *= zeta;
      }
      for (int p = 0; p < N; ++p)
        for (int r = 0; r < N; ++r) G(p, r) += pw[p] * std::conj(pw[r]) * wq;
    }
  }
  return G;
}

}  // namespace

cd HoloBasis::eval(int j, cd z) const {
  cd acc = 0.0, zp = 1.0;
  for (size_t i = 0; i < C[j].size(); ++i) {
    acc += C[j][i] * zp;
    zp *= z;
  }
  return acc;
}

HoloBasis build_onb(const PlanarContour& c, int N, HoloSpace space) {
  if (N < 1 || N > 60)
    throw std::domain_error("build_onb: basis size must be in [1, 60] (monomial conditioning)");
  const Eigen::MatrixXcd G = monomial_gram(c, N, space);
  {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(G);
    const auto& sv = svd.singularValues();
    if (sv(0) / sv(N - 1) > 1e12)
      throw std::domain_error("build_onb: Gram matrix numerically singular; reduce N");
  }
  // Modified Gram-Schmidt in coefficient space with one re-orthogonalization
  // pass; inner products via the monomial Gram matrix.
  auto inner = [&](const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) -> cd {
    return (v.adjoint() * (G * u))(0);  // <u, v> = v^H G u
  };
  std::vector<Eigen::VectorXcd> basis;
  for (int j = 0; j < N; ++j) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(N);
    v(j) = 1.0;
    for (int pass = 0; pass < 2; ++pass)
      for (int i = 0; i < j; ++i) v -= inner(v, basis[i]) * basis[i];
    const double nrm = std::sqrt(std::real(inner(v, v)));
    if (!(nrm > 0.0))
      throw std::domain_error("build_onb: Gram-Schmidt breakdown; reduce N");
    v /= nrm;
    // canonical form: positive real leading (degree-j) coefficient
    const cd lead = v(j);
    v *= std::abs(lead) / lead;
    basis.push_back(v);
  }
  HoloBasis out;
  out.contour = c;
  out.space = space;
  out.N = N;
  out.C.resize(N);
  for (int j = 0; j < N; ++j) {
    out.C[j].assign(j + 1, cd{});
    for (int i = 0; i <= j; ++i) out.C[j][i] = basis[j](i);
  }
  return out;
}

cd kernel_sum(const HoloBasis& basis, cd z, cd zeta) {
  cd acc = 0.0;
  for (int j = 0; j < basis.N; ++j) acc += basis.eval(j, z) * std::conj(basis.eval(j, zeta));
  return acc;
}

}  // namespace repkern
