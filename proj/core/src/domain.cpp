#include "repkern/domain.hpp"

#include <cmath>
#include <stdexcept>

namespace repkern {

double DefiningDomain::rho(const CnPoint& z) const {
  if (kind == DomainKind::ball)
    return std::norm(z[0]) + std::norm(z[1]) - radius * radius;
  return std::norm(z[0]) + std::norm(z[1]) * std::norm(z[1]) - 1.0;
}

std::array<cd, 2> DefiningDomain::drho(const CnPoint& z) const {
  if (kind == DomainKind::ball) return {std::conj(z[0]), std::conj(z[1])};
  return {std::conj(z[0]), 2.0 * std::norm(z[1]) * std::conj(z[1])};
}

std::array<std::array<cd, 2>, 2> DefiningDomain::holo_hessian(const CnPoint& z) const {
  std::array<std::array<cd, 2>, 2> h{};
  if (kind == DomainKind::egg) h[1][1] = 2.0 * std::conj(z[1]) * std::conj(z[1]);
  return h;
}

std::array<std::array<cd, 2>, 2> DefiningDomain::mixed_hessian(const CnPoint& z) const {
  std::array<std::array<cd, 2>, 2> h{};
  h[0][0] = 1.0;
  h[1][1] = kind == DomainKind::ball ? cd(1.0) : cd(4.0 * std::norm(z[1]));
  return h;
}

DefiningDomain make_ball(double radius) {
  if (radius <= 0.0) throw std::invalid_argument("ball: radius must be positive");
  DefiningDomain d;
  d.kind = DomainKind::ball;
  d.radius = radius;
  d.gamma = 1.0;
  d.kappa = radius;  // |grad rho| = 2|z| ~ 2*radius on the boundary
  d.K = 1.0;
  d.delta = 0.1 * radius * radius;
  d.m = 1;
  return d;
}

DefiningDomain make_egg() {
  DefiningDomain d;
  d.kind = DomainKind::egg;
  d.radius = 1.0;
  // Hessian bound diag(1, 4|z_2|^2): gamma = 1 holds on the cap |z_2| >= 1/2
  // where the strongly-pseudoconvex machinery is exercised; the Levi form
  // degenerates on the circle z_2 = 0 (finite type 2m = 4 there).
  d.gamma = 1.0;
  d.kappa = 1.0;
  d.K = 8.0;
  d.delta = 0.1;
  d.m = 2;
  return d;
}

std::vector<CnPoint> complex_tangent_basis(const DefiningDomain& dom, const CnPoint& P) {
  if (std::abs(dom.rho(P)) >= 1e-10)
    throw std::domain_error("complex_tangent_basis: P is not a boundary point");
  const auto d = dom.drho(P);
  const double grad = 2.0 * std::sqrt(std::norm(d[0]) + std::norm(d[1]));
  if (grad < dom.kappa / 2.0)
    throw std::domain_error("complex_tangent_basis: degenerate gradient at P");
  // n = 2: the complex tangent space is the line spanned by (-d_2, d_1),
  // annihilated by the gradient pairing sum_j d_j tau_j exactly.
  CnPoint tau{-d[1], d[0]};
  const double nrm = std::sqrt(std::norm(tau[0]) + std::norm(tau[1]));
  tau[0] /= nrm;
  tau[1] /= nrm;
  // Canonical phase: first component of significant modulus becomes positive real.
  cd lead = std::abs(tau[0]) > 1e-12 ? tau[0] : tau[1];
  const cd phase = std::conj(lead) / std::abs(lead);
  tau[0] *= phase;
  tau[1] *= phase;
  return {tau};
}

}  // namespace repkern
