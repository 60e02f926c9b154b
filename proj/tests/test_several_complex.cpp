#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "repkern/cn_kernels.hpp"

using namespace repkern;
using namespace std::complex_literals;

namespace {

const std::vector<CnFunction> kMonomials = {
    [](cd, cd) { return cd(1.0); },
    [](cd a, cd) { return a; },
    [](cd, cd b) { return b; },
    [](cd a, cd) { return a * a; },
    [](cd a, cd b) { return a * b; },
    [](cd, cd b) { return b * b; },
    [](cd a, cd b) { return a * a * b; },
};

cd mono_val(std::size_t i, const CnPoint& z) { return kMonomials[i](z[0], z[1]); }

}  // namespace

TEST_CASE("Bochner-Martinelli reproduces holomorphic monomials on ball and egg") {
  for (const auto& dom : {make_ball(), make_egg()}) {
    const HypersurfaceGrid g = make_surface_grid(dom, 32);
    const CnPoint z{cd(0.3, 0.1), cd(-0.2, 0.25)};
    for (std::size_t i = 0; i < kMonomials.size(); ++i)
      CHECK(std::abs(bm_reproduce(g, kMonomials[i], z) - mono_val(i, z)) < g.tol);
  }
}

TEST_CASE("surface integral of holomorphic data vanishes at exterior points") {
  const HypersurfaceGrid g = make_surface_grid(make_ball(), 32);
  const CnPoint outside{cd(1.4, 0.2), cd(0.5, 0.0)};
  CHECK(std::abs(bm_reproduce(g, kMonomials[4], outside)) < g.tol);
}

TEST_CASE("Cauchy-Fantappie weight independence on the ball") {
  const DefiningDomain ball = make_ball();
  const HypersurfaceGrid g = make_surface_grid(ball, 32);
  const CFWeight wb = bm_weight();
  const CFWeight wl = ball_leray_weight();
  const CFWeight wh = henkin_weight(ball);
  for (const CnPoint& z : {CnPoint{cd(0.3, 0.0), cd(0.2, 0.0)},
                           CnPoint{cd(0.1, -0.3), cd(0.35, 0.15)}}) {
    for (std::size_t i = 0; i < kMonomials.size(); ++i) {
      const cd bm = cf_reproduce(g, wb, kMonomials[i], z);
      const cd lr = cf_reproduce(g, wl, kMonomials[i], z);
      const cd hk = cf_reproduce(g, wh, kMonomials[i], z);
      CHECK(std::abs(bm - lr) < 3.0 * g.tol);
      CHECK(std::abs(bm - hk) < 3.0 * g.tol);
    }
    // the ball Leray section and the Hefer section of rho agree up to the
    // normalizing denominator, so the factored Henkin formula matches too
    CHECK(std::abs(henkin_reproduce(ball, g, kMonomials[3], z) -
                   cf_reproduce(g, wh, kMonomials[3], z)) < 1e-12);
  }
}

TEST_CASE("a broken Leray section trips the per-node normalization guard") {
  const HypersurfaceGrid g = make_surface_grid(make_ball(), 8);
  CFWeight broken;
  broken.name = "broken";
  broken.section = [](const SurfaceNode&, const CnPoint&) {
    return std::array<Jet3, 2>{Jet3(1.0), Jet3(0.0)};
  };
  CHECK_THROWS_AS(
      cf_reproduce(g, broken, kMonomials[0], CnPoint{cd(0.1), cd(0.0)}),
      std::runtime_error);
}

TEST_CASE("Henkin reproduction on the convex egg") {
  const DefiningDomain egg = make_egg();
  const HypersurfaceGrid g = make_surface_grid(egg, 32);
  const CnPoint z{cd(0.2, 0.0), cd(0.3, 0.0)};
  CHECK(std::abs(henkin_reproduce(egg, g, kMonomials[4], z) - (z[0] * z[1])) < 1e-10);
  const CnPoint z2{cd(0.1, 0.2), cd(-0.4, 0.1)};
  CHECK(std::abs(henkin_reproduce(egg, g, kMonomials[6], z2) - mono_val(6, z2)) < g.tol);
}

TEST_CASE("holomorphy contrast: Henkin density is dbar_z-closed, BM is not") {
  const DefiningDomain ball = make_ball();
  const HypersurfaceGrid g = make_surface_grid(ball, 16);
  const CnPoint z{cd(0.3, 0.1), cd(-0.1, 0.2)};
  const double h = 1e-5;
  double henkin_res = 0.0, bm_res = 0.0;
  for (std::size_t k = 0; k < g.nodes.size(); k += g.nodes.size() / 200) {
    const auto& node = g.nodes[k];
    auto dbar1 = [&](auto&& density) {
      // d/d conj(z_1) = (d/dx + i d/dy)/2 in the z_1 slot
      CnPoint zp = z, zm = z, zi = z, zmi = z;
      zp[0] += h;
      zm[0] -= h;
      zi[0] += 1i * h;
      zmi[0] -= 1i * h;
      return ((density(zp) - density(zm)) / (2 * h) +
              1i * (density(zi) - density(zmi)) / (2 * h)) /
             2.0;
    };
    henkin_res = std::max(
        henkin_res, std::abs(dbar1([&](const CnPoint& p) {
          return henkin_density_at(ball, node, g.orientation, p);
        })));
    bm_res = std::max(bm_res, std::abs(dbar1([&](const CnPoint& p) {
                        return bm_density_at(node, g.orientation, p);
                      })));
  }
  CHECK(henkin_res < 1e-6);
  CHECK(bm_res > 1e-2);
}

TEST_CASE("full Bochner-Martinelli formula handles non-holomorphic data") {
  const HypersurfaceGrid g = make_surface_grid(make_ball(), 32);
  const VolumeChart chart;

  // f = conj(zeta_1): surface term alone gives 2 z_1 - bar z_1 sized garbage;
  // the corrected formula recovers f
  const CnPoint z{cd(0.2, 0.0), cd(0.1, 0.0)};
  const CnFunction f1 = [](cd a, cd) { return std::conj(a); };
  const CnDbar db1 = [](cd, cd) { return std::array<cd, 2>{cd(1.0), cd(0.0)}; };
  CHECK(std::abs(bm_full(g, chart, f1, db1, z) - std::conj(z[0])) < 1e-10);

  // f = |zeta_1|^2
  const CnPoint z2{cd(0.4, 0.0), cd(0.0, 0.0)};
  const CnFunction f2 = [](cd a, cd) { return a * std::conj(a); };
  const CnDbar db2 = [](cd a, cd) { return std::array<cd, 2>{a, cd(0.0)}; };
  CHECK(std::abs(bm_full(g, chart, f2, db2, z2) - 0.16) < 1e-10);

  // holomorphic data: the volume term contributes nothing
  const CnDbar db0 = [](cd, cd) { return std::array<cd, 2>{cd(0.0), cd(0.0)}; };
  CHECK(std::abs(bm_full(g, chart, kMonomials[4], db0, z) - mono_val(4, z)) < g.tol);
}

TEST_CASE("Hefer decomposition: the division identity and the ball pairing") {
  for (const auto& dom : {make_ball(), make_egg()}) {
    const HypersurfaceGrid g = make_surface_grid(dom, 8);
    const CnPoint z{cd(0.25, 0.1), cd(-0.15, 0.2)};
    for (std::size_t k = 0; k < g.nodes.size(); k += 97) {
      const CnPoint zeta{g.nodes[k].zeta[0].v, g.nodes[k].zeta[1].v};
      const auto P = hefer_linear(dom, z, zeta);
      const cd lhs = (zeta[0] - z[0]) * P[0] + (zeta[1] - z[1]) * P[1];
      const cd phi = henkin_phi_convex(dom, z, zeta);
      CHECK(std::abs(lhs - phi) < 1e-12);
    }
  }
  // on the sphere the support function is the conjugate-reflected g-function
  // shifted by the constant rho(z):  Phi(z,P) + conj(g(z,P)) = |z|^2 - 1,
  // an exact algebraic identity since both expand the same Hermitian pairing
  const DefiningDomain ball = make_ball();
  const HypersurfaceGrid g = make_surface_grid(ball, 8);
  const CnPoint z{cd(0.3, -0.2), cd(0.1, 0.15)};
  for (std::size_t k = 0; k < g.nodes.size(); k += 131) {
    const CnPoint P{g.nodes[k].zeta[0].v, g.nodes[k].zeta[1].v};
    CHECK(std::abs(henkin_phi_convex(ball, z, P) + std::conj(g_function(ball, z, P)) -
                   ball.rho(z)) < 1e-14);
  }
}

TEST_CASE("support function stays in the left half plane at interior points") {
  for (const auto& dom : {make_ball(), make_egg()}) {
    const HypersurfaceGrid g = make_surface_grid(dom, 16);
    const CnPoint z{cd(0.3, 0.1), cd(0.2, -0.25)};
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < g.nodes.size(); k += 53) {
      const CnPoint P{g.nodes[k].zeta[0].v, g.nodes[k].zeta[1].v};
      worst = std::max(worst, henkin_phi_convex(dom, z, P).real());
    }
    CHECK(worst < -1e-3);  //strictly negative, uniformly over the boundary
  }
}

TEST_CASE("Levi polynomial: exact expansion identity on the sphere") {
  const DefiningDomain ball = make_ball();
  const CnPoint P{cd(0.6, 0.0), cd(0.8, 0.0)};
  REQUIRE(std::abs(ball.rho(P)) < 1e-14);
  for (const CnPoint& z : {CnPoint{cd(0.55, 0.1), cd(0.7, -0.05)},
                           CnPoint{cd(0.2, 0.2), cd(0.3, 0.1)}}) {
    const double d2 = std::norm(z[0] - P[0]) + std::norm(z[1] - P[1]);
    // rho(z) = 2 Re L_P(z) + |z - P|^2 exactly (quadratic defining function)
    CHECK(std::abs(ball.rho(z) - 2.0 * std::real(levi_polynomial(ball, P, z)) - d2) <
          1e-14);
  }
}

TEST_CASE("Levi separation margin is nonnegative near strongly pseudoconvex points") {
  const DefiningDomain ball = make_ball();
  const CnPoint Pb{cd(1.0 / std::sqrt(2.0), 0.0), cd(0.0, 1.0 / std::sqrt(2.0))};
  CHECK(levi_separation_check(ball, Pb, 1000) > -1e-10);

  const DefiningDomain egg = make_egg();
  const CnPoint Pe{cd(0.0, 0.0), cd(1.0, 0.0)};  // on the strongly convex cap
  REQUIRE(std::abs(egg.rho(Pe)) < 1e-14);
  CHECK(levi_separation_check(egg, Pe, 1000) > -1e-10);

  CHECK_THROWS_AS(levi_separation_check(ball, CnPoint{cd(0.5), cd(0.0)}, 10),
                  std::domain_error);
}

TEST_CASE("g-function values and the shared null direction") {
  const DefiningDomain egg = make_egg();
  CHECK(std::abs(g_function(egg, {cd(0.9), cd(0.0)}, {cd(1.0), cd(0.0)}) - cd(-0.09)) <
        1e-15);
  // g(z, z) = rho(z)
  const CnPoint z{cd(0.3, 0.2), cd(0.1, -0.4)};
  CHECK(std::abs(g_function(egg, z, z) - egg.rho(z)) < 1e-15);
  // for z = (r, 0) the gradient has no z2 component, so g(z, zeta) reduces to
  // rho(zeta) on the slice zeta_1 = r and vanishes on the whole boundary
  // circle zeta = (r, w), |w|^4 = 1 - r^2, even though |zeta - z| stays
  // bounded away from zero -- the reason the lower bound needs a
  // boundary-distance term and not just a power of the separation
  for (double r : {0.5, 0.9, 0.99}) {
    const double m = std::pow(1.0 - r * r, 0.25);
    for (double alpha : {0.0, 0.7, 2.9}) {
      const cd w = std::polar(m, alpha);
      CHECK(std::abs(g_function(egg, {cd(r), cd(0.0)}, {cd(r), w})) < 1e-14);
      CHECK(std::abs(w) > 0.3);  // the null points are genuinely far from z
    }
  }
}

TEST_CASE("finite-type constants: sphere exactness and egg regression") {
  const FiniteTypeReport ball_rep = finite_type_bounds(make_ball(), 1, 2000);
  CHECK_FALSE(ball_rep.type_failure);
  // on the sphere rho(zeta + t tau) = t^2 exactly for unit tangents
  CHECK(ball_rep.c63 == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(ball_rep.worst_fiber_order == doctest::Approx(2.0).epsilon(1e-3));
  CHECK(ball_rep.c62 > 0.0);

  const FiniteTypeReport egg_rep = finite_type_bounds(make_egg(), 2, 2000);
  CHECK_FALSE(egg_rep.type_failure);
  CHECK(egg_rep.c62 > 0.0);
  // deterministic sweep: the minimizing fiber sits near the degenerate circle
  // at the antipodal phase pairing
  CHECK(egg_rep.c63 == doctest::Approx(0.333364422425).epsilon(1e-7));
  CHECK(egg_rep.worst_fiber_order == doctest::Approx(4.0).epsilon(1e-3));

  CHECK_THROWS_AS(finite_type_bounds(make_ball(), 0, 10), std::invalid_argument);
}

TEST_CASE("declaring too small a type is detected and explained") {
  const FiniteTypeReport rep = finite_type_bounds(make_egg(), 1, 500);
  CHECK(rep.type_failure);
  CHECK_FALSE(rep.message.empty());
  CHECK(rep.worst_fiber_order > 2.5);
}

TEST_CASE("degenerate fiber of the egg: rho((1,0) + t(0,1)) = t^4 to rounding") {
  const DefiningDomain egg = make_egg();
  const CnPoint base{cd(1.0), cd(0.0)};
  const auto tau = complex_tangent_basis(egg, base)[0];
  CHECK(std::abs(tau[0]) < 1e-15);
  CHECK(std::abs(tau[1] - 1.0) < 1e-15);
  for (double t : {0.01, 0.05, 0.1, 0.2, 0.3}) {
    const double val = egg.rho({base[0] + t * tau[0], base[1] + t * tau[1]});
    CHECK(std::abs(val - t * t * t * t) < 1e-10);
  }
}
