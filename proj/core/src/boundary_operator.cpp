#include "repkern/boundary_operator.hpp"

#include <cmath>
#include <stdexcept>

#include "repkern/planar_kernels.hpp"

namespace repkern {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

Eigen::MatrixXcd weighted_similarity(const BoundaryOperator& op) {
  // W^{1/2} M W^{-1/2}: the weighted L^2 geometry as a plain Euclidean one.
  Eigen::VectorXd ws = op.w.array().sqrt();
  return ws.asDiagonal() * op.M * ws.cwiseInverse().asDiagonal();
}

}  // namespace

BoundaryOperator BoundaryOperator::adjoint() const {
  BoundaryOperator out = *this;
  out.projection_flag = false;
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) out.M(j, k) = std::conj(M(k, j)) * w(k) / w(j);
  return out;
}

double op_norm2(const BoundaryOperator& op) {
  // divide-and-conquer SVD: the two-sided Jacobi alternative costs seconds
  // already at N = 256 while only the top singular value is needed
  return Eigen::BDCSVD<Eigen::MatrixXcd>(weighted_similarity(op)).singularValues()(0);
}

std::vector<double> weighted_singular_values(const BoundaryOperator& op) {
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(weighted_similarity(op));
  const auto& sv = svd.singularValues();
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

BoundaryOperator cauchy_operator(const PlanarContour& c) {
  const int N = c.N;
  if (N % 2 != 0) throw std::invalid_argument("cauchy_operator: N must be even");
  BoundaryOperator H;
  H.N = N;
  H.w.resize(N);
  for (int k = 0; k < N; ++k) H.w(k) = c.weight(k);
  H.M.setZero(N, N);
  const cd inv2pii = 1.0 / cd(0.0, kTwoPi);
  for (int j = 0; j < N; ++j) {
    for (int k = 0; k < N; ++k) {
      if (j == k) continue;
      const cd diff = c.gamma[k] - c.gamma[j];
      if (std::abs(diff) < 1e-14)
        throw std::invalid_argument("cauchy_operator: coincident nodes");
      const cd T = c.dgamma[k] / std::abs(c.dgamma[k]);
      // plain Nystrom sample of the PV kernel ...
      cd entry = inv2pii * T / diff * H.w(k);
      // ... plus the alternating-cotangent completion of the periodic PV rule:
      // restores the m/N spectral droop of the plain rule (exact on band-limited
      // data), diagonal term zero.
      const double dt = c.t[j] - c.t[k];
      const double sgn = ((j - k) % 2 == 0) ? 1.0 : -1.0;
      entry += cd(0.0, -1.0 / N) * (0.5 * sgn / std::tan(0.5 * dt));
      H.M(j, k) = entry;
    }
  }
  auto fix_diagonal = [&]() {
    for (int j = 0; j < N; ++j) {
      cd row = 0.0;
      for (int k = 0; k < N; ++k)
        if (k != j) row += H.M(j, k);
      H.M(j, j) = 1.0 - row;
    }
  };
  fix_diagonal();
  // Dirichlet band filter at M = N/4: removes the Nyquist shoulder where the
  // cotangent completion is no longer exact and de-aliases the adjoint; the
  // constant mode lies in-band so H 1 = 1 survives the sandwich.
  const int M = N / 4;
  Eigen::MatrixXd P(N, N);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) {
      double s = 1.0;
      for (int m = 1; m <= M; ++m) s += 2.0 * std::cos(kTwoPi * m * (j - k) / N);
      P(j, k) = s / N;
    }
  H.M = P * H.M * P;
  fix_diagonal();
  return H;
}

BoundaryOperator ks_operator(const BoundaryOperator& H) {
  BoundaryOperator A = H.adjoint();
  A.M -= H.M;
  A.projection_flag = false;
  return A;
}

double spectral_norm_estimate(const BoundaryOperator& op) {
  const Eigen::MatrixXcd B = weighted_similarity(op);
  const int N = op.N;
  // deterministic start vector
  Eigen::VectorXcd v(N);
  unsigned long long state = 88172645463325252ULL;
  for (int i = 0; i < N; ++i) {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    v(i) = cd(double(state >> 11) / 9007199254740992.0 - 0.5,
              double((state * 2862933555777941757ULL + 3037000493ULL) >> 11) /
                      9007199254740992.0 -
                  0.5);
  }
  v.normalize();
  double sigma = 0.0;
  for (int it = 0; it < 50; ++it) {
    Eigen::VectorXcd u = B * v;
    Eigen::VectorXcd w2 = B.adjoint() * u;
    const double nrm = w2.norm();
    if (nrm == 0.0) return 0.0;
    const double next = std::sqrt(nrm);
    v = w2 / nrm;
    if (std::abs(next - sigma) < 1e-6 * std::max(1.0, next)) return next;
    sigma = next;
  }
  return sigma;
}

BoundaryOperator szego_projection_direct(const BoundaryOperator& H,
                                         const BoundaryOperator& A) {
  const int N = H.N;
  const Eigen::MatrixXcd ImA = Eigen::MatrixXcd::Identity(N, N) - A.M;
  {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(ImA);
    const auto& sv = svd.singularValues();
    if (sv(0) / sv(N - 1) > 1e8)
      throw std::runtime_error("szego_projection_direct: I - A ill conditioned");
  }
  BoundaryOperator S = H;
  // S = H (I - A)^{-1}: solve (I - A)^T S^T = H^T (plain transpose).
  S.M = ImA.transpose().partialPivLu().solve(H.M.transpose()).transpose();
  // residuals of the projection laws, recorded as the construction tolerance
  BoundaryOperator S2 = S, Sd = S.adjoint();
  S2.M = S.M * S.M - S.M;
  Sd.M -= S.M;
  S.projection_flag = true;
  S.projection_tol = std::max(op_norm2(S2), op_norm2(Sd));
  return S;
}

BoundaryOperator szego_projection_neumann(const BoundaryOperator& H,
                                          const BoundaryOperator& A, int J) {
  if (J < 0) throw std::invalid_argument("szego_projection_neumann: J must be >= 0");
  if (spectral_norm_estimate(A) >= 1.0)
    throw std::runtime_error(
        "szego_projection_neumann: ||A|| >= 1, series divergent; use the direct solve");
  const int N = H.N;
  // Horner: R = I + A (I + A (... )) with J factors, then S_J = H R.
  Eigen::MatrixXcd R = Eigen::MatrixXcd::Identity(N, N);
  for (int j = 0; j < J; ++j) R = Eigen::MatrixXcd::Identity(N, N) + A.M * R;
  BoundaryOperator S = H;
  S.M = H.M * R;
  S.projection_flag = false;
  return S;
}

std::array<double, 4> operator_identities_report(const BoundaryOperator& H,
                                                 const BoundaryOperator& S) {
  const BoundaryOperator Hs = H.adjoint();
  BoundaryOperator r1 = S, r2 = S, r3 = S, r4 = S;
  r1.M = H.M * S.M - S.M;
  r2.M = S.M * Hs.M - S.M;
  r3.M = S.M * H.M - H.M;
  r4.M = Hs.M * S.M - Hs.M;
  return {op_norm2(r1), op_norm2(r2), op_norm2(r3), op_norm2(r4)};
}

SzegoExtract szego_kernel_extract(const BoundaryOperator& S, const PlanarContour& c,
                                  cd a) {
  if (std::abs(winding_number(c, a) - 1.0) > 1e-6)
    throw std::domain_error("szego_kernel_extract: point is not interior");
  cd centroid = 0.0;
  for (int k = 0; k < c.N; ++k) centroid += c.gamma[k];
  centroid /= double(c.N);
  double radius_max = 0.0;
  for (int k = 0; k < c.N; ++k)
    radius_max = std::max(radius_max, std::abs(c.gamma[k] - centroid));
  const double guard = 1e-3 * 2.0 * radius_max;
  for (int k = 0; k < c.N; ++k)
    if (std::abs(c.gamma[k] - a) < guard)
      throw std::domain_error("szego_kernel_extract: point violates the guard distance");
  const int N = c.N;
  Eigen::VectorXcd ka(N);
  for (int k = 0; k < N; ++k) {
    const cd T = c.dgamma[k] / std::abs(c.dgamma[k]);
    ka(k) = std::conj(T / (c.gamma[k] - a) / cd(0.0, kTwoPi));
  }
  const Eigen::VectorXcd Ska = S.M * ka;
  SzegoExtract out;
  out.boundary.assign(Ska.data(), Ska.data() + N);
  const std::vector<cd> samples = out.boundary;
  out.interior = [c, samples](cd z) { return cauchy_reproduce(c, samples, z); };
  return out;
}

std::vector<double> compactness_profile(const BoundaryOperator& A) {
  return weighted_singular_values(A);
}

}  // namespace repkern
