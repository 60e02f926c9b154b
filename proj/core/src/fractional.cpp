#include "repkern/fractional.hpp"

#include <fftw3.h>

#include <cmath>
#include <stdexcept>

namespace repkern {

namespace {

// Applies mode-k multiplier |k|^p (k != 0; mean untouched) in Fourier space.
std::vector<cd> apply_multiplier(double p, const std::vector<cd>& f) {
  const int n = static_cast<int>(f.size());
  if (n < 2) throw std::invalid_argument("fractional operator: need at least 2 samples");
  std::vector<cd> spec(n), out(n);
  {
    fftw_plan plan = fftw_plan_dft_1d(
        n, reinterpret_cast<fftw_complex*>(const_cast<cd*>(f.data())),
        reinterpret_cast<fftw_complex*>(spec.data()), FFTW_FORWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }
  for (int j = 1; j < n; ++j) {
    const int k = j <= n / 2 ? j : j - n;  // signed frequency
    spec[j] *= std::pow(std::abs(double(k)), p);
  }
  {
    fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(spec.data()),
                                      reinterpret_cast<fftw_complex*>(out.data()),
                                      FFTW_BACKWARD, FFTW_ESTIMATE);
    fftw_execute(plan);
    fftw_destroy_plan(plan);
  }
  for (auto& v : out) v /= double(n);
  return out;
}

}  // namespace

std::vector<cd> frac_diff(double lambda, const std::vector<cd>& f) {
  if (lambda <= 0.0 || lambda >= 1.0)
    throw std::domain_error("frac_diff: order must lie in (0, 1)");
  return apply_multiplier(lambda, f);
}

std::vector<cd> frac_int(double mu, const std::vector<cd>& f) {
  if (mu <= 0.0 || mu >= 1.0)
    throw std::domain_error("frac_int: order must lie in (0, 1)");
  return apply_multiplier(-mu, f);
}

}  // namespace repkern
