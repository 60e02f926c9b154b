#pragma once

#include <complex>
#include <vector>

namespace repkern {

using cd = std::complex<double>;

// Spectral fractional operators on the periodic model domain [0, 2*pi):
// frac_diff multiplies Fourier mode k != 0 by |k|^lambda, frac_int by
// |k|^{-mu}; the mean mode is untouched by both. Orders must lie in (0, 1)
// (std::domain_error otherwise). Composition frac_int(l, frac_diff(l, f)) = f
// exactly in exact arithmetic.
std::vector<cd> frac_diff(double lambda, const std::vector<cd>& f);
std::vector<cd> frac_int(double mu, const std::vector<cd>& f);

}  // namespace repkern
