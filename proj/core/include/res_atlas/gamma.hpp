#pragma once

#include <complex>

namespace res_atlas {

// Lanczos (g = 607/128, 15 terms) with reflection for Re z < 1/2.
std::complex<double> complex_gamma(std::complex<double> z);
std::complex<double> log_gamma(std::complex<double> z);
// 1/Gamma, entire; exactly 0 at nonpositive integers.
std::complex<double> reciprocal_gamma(std::complex<double> z);

// sin(pi z), cos(pi z), cot(pi z) after reducing Re z mod 1.
std::complex<double> sin_pi(std::complex<double> z);
std::complex<double> cos_pi(std::complex<double> z);
std::complex<double> cot_pi(std::complex<double> z);

// Nonpositive integer test used for pole detection.
bool is_nonpositive_integer(std::complex<double> z);

}  // namespace res_atlas
