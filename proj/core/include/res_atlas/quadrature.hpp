#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace res_atlas {

using CFunc = std::function<std::complex<double>(std::complex<double>)>;

std::complex<double> pairwise_sum(std::span<const std::complex<double>> v);

struct CircleSum {
    std::complex<double> integral;  // closed contour integral of f dw
    double magnitude = 0.0;         // trapezoid sum of |f| |dw|
};

// Trapezoidal rule on `nodes` equally spaced points, counterclockwise.
CircleSum circle_integral(const CFunc& f, std::complex<double> center, double radius, int nodes,
                          double phase = 0.0);

struct ResidueResult {
    std::complex<double> value;
    int nodes = 0;
    double magnitude = 0.0;  // radius * max|f| on the circle, the roundoff scale of `value`
};

// (1/2 pi i) times the circle integral, doubling nodes from `nodes` until two
// successive values agree to 1e-12 relative or `noise` times the magnitude
// (the evaluation noise of f); throws ConvergenceError otherwise.
ResidueResult numerical_residue(const CFunc& f, std::complex<double> center, double radius,
                                int nodes = 64, int max_nodes = 1 << 14, double noise = 1e-14);

}  // namespace res_atlas
