#include "res_atlas/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "res_atlas/errors.hpp"

namespace res_atlas {

using cd = std::complex<double>;

cd pairwise_sum(std::span<const cd> v) {
    if (v.size() <= 8) {
        cd s = 0.0;
        for (cd x : v) s += x;
        return s;
    }
    std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

CircleSum circle_integral(const CFunc& f, cd center, double radius, int nodes, double phase) {
    std::vector<cd> terms(nodes);
    std::vector<cd> mags(nodes);
    const double h = 2.0 * std::numbers::pi / nodes;
    for (int j = 0; j < nodes; ++j) {
        cd e = std::polar(1.0, phase + h * j);
        cd dw = cd(0, 1) * radius * e;  // dw/dtheta
        cd t = f(center + radius * e) * dw;
        terms[j] = t;
        mags[j] = std::abs(t);
    }
    return {pairwise_sum(terms) * h, pairwise_sum(mags).real() * h};
}

ResidueResult numerical_residue(const CFunc& f, cd center, double radius, int nodes, int max_nodes,
                                double noise) {
    const cd two_pi_i(0, 2.0 * std::numbers::pi);
    auto eval = [&](int n) {
        auto s = circle_integral(f, center, radius, n);
        return std::pair{s.integral / two_pi_i, s.magnitude / (2.0 * std::numbers::pi)};
    };
    auto [prev, mag] = eval(nodes);
    for (int n = 2 * nodes; n <= max_nodes; n *= 2) {
        auto [cur, m2] = eval(n);
        double diff = std::abs(cur - prev);
        if (diff <= 1e-12 * std::abs(cur) + noise * m2) return {cur, n, m2};
        prev = cur;
        mag = m2;
    }
    throw ConvergenceError("numerical_residue: no convergence under node doubling");
}

}  // namespace res_atlas
