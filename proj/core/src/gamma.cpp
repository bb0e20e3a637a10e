#include "res_atlas/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "res_atlas/errors.hpp"

namespace res_atlas {

namespace {

using cd = std::complex<double>;

constexpr double kG = 607.0 / 128.0;
constexpr std::array<double, 15> kCoef = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4,  .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,   -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4,  .36899182659531622704e-5,
};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * std::numbers::pi);

// log Gamma for Re z >= 1/2
cd lanczos_log(cd z) {
    z -= 1.0;
    cd x = kCoef[0];
    for (std::size_t i = 1; i < kCoef.size(); ++i) x += kCoef[i] / (z + static_cast<double>(i));
    cd t = z + kG + 0.5;
    return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(x);
}

}  // namespace

bool is_nonpositive_integer(cd z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

cd sin_pi(cd z) {
    double n = std::round(z.real());
    cd y(z.real() - n, z.imag());
    cd s = std::sin(std::numbers::pi * y);
    return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

cd cos_pi(cd z) {
    double n = std::round(z.real());
    cd y(z.real() - n, z.imag());
    cd c = std::cos(std::numbers::pi * y);
    return std::fmod(n, 2.0) == 0.0 ? c : -c;
}

cd cot_pi(cd z) {
    cd y(z.real() - std::round(z.real()), z.imag());
    const double pi = std::numbers::pi;
    if (std::abs(y.imag()) < 20.0) {
        cd s = std::sin(pi * y);
        if (s == 0.0) throw std::domain_error("cot pole");
        return std::cos(pi * y) / s;
    }
    // exponentially small correction to -+i
    if (y.imag() > 0) {
        cd e = std::exp(cd(0, 2) * pi * y);
        return cd(0, -1) * (1.0 + e) / (1.0 - e);
    }
    cd e = std::exp(cd(0, -2) * pi * y);
    return cd(0, 1) * (1.0 + e) / (1.0 - e);
}

cd log_gamma(cd z) {
    if (is_nonpositive_integer(z)) throw std::domain_error("log_gamma pole");
    if (z.real() < 0.5) return std::log(std::numbers::pi) - std::log(sin_pi(z)) - lanczos_log(1.0 - z);
    return lanczos_log(z);
}

cd complex_gamma(cd z) {
    if (is_nonpositive_integer(z))
        throw PoleError(PoleError::Kind::Gamma, Root::Beta1, static_cast<long>(-z.real()),
                        "gamma pole at " + std::to_string(z.real()));
    if (z.real() < 0.5) return std::numbers::pi / (sin_pi(z) * std::exp(lanczos_log(1.0 - z)));
    return std::exp(lanczos_log(z));
}

cd reciprocal_gamma(cd z) {
    if (is_nonpositive_integer(z)) return 0.0;
    if (z.real() < 0.5) return sin_pi(z) * std::exp(lanczos_log(1.0 - z)) / std::numbers::pi;
    return std::exp(-lanczos_log(z));
}

}  // namespace res_atlas
