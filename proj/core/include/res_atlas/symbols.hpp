#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

namespace res_atlas {

// Weyl-invariant entire spectral symbol sigma(x1, x2).
struct SpectralSymbol {
    std::string name;
    std::function<std::complex<double>(std::complex<double>, std::complex<double>)> eval;

    std::complex<double> operator()(std::complex<double> x1, std::complex<double> x2) const {
        return eval(x1, x2);
    }
};

SpectralSymbol symbol_one();
SpectralSymbol symbol_gauss();  // exp(-(x1^2 + x2^2)/25)
SpectralSymbol symbol_poly();   // 1 + x1^2 x2^2
std::vector<SpectralSymbol> builtin_symbols();
SpectralSymbol symbol_by_name(const std::string& name);  // throws std::invalid_argument

// a * s1 + s2
SpectralSymbol linear_combination(std::complex<double> a, const SpectralSymbol& s1, const SpectralSymbol& s2);

}  // namespace res_atlas
