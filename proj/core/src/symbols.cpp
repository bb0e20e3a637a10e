#include "res_atlas/symbols.hpp"

#include <stdexcept>

namespace res_atlas {

using cd = std::complex<double>;

SpectralSymbol symbol_one() {
    return {"one", [](cd, cd) { return cd(1.0); }};
}

SpectralSymbol symbol_gauss() {
    return {"gauss", [](cd x1, cd x2) { return std::exp(-(x1 * x1 + x2 * x2) / 25.0); }};
}

SpectralSymbol symbol_poly() {
    return {"poly", [](cd x1, cd x2) { return 1.0 + x1 * x1 * x2 * x2; }};
}

std::vector<SpectralSymbol> builtin_symbols() { return {symbol_one(), symbol_gauss(), symbol_poly()}; }

SpectralSymbol symbol_by_name(const std::string& name) {
    for (auto& s : builtin_symbols())
        if (s.name == name) return s;
    throw std::invalid_argument("unknown symbol: " + name);
}

SpectralSymbol linear_combination(cd a, const SpectralSymbol& s1, const SpectralSymbol& s2) {
    auto f1 = s1.eval;
    auto f2 = s2.eval;
    return {"combo", [a, f1, f2](cd x1, cd x2) { return a * f1(x1, x2) + f2(x1, x2); }};
}

}  // namespace res_atlas
