#include "res_atlas/plancherel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "res_atlas/gamma.hpp"

namespace res_atlas {

namespace {

double distance_to_integer(cplx z) {
    return std::abs(z - cplx(std::round(z.real()), 0.0));
}

// delta*cot(pi*delta), regular at 0
cplx delta_cot(cplx d) {
    const double pi = std::numbers::pi;
    if (std::abs(d) < 1e-4) {
        cplx t = pi * d;
        cplx t2 = t * t;
        return (1.0 - t2 / 3.0 - t2 * t2 / 45.0) / pi;
    }
    return d * cot_pi(d);
}

}  // namespace

SpectralPoint reference_lambda(const SpaceDescriptor& space) {
    auto r = rho_data(space);
    // rho + (0.3, 0.7) puts the middle roots of odd-p BDI on a cotangent pole
    double dy = space.m.m_m % 2 == 1 ? 0.45 : 0.7;
    return {r.rho_b1.to_double() + 0.3, r.rho_b2.to_double() + dy};
}

Plancherel::Plancherel(SpaceDescriptor space) : space_(space), rho_(rho_data(space)) {
    SpectralPoint rho{rho_.rho_b1.to_double(), rho_.rho_b2.to_double()};
    cplx prod = 1.0;
    for (Root r : kPositiveRoots) prod *= c_beta(r, rho);
    c0_ = 1.0 / prod;
    c_cal_ = 1.0;
    auto ref = reference_lambda(space_);
    auto parts = density_factored(ref);
    c_cal_ = density_direct(ref) / (parts.Pi * parts.P * parts.Q);
}

int Plancherel::multiplicity(Root r) const {
    return (r == Root::Beta1 || r == Root::Beta2) ? space_.m.m_l : space_.m.m_m;
}

int Plancherel::half_multiplicity(Root r) const {
    return (r == Root::Beta1 || r == Root::Beta2) ? space_.m.m_s : 0;
}

Rational Plancherel::rho_tilde(Root r) const {
    return (r == Root::Beta1 || r == Root::Beta2) ? rho_.rho_tilde_long : rho_.rho_tilde_mid;
}

cplx Plancherel::c_beta(Root r, const SpectralPoint& lambda) const {
    cplx a = lambda.at(r);
    if (is_nonpositive_integer(2.0 * a))
        throw PoleError(PoleError::Kind::Gamma, r, static_cast<long>(-2.0 * a.real()),
                        std::string("c_beta pole: Gamma(2 lambda) at ") + root_name(r));
    double mu = half_multiplicity(r) / 4.0 + 0.5;
    double rt = rho_tilde(r).to_double();
    return std::pow(2.0, -2.0 * a) * complex_gamma(2.0 * a) * reciprocal_gamma(a + mu) *
           reciprocal_gamma(a + rt);
}

cplx Plancherel::c_hc(const SpectralPoint& lambda) const {
    cplx prod = c0_;
    for (Root r : kPositiveRoots) prod *= c_beta(r, lambda);
    return prod;
}

// 1/(c_beta(a) c_beta(-a)). For Re a >= 0 the gammas at -a are reflected:
// Gamma(mu-a) Gamma(rt-a) / Gamma(-2a) = pi T(a) Gamma(1+2a) / (Gamma(1-mu+a) Gamma(1-rt+a))
// with T a cot, tan or constant depending on the parity classes of mu and rt.
cplx Plancherel::inv_c_pair(Root r, cplx a) const {
    if (a.real() < 0.0) a = -a;
    if (a == 0.0) return 0.0;
    const double mu = half_multiplicity(r) / 4.0 + 0.5;
    const double rt = rho_tilde(r).to_double();
    auto is_int = [](double c) { return c == std::floor(c); };
    // sin(pi(c - a)) = sign(c) * (sin(pi a) for integer c, cos(pi a) otherwise)
    auto sign = [&](double c) {
        if (is_int(c)) return std::fmod(c, 2.0) == 0.0 ? -1.0 : 1.0;
        return std::fmod(c - 0.5, 2.0) == 0.0 ? 1.0 : -1.0;
    };
    const double s = sign(mu) * sign(rt);
    const bool imu = is_int(mu), irt = is_int(rt);

    auto smooth = [&](cplx x) {
        return complex_gamma(x + mu) * complex_gamma(x + rt) * reciprocal_gamma(2.0 * x) *
               complex_gamma(1.0 + 2.0 * x) * reciprocal_gamma(1.0 - mu + x) * reciprocal_gamma(1.0 - rt + x);
    };
    auto trig = [&](cplx x) -> cplx {
        if (imu && irt) return -2.0 * cot_pi(x) / s;
        if (!imu && !irt) return 2.0 * cot_pi(x + 0.5) / s;  // -2 tan(pi x)/s
        return -2.0 / s;
    };
    std::optional<double> pole_at;
    if (imu && irt && a.imag() == 0.0 && is_int(a.real())) pole_at = a.real();
    if (!imu && !irt && a.imag() == 0.0 && is_int(a.real() + 0.5)) pole_at = a.real();
    if (!pole_at) return std::numbers::pi * trig(a) * smooth(a);

    int zeros = 0;
    for (cplx g : {2.0 * a, 1.0 - mu + a, 1.0 - rt + a})
        if (is_nonpositive_integer(g)) ++zeros;
    if (zeros >= 2) return 0.0;
    if (zeros == 0)
        throw PoleError(PoleError::Kind::Density, r, static_cast<long>(std::lround(*pole_at - rt)),
                        std::string("density pole along ") + root_name(r));
    const double d = 1e-6;
    auto f = [&](cplx x) { return std::numbers::pi * trig(x) * smooth(x); };
    return 0.5 * (f(a + d) + f(a - d));
}

cplx Plancherel::density_direct(const SpectralPoint& lambda) const {
    cplx v = 1.0 / (c0_ * c0_);
    for (Root r : kPositiveRoots) v *= inv_c_pair(r, lambda.at(r));
    return v;
}

cplx Plancherel::P_root(Root r, cplx a) const {
    cplx v = 1.0;
    int mh = half_multiplicity(r);
    for (int k = 0; k < mh / 2; ++k) v *= a - (mh / 4.0 - 0.5) + static_cast<double>(k);
    Rational rt = rho_tilde(r);
    int top = (Rational(2) * rt - Rational(2)).num();  // 2 rho_tilde is an integer
    double rtd = rt.to_double();
    for (int k = 0; k <= top; ++k) v *= a - (rtd - 1.0) + static_cast<double>(k);
    return v;
}

PlancherelParts Plancherel::density_factored(const SpectralPoint& lambda) const {
    PlancherelParts out;
    out.Pi = 1.0;
    out.P = 1.0;
    out.Q = 1.0;
    for (Root r : kPositiveRoots) {
        cplx a = lambda.at(r);
        out.Pi *= a;
        out.P *= P_root(r, a);
        if (multiplicity(r) % 2 == 1) {
            cplx y = a - rho_tilde(r).to_double();
            if (y.imag() == 0.0 && y.real() == std::round(y.real()))
                throw PoleError(PoleError::Kind::Cotangent, r, static_cast<long>(y.real()),
                                std::string("cotangent pole along ") + root_name(r));
            out.Q *= cot_pi(y);
            ++out.cot_factors;
        }
    }
    out.product = c_cal_ * out.Pi * out.P * out.Q;
    return out;
}

cplx Plancherel::P1(cplx a) const { return P_root(Root::Beta1, a); }

cplx Plancherel::rank_one_density_direct(cplx a) const { return inv_c_pair(Root::Beta1, a); }

std::optional<int> Plancherel::rank_one_pole_index(cplx x) const {
    cplx a = cplx(0, 1) * x / b();
    double rt = rho_.rho_tilde_long.to_double();
    for (double sgn : {1.0, -1.0}) {
        cplx y = sgn * a - rt;
        double n = std::round(y.real());
        if (n >= 0 && std::abs(y - n) <= 1e-13 * std::max(1.0, std::abs(a))) return static_cast<int>(n);
    }
    return std::nullopt;
}

cplx Plancherel::p1(cplx x) const { return P1(cplx(0, 1) * x / b()); }

cplx Plancherel::q1(cplx x) const {
    if (auto l = rank_one_pole_index(x))
        throw PoleError(PoleError::Kind::RankOne, Root::Beta1, *l, "q1 pole at +-iL_" + std::to_string(*l));
    cplx a = cplx(0, 1) * x / b();
    return cot_pi(rho_.rho_tilde_long.to_double() - a);
}

cplx Plancherel::p1q1(cplx x) const {
    if (auto l = rank_one_pole_index(x))
        throw PoleError(PoleError::Kind::RankOne, Root::Beta1, *l, "p1 q1 pole at +-iL_" + std::to_string(*l));
    cplx a = cplx(0, 1) * x / b();
    double rt = rho_.rho_tilde_long.to_double();
    cplx y = rt - a;
    double n = std::round(y.real());
    cplx d = y - n;
    // near an interior lattice point the cotangent pole meets a zero of P1
    if (std::abs(d) < 0.25 && std::abs(rt - n) < rt) {
        double a0 = rt - n;
        int mh = space_.m.m_s;
        cplx v = 1.0;
        bool dropped = false;
        auto factor = [&](double c) {
            if (!dropped && c == a0) {
                dropped = true;
                return;
            }
            v *= a - c;
        };
        for (int k = 0; k < mh / 2; ++k) factor((mh / 4.0 - 0.5) - k);
        int top = static_cast<int>(std::lround(2 * rt - 2));
        for (int k = 0; k <= top; ++k) factor((rt - 1.0) - k);
        if (dropped) return v * (-1.0) * delta_cot(d);  // (a - a0) = -d
    }
    return P1(a) * cot_pi(y);
}

RankOneFactors Plancherel::rank_one_factors(cplx x) const {
    return {p1(x), q1(x), p1q1(x)};
}

cplx Plancherel::vartheta0(cplx x1, cplx x2) const {
    int mm = space_.m.m_m;
    cplx v = x2 * x2 - x1 * x1;
    for (int k = 1; k <= mm - 1; ++k) {
        cplx t = x2 - mm / 2.0 + static_cast<double>(k);
        v *= t * t - x1 * x1;
    }
    return v;
}

Rational Plancherel::vartheta0(const Rational& x1, const Rational& x2) const {
    int mm = space_.m.m_m;
    Rational v = x2 * x2 - x1 * x1;
    for (int k = 1; k <= mm - 1; ++k) {
        Rational t = x2 - Rational(mm, 2) + Rational(k);
        v *= t * t - x1 * x1;
    }
    return v;
}

SpectralPoint random_generic_lambda(const Plancherel& pl, std::uint64_t& state, double margin) {
    std::mt19937_64 rng(state);
    std::uniform_real_distribution<double> re(-4.0, 4.0), im(-1.5, 1.5);
    for (;;) {
        SpectralPoint l{{re(rng), im(rng)}, {re(rng), im(rng)}};
        bool ok = true;
        for (Root r : kPositiveRoots) {
            cplx a = l.at(r);
            double mu = pl.half_multiplicity(r) / 4.0 + 0.5;
            double rt = pl.rho_tilde(r).to_double();
            for (cplx g : {a - rt, a + mu, -a + mu, a + rt, -a + rt, 2.0 * a})
                if (distance_to_integer(g) < margin) ok = false;
        }
        if (ok) {
            state = rng();
            return l;
        }
    }
}

FactorizationReport factorization_identity_check(const Plancherel& pl, std::size_t samples,
                                                 std::uint64_t seed) {
    if (pl.space().continuation_excluded)
        throw ExcludedSpaceError("factorization check needs an even-p BDI or another family");
    auto product_form = [&](const SpectralPoint& l) {
        cplx x1 = l.x1, x2 = l.x2;
        cplx pi0 = x2 * x2 - x1 * x1;
        cplx p0 = 1.0;
        double rt = pl.rho_tilde(Root::MidPlus).to_double();
        int top = 2 * pl.space().m.m_m / 2 - 2;
        for (Root r : {Root::MidMinus, Root::MidPlus})
            for (int k = 0; k <= top; ++k) p0 *= l.at(r) - (rt - 1.0) + static_cast<double>(k);
        return pi0 * p0 * pl.rank_one_density_direct(x1) * pl.rank_one_density_direct(x2);
    };
    FactorizationReport rep;
    auto ref = reference_lambda(pl.space());
    rep.calibration = pl.density_direct(ref) / product_form(ref);
    std::uint64_t state = seed;
    for (std::size_t i = 0; i < samples; ++i) {
        auto l = random_generic_lambda(pl, state);
        cplx d = pl.density_direct(l);
        cplx f = rep.calibration * product_form(l);
        rep.max_rel_err = std::max(rep.max_rel_err, std::abs(d - f) / std::abs(d));
        ++rep.samples;
    }
    return rep;
}

}  // namespace res_atlas
