#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "res_atlas/continuation.hpp"
#include "res_atlas/verify.hpp"

using namespace res_atlas;

namespace {
const cplx I(0, 1);

Contour make(const char* sel, SpectralSymbol sym = symbol_one()) {
    return Contour(Plancherel(catalog_lookup(sel)), std::move(sym));
}
}  // namespace

TEST(Quadrature, ResidueOfSimplePole) {
    cplx a(0.3, -0.2);
    auto r = numerical_residue([&](cplx z) { return 1.0 / (z - a); }, a, 0.1);
    EXPECT_LT(std::abs(r.value - 1.0), 1e-13);
    auto h = numerical_residue([](cplx z) { return std::exp(z) * z * z; }, a, 0.1);
    EXPECT_LT(std::abs(h.value), 1e-12);
    auto c = circle_integral([](cplx z) { return 1.0 / z; }, 0.0, 1.0, 64);
    EXPECT_LT(std::abs(c.integral - 2.0 * std::numbers::pi * I), 1e-13);
}

TEST(Quadrature, PairwiseSum) {
    std::vector<cplx> v(1000, cplx(0.1, -0.2));
    EXPECT_LT(std::abs(pairwise_sum(v) - cplx(100.0, -200.0)), 1e-11);
}

TEST(Maps, Values) {
    EXPECT_LT(std::abs(cmap(1.0) - 1.0), 1e-15);
    EXPECT_LT(std::abs(smap(1.0)), 1e-15);
    EXPECT_LT(std::abs(cmap(I)), 1e-15);
    EXPECT_LT(std::abs(smap(I) - I), 1e-15);
    EXPECT_THROW(cmap(0.0), std::domain_error);
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int i = 0; i < 100; ++i) {
        cplx w(u(rng), u(rng));
        EXPECT_LT(std::abs(smap(w) - I * cmap(-I * w)), 1e-13 * std::abs(smap(w)));
    }
}

TEST(Integrand, VanishesAtZeroZ) {
    auto ct = make("DIII");
    EXPECT_EQ(ct.vartheta_z(0.0, cplx(0.3, 0.8)), cplx(0.0));
}

TEST(Integrand, SymmetryIdentities) {
    for (const char* sel : {"DIII", "CII:2", "AIII:4"}) {
        for (const auto& sym : builtin_symbols()) {
            auto ct = make(sel, sym);
            std::mt19937_64 rng(17);
            std::uniform_real_distribution<double> uz(-3, 3), ur(0.5, 1.5), ut(0, 2 * std::numbers::pi);
            for (int i = 0; i < 100; ++i) {
                cplx z(uz(rng), uz(rng));
                cplx w = std::polar(ur(rng), ut(rng));
                EXPECT_LT(relative_error(ct.psi_z(-z, w), ct.psi_z(z, w)), 1e-11);
                EXPECT_LT(relative_error(ct.psi_z(z, -w), ct.psi_z(z, w)), 1e-11);
                EXPECT_LT(relative_error(ct.psi_z(z, I * w), ct.psi_z(z, w)), 1e-11);
                EXPECT_LT(relative_error(ct.phi_z(-z, w), ct.phi_z(z, w)), 1e-11);
                EXPECT_LT(relative_error(ct.phi_z(z, -w), -ct.phi_z(z, w)), 1e-11);
                EXPECT_LT(relative_error(ct.phi_z(z, I * w), -I * ct.phi_z(z, w)), 1e-11);
                EXPECT_LT(relative_error(ct.vartheta_z(-z, w), ct.vartheta_z(z, w)), 1e-11);
                EXPECT_LT(relative_error(ct.vartheta_z(z, -w), ct.vartheta_z(z, w)), 1e-11);
                EXPECT_LT(relative_error(ct.vartheta_z(z, I * w), ct.vartheta_z(z, w)), 1e-11);
            }
        }
    }
}

TEST(Symbols, BuiltinsAreWeylInvariant) {
    for (const auto& s : builtin_symbols()) {
        cplx x1(0.3, 0.2), x2(-1.1, 0.4);
        EXPECT_LT(relative_error(s(x1, x2), s(x2, x1)), 1e-15) << s.name;
        EXPECT_LT(relative_error(s(x1, x2), s(-x1, x2)), 1e-15) << s.name;
    }
    EXPECT_THROW(symbol_by_name("nope"), std::invalid_argument);
    auto lc = linear_combination(2.0, symbol_one(), symbol_poly());
    EXPECT_LT(std::abs(lc(1.0, 2.0) - (2.0 + 5.0)), 1e-15);
}

TEST(F, EvenAtAdmissiblePoints) {
    auto ct = make("DIII", symbol_gauss());
    for (cplx z : {cplx(0.4, -2.0), cplx(-1.3, 0.7), cplx(2.0, 3.5)})
        EXPECT_LT(relative_error(ct.F(z).value, ct.F(-z).value), 1e-10);
}

TEST(F, PowerLawNearOrigin) {
    auto ct = make("DIII");
    cplx dir = std::polar(1.0, std::numbers::pi / 4);
    auto order = [&](double t) {
        return std::log(std::abs(ct.F(t * dir).value / ct.F(0.1 * t * dir).value)) / std::log(10.0);
    };
    double k1 = order(0.1), k2 = order(0.01);
    EXPECT_NEAR(k1, k2, 1e-3);
    EXPECT_NEAR(k2, 2.0 * std::round(k2 / 2.0), 1e-5);
    EXPECT_GT(std::abs(ct.F(1e-3 * dir).value), 0.0);
}

TEST(F, NodeDoublingStable) {
    auto ct = make("CII:2");
    cplx z(0.7, -1.2);
    ContourConfig coarse, fine;
    fine.nodes = 4096;
    EXPECT_LT(relative_error(ct.F(z, coarse).value, ct.F(z, fine).value), 1e-10);
    ContourConfig full;
    full.use_symmetry = false;
    EXPECT_LT(relative_error(ct.F(z, coarse).value, ct.F(z, full).value), 1e-10);
}

TEST(F, RemovedRaysRejected) {
    auto ct = make("DIII");
    EXPECT_THROW(ct.F(cplx(0.0, -2.0)), ContourError);
    EXPECT_NO_THROW(ct.F(cplx(0.0, -1.0)));
}

TEST(SSet, EmptyForSmallZ) {
    auto ct = make("DIII");
    EXPECT_TRUE(ct.S_set(cplx(0.2, -0.5), 0.3).empty());
}

TEST(SSet, SegmentRadiusGivesInitialInterval) {
    auto ct = make("DIII");
    for (int n = 0; n <= 3; ++n) {
        cplx z(0.1, -(ct.L(n) + 0.4));
        auto r = segment_radius(ct, n, z);
        ASSERT_TRUE(r.has_value()) << n;
        auto S = ct.S_set(z, *r);
        ASSERT_EQ(static_cast<int>(S.size()), n + 1);
        for (int j = 0; j <= n; ++j) EXPECT_EQ(S[j], j);
    }
}

TEST(Deformation, NoCapturedPoleMeansEqual) {
    auto ct = make("DIII");
    cplx z(0.15, -0.4);
    double r = 0.9;
    ASSERT_TRUE(ct.S_set(z, r).empty());
    EXPECT_LT(relative_error(ct.F_r(z, r).value, ct.F(z).value), 1e-11);
}

TEST(Deformation, IdentityWithCapturedFamily) {
    auto ct = make("DIII", symbol_poly());
    cplx z(0.2, -2.1);
    auto r = segment_radius(ct, 0, z);
    ASSERT_TRUE(r);
    cplx F = ct.F(z).value;
    cplx rhs = ct.F_r(z, *r).value + 2.0 * std::numbers::pi * I * ct.F_r_res(z, *r).value;
    EXPECT_LT(relative_error(F, rhs), 1e-8);
    EXPECT_LT(relative_error(ct.F_r_res(z, *r).value, ct.F_r_res_numerical(z, *r).value), 1e-8);
}

TEST(Deformation, TwoRadiiDifferByOneResidueFamily) {
    auto ct = make("CII:2");
    cplx z(1.0, -2.0);
    double m0 = std::abs(w1_plus(ct.space(), 0, z)), m1 = std::abs(w1_plus(ct.space(), 1, z)),
           m2 = std::abs(w1_plus(ct.space(), 2, z));
    double ra = std::sqrt(m0 * m1), rb = std::sqrt(m1 * m2);
    ASSERT_EQ(ct.S_set(z, ra).size(), 1u);
    ASSERT_EQ(ct.S_set(z, rb).size(), 2u);
    cplx diff = ct.F_r(z, ra).value - ct.F_r(z, rb).value;
    cplx res = 2.0 * std::numbers::pi * I * (ct.F_r_res(z, rb).value - ct.F_r_res(z, ra).value);
    EXPECT_LT(relative_error(diff, res), 1e-8);
    EXPECT_LT(relative_error(ct.F_r_res(z, rb).value - ct.F_r_res(z, ra).value, 4.0 * G_ell(ct, 1, z)), 1e-12);
}

TEST(Deformation, SuitePointsAllHaveRadius) {
    auto ct = make("DIII");
    for (int n = 0; n <= 2; ++n)
        for (cplx z : deformation_points(ct, n, 10)) EXPECT_TRUE(segment_radius(ct, n, z).has_value()) << z;
}
