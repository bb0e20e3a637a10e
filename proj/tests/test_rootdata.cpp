#include <gtest/gtest.h>

#include "res_atlas/rootdata.hpp"

using namespace res_atlas;

TEST(Catalog, DIIIMultiplicities) {
    auto s = catalog_lookup(Family::DIII);
    EXPECT_EQ(s.m, (Multiplicities{1, 4, 4}));
    EXPECT_TRUE(s.hermitian);
    EXPECT_FALSE(s.reduced);
}

TEST(Catalog, CIIAtTwoIsReduced) {
    auto s = catalog_lookup("CII:2");
    EXPECT_EQ(s.m, (Multiplicities{3, 4, 0}));
    EXPECT_TRUE(s.reduced);
    EXPECT_FALSE(s.hermitian);
}

TEST(Catalog, OutOfRangeAndUnknown) {
    EXPECT_THROW(catalog_lookup("AIII:2"), CatalogError);
    EXPECT_THROW(catalog_lookup("BDI:2"), CatalogError);
    EXPECT_THROW(catalog_lookup("CII:1"), CatalogError);
    EXPECT_THROW(catalog_lookup("AIII"), CatalogError);
    EXPECT_THROW(catalog_lookup("DIII:3"), CatalogError);
    EXPECT_THROW(catalog_lookup("G2"), CatalogError);
    EXPECT_THROW(catalog_lookup("AIII:x"), CatalogError);
    EXPECT_THROW(catalog_lookup("DIII", -1.0), CatalogError);
}

TEST(Catalog, OddBDIExcludedFromContinuation) {
    for (int p = 3; p <= 8; ++p)
        EXPECT_EQ(catalog_lookup(Family::BDI, p).continuation_excluded, p % 2 == 1) << p;
    EXPECT_FALSE(catalog_lookup("DIII").continuation_excluded);
}

TEST(Catalog, DefaultAndContinuationLists) {
    auto all = default_catalog();
    EXPECT_EQ(all.size(), 15u);
    auto cont = continuation_catalog();
    EXPECT_EQ(cont.size(), 13u);
    for (const auto& s : cont) EXPECT_FALSE(s.continuation_excluded);
}

TEST(Catalog, MiddleMultiplicityEvenLongOddOnContinuationSpaces) {
    for (const auto& s : continuation_catalog()) {
        EXPECT_EQ(s.m.m_m % 2, 0) << s.label();
        EXPECT_EQ(s.m.m_l % 2, 1) << s.label();
    }
}

TEST(RhoData, DIII) {
    auto r = rho_data(catalog_lookup("DIII"));
    EXPECT_EQ(r.rho_b1, Rational(3, 2));
    EXPECT_EQ(r.rho_b2, Rational(7, 2));
    EXPECT_EQ(r.rho_tilde_long, Rational(3, 2));
    EXPECT_EQ(r.rho_tilde_mid, Rational(2));
    EXPECT_EQ(r.L_sq_over_b2, Rational(9, 4));
    EXPECT_EQ(r.rho_norm_sq, Rational(29, 2));
}

TEST(RhoData, EIII) {
    auto r = rho_data(catalog_lookup("EIII", 2.0));
    EXPECT_EQ(r.rho_tilde_long, Rational(5, 2));
    EXPECT_DOUBLE_EQ(r.L, 5.0);
}

TEST(RhoData, CIIThreeLengthFromOddRoots) {
    auto r = rho_data(catalog_lookup("CII:3"));
    EXPECT_EQ(r.rho_tilde_long, Rational(5, 2));
    EXPECT_EQ(r.L_sq_over_b2, Rational(25, 4));
}

TEST(RhoData, BDIThreeUsesMiddleRoot) {
    auto r = rho_data(catalog_lookup("BDI:3"));
    EXPECT_EQ(r.L_sq_over_b2, Rational(1, 8));
    EXPECT_EQ(rho_data(catalog_lookup("BDI:5")).L_sq_over_b2, Rational(1, 4));
}

TEST(RhoData, HalfSumMatchesMultiplicities) {
    for (const auto& s : default_catalog()) {
        auto r = rho_data(s);
        const auto& m = s.m;
        EXPECT_EQ(r.rho_b1 * Rational(2), Rational(m.m_l) + Rational(m.m_s, 2)) << s.label();
        EXPECT_EQ(r.rho_b2 * Rational(2), Rational(m.m_l + m.m_m) + Rational(m.m_s, 2)) << s.label();
        EXPECT_EQ(r.rho_norm_sq, r.rho_b1 * r.rho_b1 + r.rho_b2 * r.rho_b2);
    }
}

TEST(ReferenceTable, MultiplicityAndRhoTildeRowsAgree) {
    for (const auto& s : default_catalog()) {
        auto t = reference_table_row(s.family, s.p);
        auto r = rho_data(s);
        EXPECT_EQ(t.m, s.m) << s.label();
        EXPECT_EQ(t.rho_tilde_long, r.rho_tilde_long) << s.label();
        EXPECT_EQ(t.rho_tilde_mid, r.rho_tilde_mid) << s.label();
    }
}

// The printed half-sum row differs from the multiplicity formula for CII and
// EIII; every other family agrees.
TEST(ReferenceTable, TwoRhoRowDiscrepancies) {
    for (const auto& s : default_catalog()) {
        auto t = reference_table_row(s.family, s.p);
        auto r = rho_data(s);
        bool agree = t.two_rho_b1 == r.rho_b1 * Rational(2) && t.two_rho_b2 == r.rho_b2 * Rational(2);
        bool expect = s.family != Family::CII && s.family != Family::EIII;
        EXPECT_EQ(agree, expect) << s.label();
    }
    auto e = rho_data(catalog_lookup("EIII"));
    EXPECT_EQ(e.rho_b2 * Rational(2), Rational(11));
    auto c = rho_data(catalog_lookup("CII:2"));
    EXPECT_EQ(c.rho_b1 * Rational(2), Rational(3));
    EXPECT_EQ(c.rho_b2 * Rational(2), Rational(7));
}

TEST(ReferenceTable, LengthRowDiscrepancies) {
    for (const auto& s : default_catalog()) {
        auto t = reference_table_row(s.family, s.p);
        bool agree = t.L_sq_over_b2 == rho_data(s).L_sq_over_b2;
        bool expect = s.family == Family::BDI || s.family == Family::DIII || s.family == Family::EIII ||
                      (s.family == Family::CII && s.p == 2);
        EXPECT_EQ(agree, expect) << s.label();
    }
}

TEST(Lengths, DIII) {
    auto s = catalog_lookup("DIII");
    EXPECT_DOUBLE_EQ(L_ell(s, 0), 1.5);
    EXPECT_DOUBLE_EQ(L_ell(s, 2), 3.5);
    EXPECT_EQ(L_ell_over_b(s, 2), Rational(7, 2));
    EXPECT_THROW(L_ell(s, -1), std::invalid_argument);
}

TEST(Lengths, ZeroIndexIsLWhenLongRootIsMinimal) {
    for (const auto& s : continuation_catalog()) {
        auto r = rho_data(s);
        EXPECT_EQ(L_ell_over_b(s, 0) * L_ell_over_b(s, 0), r.L_sq_over_b2) << s.label();
    }
}

TEST(LambdaPoint, Examples) {
    auto d = catalog_lookup("DIII");
    EXPECT_EQ(lambda_point_exact(d, 0, 0), (LatticePoint{Rational(3, 2), Rational(7, 2)}));
    EXPECT_EQ(lambda_point_exact(d, 1, 0), (LatticePoint{Rational(5, 2), Rational(7, 2)}));
    auto a = catalog_lookup("AIII:3");
    EXPECT_EQ(lambda_point_exact(a, 0, 2), (LatticePoint{Rational(1), Rational(4)}));
    EXPECT_THROW(lambda_point_exact(d, -1, 0), std::invalid_argument);
}

TEST(LambdaPoint, Dominance) {
    auto d = catalog_lookup("DIII");
    EXPECT_TRUE(lambda_is_dominant(d, 0, 0));
    EXPECT_TRUE(lambda_is_dominant(d, 4, 2));
    EXPECT_FALSE(lambda_is_dominant(d, 5, 2));
}

TEST(Isomorphisms, CrossCheck) {
    EXPECT_EQ(family_formula(Family::AIII, 2), family_formula(Family::BDI, 4));
    EXPECT_EQ(family_formula(Family::BDI, 6), (Multiplicities{1, 4, 0}));
    auto checks = isomorphism_crosscheck();
    ASSERT_FALSE(checks.empty());
    for (const auto& c : checks) {
        if (c.lhs_m && c.rhs_m) EXPECT_TRUE(c.agree) << c.lhs << " vs " << c.rhs;
    }
}
