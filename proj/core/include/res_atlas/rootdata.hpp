#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "res_atlas/errors.hpp"
#include "res_atlas/rational.hpp"

namespace res_atlas {

using cplx = std::complex<double>;

enum class Family { AIII, BDI, CII, DIII, EIII };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view s);
bool family_is_parametric(Family f);

struct Multiplicities {
    int m_l = 0;
    int m_m = 0;
    int m_s = 0;
    friend bool operator==(const Multiplicities&, const Multiplicities&) = default;
};

struct SpaceDescriptor {
    Family family = Family::DIII;
    std::optional<int> p;
    Multiplicities m;
    double b = 1.0;
    bool hermitian = false;
    bool reduced = false;
    bool continuation_excluded = false;

    std::string label() const;  // "DIII", "AIII:3"
};

/// Looks up a Table-1 entry. Throws CatalogError for unknown families or p
/// outside the family's range.
SpaceDescriptor catalog_lookup(Family family, std::optional<int> p = std::nullopt, double b = 1.0);
SpaceDescriptor catalog_lookup(std::string_view selector, double b = 1.0);  // "F" or "F:p"

// Multiplicity triple given by the family formula, without range checks.
Multiplicities family_formula(Family family, int p);

// Default browsing catalog: every family, parametric ones at p = lo..p_max.
std::vector<SpaceDescriptor> default_catalog(int p_max = 6);

// Spaces on which continuation and resonances are defined, used by the
// property suites: DIII, EIII, AIII p=3..6, BDI p=4,6, CII p=2..6.
std::vector<SpaceDescriptor> continuation_catalog();

struct RhoData {
    Rational rho_b1;
    Rational rho_b2;
    Rational rho_tilde_long;
    Rational rho_tilde_mid;
    Rational L_sq_over_b2;  // L^2/b^2, exact even when L/b is irrational
    double L = 0.0;
    Rational rho_norm_sq;  // <rho,rho>/b^2
};

RhoData rho_data(const SpaceDescriptor& space);

// Values as printed in the reference tables, for fidelity reporting.
struct TableRow {
    Multiplicities m;
    Rational two_rho_b1;
    Rational two_rho_b2;
    Rational rho_tilde_long;
    Rational rho_tilde_mid;
    Rational L_sq_over_b2;
    std::string L_text;
};

TableRow reference_table_row(Family family, std::optional<int> p);

double L_ell(const SpaceDescriptor& space, int ell);
Rational L_ell_over_b(const SpaceDescriptor& space, int ell);

struct SpectralPoint {
    cplx x1;
    cplx x2;

    // lambda_beta for the long and middle roots
    cplx at(Root r) const;
    cplx at_half(Root r) const;  // value at beta_j/2 (Beta1/Beta2 only)
};

struct LatticePoint {
    Rational x1;
    Rational x2;
    SpectralPoint spectral() const { return {x1.to_double(), x2.to_double()}; }
    friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

LatticePoint lambda_point_exact(const SpaceDescriptor& space, int l1, int l2);
SpectralPoint lambda_point(const SpaceDescriptor& space, int l1, int l2);
bool lambda_is_dominant(const SpaceDescriptor& space, int l1, int l2);

struct IsomorphismCheck {
    std::string lhs;
    std::string rhs;
    std::optional<Multiplicities> lhs_m;
    std::optional<Multiplicities> rhs_m;
    bool agree = false;
    std::string note;
};

std::vector<IsomorphismCheck> isomorphism_crosscheck();

}  // namespace res_atlas
