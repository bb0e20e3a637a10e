#include "res_atlas/rootdata.hpp"

#include <algorithm>
#include <cmath>

namespace res_atlas {

const char* root_name(Root r) {
    switch (r) {
        case Root::Beta1: return "beta1";
        case Root::Beta2: return "beta2";
        case Root::MidMinus: return "(beta2-beta1)/2";
        case Root::MidPlus: return "(beta2+beta1)/2";
    }
    return "?";
}

std::string_view family_name(Family f) {
    switch (f) {
        case Family::AIII: return "AIII";
        case Family::BDI: return "BDI";
        case Family::CII: return "CII";
        case Family::DIII: return "DIII";
        case Family::EIII: return "EIII";
    }
    return "?";
}

std::optional<Family> parse_family(std::string_view s) {
    for (Family f : {Family::AIII, Family::BDI, Family::CII, Family::DIII, Family::EIII})
        if (family_name(f) == s) return f;
    return std::nullopt;
}

bool family_is_parametric(Family f) {
    return f == Family::AIII || f == Family::BDI || f == Family::CII;
}

std::string SpaceDescriptor::label() const {
    std::string s(family_name(family));
    if (p) s += ":" + std::to_string(*p);
    return s;
}

Multiplicities family_formula(Family family, int p) {
    switch (family) {
        case Family::AIII: return {1, 2, 2 * (p - 2)};
        case Family::BDI: return {1, p - 2, 0};
        case Family::CII: return {3, 4, 4 * (p - 2)};
        case Family::DIII: return {1, 4, 4};
        case Family::EIII: return {1, 6, 8};
    }
    return {};
}

SpaceDescriptor catalog_lookup(Family family, std::optional<int> p, double b) {
    if (!(b > 0)) throw CatalogError("b must be positive");
    SpaceDescriptor d;
    d.family = family;
    d.b = b;
    if (family_is_parametric(family)) {
        if (!p) throw CatalogError(std::string(family_name(family)) + " requires p");
        int lo = family == Family::CII ? 2 : 3;
        if (*p < lo)
            throw CatalogError(std::string(family_name(family)) + ": p=" + std::to_string(*p) +
                               " out of range (p >= " + std::to_string(lo) + ")");
        d.p = p;
    } else if (p) {
        throw CatalogError(std::string(family_name(family)) + " takes no parameter");
    }
    d.m = family_formula(family, p.value_or(0));
    d.hermitian = family != Family::CII;
    d.reduced = d.m.m_s == 0;
    d.continuation_excluded = family == Family::BDI && (*p % 2 == 1);
    return d;
}

SpaceDescriptor catalog_lookup(std::string_view selector, double b) {
    auto colon = selector.find(':');
    auto name = selector.substr(0, colon);
    auto fam = parse_family(name);
    if (!fam) throw CatalogError("unknown family: " + std::string(name));
    std::optional<int> p;
    if (colon != std::string_view::npos) {
        std::string digits(selector.substr(colon + 1));
        try {
            std::size_t used = 0;
            p = std::stoi(digits, &used);
            if (used != digits.size()) throw std::invalid_argument(digits);
        } catch (const std::exception&) {
            throw CatalogError("bad parameter in selector: " + std::string(selector));
        }
    }
    return catalog_lookup(*fam, p, b);
}

std::vector<SpaceDescriptor> default_catalog(int p_max) {
    std::vector<SpaceDescriptor> out;
    for (int p = 3; p <= p_max; ++p) out.push_back(catalog_lookup(Family::AIII, p));
    for (int p = 3; p <= p_max; ++p) out.push_back(catalog_lookup(Family::BDI, p));
    for (int p = 2; p <= p_max; ++p) out.push_back(catalog_lookup(Family::CII, p));
    out.push_back(catalog_lookup(Family::DIII));
    out.push_back(catalog_lookup(Family::EIII));
    return out;
}

std::vector<SpaceDescriptor> continuation_catalog() {
    std::vector<SpaceDescriptor> out;
    for (const auto& s : default_catalog(6))
        if (!s.continuation_excluded) out.push_back(s);
    return out;
}

RhoData rho_data(const SpaceDescriptor& space) {
    const auto& m = space.m;
    RhoData r;
    r.rho_b1 = Rational(2 * m.m_l + m.m_s, 4);
    r.rho_b2 = Rational(2 * (m.m_l + m.m_m) + m.m_s, 4);
    r.rho_tilde_long = r.rho_b1;
    r.rho_tilde_mid = Rational(m.m_m, 2);
    r.rho_norm_sq = r.rho_b1 * r.rho_b1 + r.rho_b2 * r.rho_b2;

    // |beta_j| = b, |(beta2 +- beta1)/2| = b/sqrt(2)
    std::optional<Rational> best;
    if (m.m_l % 2 == 1) best = r.rho_tilde_long * r.rho_tilde_long;
    if (m.m_m % 2 == 1) {
        Rational mid = r.rho_tilde_mid * r.rho_tilde_mid / Rational(2);
        if (!best || mid < *best) best = mid;
    }
    if (!best) throw CatalogError("no odd-multiplicity root in " + space.label());
    r.L_sq_over_b2 = *best;
    r.L = space.b * std::sqrt(best->to_double());
    return r;
}

TableRow reference_table_row(Family family, std::optional<int> p) {
    int q = p.value_or(0);
    TableRow t;
    t.m = family_formula(family, q);
    switch (family) {
        case Family::AIII:
            t.two_rho_b1 = q - 1;
            t.two_rho_b2 = q + 1;
            t.rho_tilde_long = Rational(q - 1, 2);
            t.rho_tilde_mid = 1;
            t.L_sq_over_b2 = Rational(q - 1, 4);
            t.L_text = "sqrt(p-1)/2 b";
            break;
        case Family::BDI:
            t.two_rho_b1 = 1;
            t.two_rho_b2 = q - 1;
            t.rho_tilde_long = Rational(1, 2);
            t.rho_tilde_mid = Rational(q - 2, 2);
            t.L_sq_over_b2 = q == 3 ? Rational(1, 8) : Rational(1, 4);
            t.L_text = q == 3 ? "sqrt(2)/4 b" : "b/2";
            break;
        case Family::CII: {
            t.two_rho_b1 = 5;
            t.two_rho_b2 = 5 + 2 * (q - 2);
            t.rho_tilde_long = Rational(2 * q - 1, 2);
            t.rho_tilde_mid = 2;
            Rational l = Rational(3, 2) + Rational(2 * (q - 2));
            t.L_sq_over_b2 = l * l;
            t.L_text = "(3/2+2(p-2)) b";
            break;
        }
        case Family::DIII:
            t.two_rho_b1 = 3;
            t.two_rho_b2 = 7;
            t.rho_tilde_long = Rational(3, 2);
            t.rho_tilde_mid = 2;
            t.L_sq_over_b2 = Rational(9, 4);
            t.L_text = "3/2 b";
            break;
        case Family::EIII:
            t.two_rho_b1 = 5;
            t.two_rho_b2 = 8;
            t.rho_tilde_long = Rational(5, 2);
            t.rho_tilde_mid = 3;
            t.L_sq_over_b2 = Rational(25, 4);
            t.L_text = "5/2 b";
            break;
    }
    return t;
}

Rational L_ell_over_b(const SpaceDescriptor& space, int ell) {
    if (ell < 0) throw std::invalid_argument("L_ell: negative index");
    return rho_data(space).rho_tilde_long + Rational(ell);
}

double L_ell(const SpaceDescriptor& space, int ell) {
    return space.b * L_ell_over_b(space, ell).to_double();
}

cplx SpectralPoint::at(Root r) const {
    switch (r) {
        case Root::Beta1: return x1;
        case Root::Beta2: return x2;
        case Root::MidMinus: return x2 - x1;
        case Root::MidPlus: return x2 + x1;
    }
    return {};
}

cplx SpectralPoint::at_half(Root r) const {
    if (r == Root::Beta1) return 2.0 * x1;
    if (r == Root::Beta2) return 2.0 * x2;
    throw std::invalid_argument("half of a middle root is not a root");
}

LatticePoint lambda_point_exact(const SpaceDescriptor& space, int l1, int l2) {
    if (l1 < 0 || l2 < 0) throw std::invalid_argument("lambda_point: negative index");
    auto r = rho_data(space);
    return {r.rho_b1 + Rational(l1), r.rho_b2 + Rational(l2)};
}

SpectralPoint lambda_point(const SpaceDescriptor& space, int l1, int l2) {
    return lambda_point_exact(space, l1, l2).spectral();
}

bool lambda_is_dominant(const SpaceDescriptor& space, int l1, int l2) {
    return 2 * l2 + space.m.m_m >= 2 * l1;
}

std::vector<IsomorphismCheck> isomorphism_crosscheck() {
    std::vector<IsomorphismCheck> out;
    auto add = [&](std::string lhs, std::string rhs, std::optional<Multiplicities> a,
                   std::optional<Multiplicities> b, std::string note) {
        IsomorphismCheck c{std::move(lhs), std::move(rhs), a, b, a && b && *a == *b, std::move(note)};
        out.push_back(std::move(c));
    };
    add("SU(2,2) [AIII formula at p=2]", "SO0(4,2) [BDI p=4]", family_formula(Family::AIII, 2),
        catalog_lookup(Family::BDI, 4).m, "");
    add("Sp(2,R) [C2, all multiplicities 1]", "SO0(3,2) [BDI p=3]", Multiplicities{1, 1, 0},
        catalog_lookup(Family::BDI, 3).m, "");
    add("SO*(8) [C2 with m_m=4]", "SO0(6,2) [BDI p=6]", Multiplicities{1, 4, 0},
        catalog_lookup(Family::BDI, 6).m, "");
    IsomorphismCheck excl{"SO0(2,2) [BDI p=2]", "SL(2,R)xSL(2,R)", std::nullopt, std::nullopt, true,
                          "excluded: not irreducible"};
    try {
        catalog_lookup(Family::BDI, 2);
        excl.agree = false;
        excl.note = "BDI p=2 unexpectedly accepted";
    } catch (const CatalogError&) {
    }
    out.push_back(excl);
    return out;
}

}  // namespace res_atlas
