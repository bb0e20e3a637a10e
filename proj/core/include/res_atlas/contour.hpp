#pragma once

#include <array>
#include <vector>

#include "res_atlas/plancherel.hpp"
#include "res_atlas/quadrature.hpp"
#include "res_atlas/symbols.hpp"

namespace res_atlas {

cplx cmap(cplx w);
cplx smap(cplx w);

struct ContourConfig {
    int nodes = 512;
    int max_nodes = 1 << 15;
    double tol = 1e-11;
    bool use_symmetry = true;  // integrate one quarter circle and multiply by 4
};

struct ContourResult {
    cplx value;
    double radius = 1.0;
    int nodes = 0;
};

struct IntegrandPole {
    int ell;
    cplx w;
};

// Integrand theta_z psi_z phi_z of the contour representation and the
// integrals built from it.
class Contour {
public:
    Contour(Plancherel pl, SpectralSymbol symbol);

    const Plancherel& plancherel() const { return pl_; }
    const SpaceDescriptor& space() const { return pl_.space(); }
    const SpectralSymbol& symbol() const { return symbol_; }
    double b() const { return pl_.b(); }
    double L(int ell) const;

    cplx vartheta_z(cplx z, cplx w) const;
    cplx psi_z(cplx z, cplx w) const;
    cplx phi_z(cplx z, cplx w) const;
    cplx psi_vartheta(cplx z, cplx w) const { return vartheta_z(z, w) * psi_z(z, w); }
    cplx integrand(cplx z, cplx w) const;

    // Poles of phi_z with rmin < |w| < rmax.
    std::vector<IntegrandPole> poles(cplx z, double rmin, double rmax) const;
    // Smallest distance from a pole of the integrand to the circle |w| = r.
    double pole_distance(cplx z, double r) const;

    ContourResult F(cplx z, const ContourConfig& cfg = {}) const;
    // Same integrand on |w| = r; r is moved to r(1 -+ 1e-3) when some +-iL_l
    // sits within 1e-9 of the boundary of z E_{c(r),s(r)}.
    ContourResult F_r(cplx z, double r, const ContourConfig& cfg = {}) const;
    // Integral over |w| = r with no radius adjustment.
    ContourResult circle(cplx z, double r, const ContourConfig& cfg = {}) const;
    std::array<cplx, 4> quarter_integrals(cplx z, double r, int nodes) const;

    // (xi/c(r))^2 + (eta/s(r))^2 with xi + i eta = i L_l / z
    double ellipse_metric(cplx z, int ell, double r) const;
    std::vector<int> S_set(cplx z, double r) const;
    double resolve_radius(cplx z, double r) const;

    // 4 sum_{l in S_{r,z,+}} G_l(z)
    ContourResult F_r_res(cplx z, double r) const;
    // sum of numerical residues of the integrand at its poles in r < |w| < 1
    ContourResult F_r_res_numerical(cplx z, double r) const;

    // l with L_l possibly relevant for a circle of radius r
    int max_relevant_ell(cplx z, double r) const;

private:
    Plancherel pl_;
    SpectralSymbol symbol_;
};

}  // namespace res_atlas
