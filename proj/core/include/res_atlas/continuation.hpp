#pragma once

#include <optional>
#include <vector>

#include "res_atlas/contour.hpp"

namespace res_atlas {

// Inside-disk root of w^2 - 2(iL_l/z)w + 1 = 0.
cplx w1_plus(const SpaceDescriptor& space, int ell, cplx z);

// C_l = (b/pi) L_l p1(iL_l)
cplx C_ell(const Plancherel& pl, int ell);
cplx G_ell(const Contour& ct, int ell, cplx z);

// Square root of (iL_l/z)^2 - 1 equal to iL_l/z - w1_plus(z); on the cut
// i(-inf,-L_l] (and i[L_l,inf)) the limit from Re z > 0 is returned.
cplx zeta_plus(const SpaceDescriptor& space, int ell, cplx z);

cplx G_tilde(const Contour& ct, int ell, cplx z, cplx zeta);

// Chart kappa_{l,sign}^{-1}: z = sign * i L_l / sqrt(zeta^2 + 1)
cplx chart_z(const SpaceDescriptor& space, int ell, int sign, cplx zeta);
cplx G_tilde_chart(const Contour& ct, int ell, int sign, cplx zeta);

bool is_cancelled(const SpaceDescriptor& space, int ell, int m);
cplx zeta_lm(const SpaceDescriptor& space, int ell, int m);  // i sqrt(L_m^2/(L_l^2+L_m^2))
double abs_z_lm(const SpaceDescriptor& space, int ell, int m);

struct ChartResidue {
    cplx value;       // residue at +zeta_{l,m} (equal at -zeta_{l,m})
    cplx literal;     // +-(1/i pi^2) C_{l,m} sigma without the chart Jacobian
    double C_lm = 0;  // b L_l p1(iL_l) p1(iL_m) vartheta0(L_l/b, L_m/b)
    double jacobian = 1;
    bool cancelled = false;
};

double C_lm(const Plancherel& pl, int ell, int m);
ChartResidue residue_G_tilde(const Contour& ct, int ell, int m, int sign);

int segment_of(const SpaceDescriptor& space, cplx z);  // -1 when |z| < L_0

// Radius with S_{r,z,+} = [0, n] maximizing the relative pole margin, or
// nullopt. n = -1 yields the unit circle.
std::optional<double> segment_radius(const Contour& ct, int n, cplx z);

struct PiecewiseValue {
    cplx F_n;
    cplx correction;
    double radius = 1;
    int n = -1;
    cplx total() const { return F_n + correction; }
};

PiecewiseValue piecewise_F(const Contour& ct, int n, cplx z, const ContourConfig& cfg = {});

struct SheetPoint {
    cplx z;
    std::vector<int> eps;
    std::vector<cplx> zetas;
    int N() const { return static_cast<int>(eps.size()) - 1; }
};

SheetPoint make_sheet_point(const SpaceDescriptor& space, int N, cplx z, std::vector<int> eps);
// Sheet label of continued coordinates: eps_l = sign relative to zeta_plus.
std::vector<int> sheet_of(const SpaceDescriptor& space, cplx z, const std::vector<cplx>& zetas);

struct FTildeValue {
    cplx value;
    cplx F_n;
    int n = -1;
    double radius = 1;
};

FTildeValue F_tilde(const Contour& ct, const SheetPoint& pt, int n, const ContourConfig& cfg = {});
// Segment picked from |z|, falling back to neighbours when no radius exists.
FTildeValue F_tilde(const Contour& ct, const SheetPoint& pt, const ContourConfig& cfg = {});

struct TraceSample {
    cplx z;
    std::vector<int> eps;
    std::optional<cplx> F_tilde;
};

struct PathResult {
    SheetPoint end;
    std::vector<TraceSample> trace;
    int refinements = 0;
    double max_residual = 0;  // max |zeta^2 - ((iL/z)^2 - 1)| relative
};

// Proximity continuation of every zeta_l along the sampled path.
PathResult continue_along_path(const Contour& ct, const SheetPoint& start, const std::vector<cplx>& path,
                               bool evaluate = true, const ContourConfig& cfg = {});

std::vector<cplx> circle_path(cplx center, double radius, int samples, int turns = 1,
                              double start_angle = 0.0);

// zeta_n chart: residue of F~ o kappa^{-1}_{n} at the point above z on the
// sheet given by `ref`, found numerically.
ResidueResult F_tilde_chart_residue(const Contour& ct, const SheetPoint& ref, int n, double radius = 2e-3);

}  // namespace res_atlas
