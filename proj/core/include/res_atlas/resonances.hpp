#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "res_atlas/continuation.hpp"

namespace res_atlas {

struct Member {
    int ell;
    int k;
    friend bool operator==(const Member&, const Member&) = default;
};

// G~_{ell} is singular above z_h at m = member_ell; ell = member_ell + m_m/2 + k.
struct Alias {
    int ell;
    int m;
};

struct Resonance {
    int h = 0;
    std::int64_t radius_sq_times4 = 0;  // 4 |z_h|^2 / b^2
    std::vector<Member> members;
    std::vector<Alias> aliases;

    Rational radius_sq() const { return Rational(radius_sq_times4, 4); }
    double abs_z_over_b() const { return 0.5 * std::sqrt(static_cast<double>(radius_sq_times4)); }
    cplx location(double b) const { return {0.0, -b * abs_z_over_b()}; }
};

std::vector<Resonance> enumerate_resonances(const SpaceDescriptor& space, const Rational& max_radius_sq);
std::vector<Resonance> enumerate_first(const SpaceDescriptor& space, int count);

// Smallest N with L_{N+1} > sqrt(bound) b.
int auto_N(const SpaceDescriptor& space, const Rational& max_radius_sq);
// Segment n with L_n <= |z_h| < L_{n+1} (exact), -1 below L_0.
int resonance_segment(const SpaceDescriptor& space, const Resonance& r);
bool on_branch_point(const SpaceDescriptor& space, const Resonance& r);

struct ResidueTerm {
    int ell;
    int k;
    int alias_ell;        // M = ell + m_m/2 + k
    LatticePoint lambda;  // lambda(ell, ell + k) = (L_ell, L_M)/b
    double weight;        // (L_M / L_ell^2) C_{ell,M}, defined up to a global constant
    double coefficient;   // eps_ell a_ell + eps_M a_M, exact on the requested sheet
    cplx symbol_value;
};

struct ResidueSummary {
    Resonance resonance;
    int n = 0;
    int N = 0;
    std::vector<int> eps;
    std::vector<ResidueTerm> terms;
    cplx chart_prefactor;  // i eps_n L_n^2 / sqrt(|z_h|^2 - L_n^2)
    cplx residue_literal;  // chart_prefactor * sum of coefficient * symbol_value
    cplx residue_F;        // residue of F~ o kappa_{n,eps}^{-1}, 2 pi i residue_literal
    cplx residue_R;        // i pi residue_F
};

ResidueSummary residue_summary(const Contour& ct, const Resonance& res, int n, const std::vector<int>& eps);

struct FiniteDimWitness {
    bool finite = false;
    bool weyl_reduced = false;  // coordinates were swapped to reach the dominant chamber
    LatticePoint dominant;
    Rational a;  // (w lambda - rho) paired with beta1
    Rational c;  // (w lambda - rho) paired with (beta2 - beta1)/2
};

struct DetectedPole {
    cplx z;
    cplx residue;  // residue of F~ in the z coordinate on the scanned sheet
    int n = -1;    // segment whose tile found it
};

// Poles of F~ on the sheet eps = +1 near -i(0, L_{N+1}): two circles of
// radius 0.28 (L_{n+1} - L_n) per segment, lifted by path continuation, with
// up to two poles per circle recovered from contour moments. Points within
// 0.02 (L_{n+1} - L_n) of a branch point are not covered.
std::vector<DetectedPole> scan_poles(const Contour& ct, int N, int samples = 256, double rel_tol = 1e-6);

FiniteDimWitness finite_dim_check(const SpaceDescriptor& space, int l1, int l2);
std::vector<LatticePoint> residue_operator_spectrum(const SpaceDescriptor& space, const Resonance& res);

}  // namespace res_atlas
