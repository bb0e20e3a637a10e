#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "res_atlas/rootdata.hpp"

namespace res_atlas {

inline constexpr std::array<Root, 4> kPositiveRoots = {Root::Beta1, Root::Beta2, Root::MidMinus,
                                                      Root::MidPlus};

struct PlancherelParts {
    cplx Pi;
    cplx P;
    cplx Q;
    cplx product;  // C_cal * Pi * P * Q
    int cot_factors = 0;
};

struct RankOneFactors {
    cplx p1_at;
    cplx q1_at;
    cplx p1q1_at;  // evaluated without 0*inf at the cancelled interior points
};

struct FactorizationReport {
    std::size_t samples = 0;
    double max_rel_err = 0.0;
    cplx calibration;
};

// Plancherel data of one space. Calibration constants (c0 and the global C of
// the factored form) are computed on construction and never change.
class Plancherel {
public:
    explicit Plancherel(SpaceDescriptor space);

    const SpaceDescriptor& space() const { return space_; }
    const RhoData& rho() const { return rho_; }
    double b() const { return space_.b; }

    int multiplicity(Root r) const;
    int half_multiplicity(Root r) const;  // m_{beta/2}, zero for middle roots
    Rational rho_tilde(Root r) const;

    cplx c_beta(Root r, const SpectralPoint& lambda) const;
    cplx c_hc(const SpectralPoint& lambda) const;
    cplx density_direct(const SpectralPoint& lambda) const;
    PlancherelParts density_factored(const SpectralPoint& lambda) const;

    // rank-one factor X1 with multiplicities (m_l, m_s)
    RankOneFactors rank_one_factors(cplx x) const;
    cplx p1(cplx x) const;
    cplx q1(cplx x) const;
    cplx p1q1(cplx x) const;
    cplx P1(cplx a) const;  // polynomial part in the root coordinate a = ix/b
    // [c1(a)c1(-a)]^{-1} computed from gamma functions (no calibration)
    cplx rank_one_density_direct(cplx a) const;

    cplx vartheta0(cplx x1, cplx x2) const;
    Rational vartheta0(const Rational& x1, const Rational& x2) const;

    cplx c0() const { return c0_; }
    cplx calibration() const { return c_cal_; }

    // Pole lattice S_+ index of x if x = +-iL_l (within relative 1e-13).
    std::optional<int> rank_one_pole_index(cplx x) const;

private:
    cplx inv_c_pair(Root r, cplx a) const;  // 1/(c_beta(a) c_beta(-a))
    cplx P_root(Root r, cplx a) const;

    SpaceDescriptor space_;
    RhoData rho_;
    cplx c0_;
    cplx c_cal_;
};

SpectralPoint reference_lambda(const SpaceDescriptor& space);

// direct density vs C * Pi0 * P0 * (rank-one density in x1) * (in x2), at
// random generic points; C calibrated at reference_lambda.
FactorizationReport factorization_identity_check(const Plancherel& pl, std::size_t samples,
                                                 std::uint64_t seed);

// Random point with every cotangent argument and gamma argument at least
// `margin` from its pole lattice.
SpectralPoint random_generic_lambda(const Plancherel& pl, std::uint64_t& state, double margin = 0.05);

}  // namespace res_atlas
