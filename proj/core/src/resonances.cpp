#include "res_atlas/resonances.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>

namespace res_atlas {

namespace {

void require_continuable(const SpaceDescriptor& space) {
    if (space.continuation_excluded)
        throw ExcludedSpaceError(space.label() + " is excluded from continuation (SO0(p,2), p odd)");
}

std::int64_t sq(std::int64_t v) { return v * v; }

}  // namespace

std::vector<Resonance> enumerate_resonances(const SpaceDescriptor& space, const Rational& max_radius_sq) {
    require_continuable(space);
    auto rho = rho_data(space);
    const std::int64_t A = (Rational(2) * rho.rho_b1).num();
    const std::int64_t B = (Rational(2) * rho.rho_b2).num();
    const std::int64_t half_mm = space.m.m_m / 2;
    Rational q = max_radius_sq * Rational(4);
    std::int64_t bound = q.num() >= 0 ? q.num() / q.den() : -1;

    std::map<std::int64_t, std::vector<Member>> groups;
    for (std::int64_t ell = 0; sq(A + 2 * ell) + sq(B + 2 * ell) <= bound; ++ell)
        for (std::int64_t k = 0;; ++k) {
            std::int64_t v = sq(A + 2 * ell) + sq(B + 2 * ell + 2 * k);
            if (v > bound) break;
            groups[v].push_back({static_cast<int>(ell), static_cast<int>(k)});
        }

    std::vector<Resonance> out;
    int h = 0;
    for (auto& [v, members] : groups) {
        Resonance r;
        r.h = h++;
        r.radius_sq_times4 = v;
        r.members = std::move(members);
        std::sort(r.members.begin(), r.members.end(), [](auto& a, auto& b) { return a.ell < b.ell; });
        for (const auto& m : r.members)
            r.aliases.push_back({m.ell + static_cast<int>(half_mm) + m.k, m.ell});
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Resonance> enumerate_first(const SpaceDescriptor& space, int count) {
    require_continuable(space);
    auto rho = rho_data(space);
    Rational bound = rho.rho_norm_sq;
    for (;;) {
        auto all = enumerate_resonances(space, bound);
        if (static_cast<int>(all.size()) >= count) {
            all.resize(count);
            return all;
        }
        bound = bound * Rational(2);
    }
}

int auto_N(const SpaceDescriptor& space, const Rational& max_radius_sq) {
    Rational rt = rho_data(space).rho_tilde_long;
    int N = 0;
    while ((rt + Rational(N + 1)) * (rt + Rational(N + 1)) <= max_radius_sq) ++N;
    return N;
}

int resonance_segment(const SpaceDescriptor& space, const Resonance& r) {
    Rational rt = rho_data(space).rho_tilde_long;
    Rational rsq = r.radius_sq();
    if (rsq < rt * rt) return -1;
    int n = 0;
    while ((rt + Rational(n + 1)) * (rt + Rational(n + 1)) <= rsq) ++n;
    return n;
}

bool on_branch_point(const SpaceDescriptor& space, const Resonance& r) {
    int n = resonance_segment(space, r);
    if (n < 0) return false;
    Rational L = L_ell_over_b(space, n);
    return L * L == r.radius_sq();
}

ResidueSummary residue_summary(const Contour& ct, const Resonance& res, int n, const std::vector<int>& eps) {
    const auto& space = ct.space();
    require_continuable(space);
    const int N = static_cast<int>(eps.size()) - 1;
    if (n < 0 || n > N || resonance_segment(space, res) != n)
        throw std::out_of_range("resonance " + std::to_string(res.h) + " is out of reach for segment " +
                                std::to_string(n) + " with N = " + std::to_string(N));
    if (on_branch_point(space, res))
        throw BranchError("resonance " + std::to_string(res.h) + " sits on the branch point -iL_" +
                          std::to_string(n));
    const double b = ct.b();
    const double az = b * res.abs_z_over_b();
    const double Ln = ct.L(n);
    const cplx I(0, 1);
    const double pi2 = std::numbers::pi * std::numbers::pi;

    ResidueSummary s;
    s.resonance = res;
    s.n = n;
    s.N = N;
    s.eps = eps;
    s.chart_prefactor = I * static_cast<double>(eps[n]) * Ln * Ln / std::sqrt(az * az - Ln * Ln);
    cplx total = 0.0;
    for (const auto& m : res.members) {
        int M = m.ell + space.m.m_m / 2 + m.k;
        ResidueTerm t;
        t.ell = m.ell;
        t.k = m.k;
        t.alias_ell = M;
        t.lambda = lambda_point_exact(space, m.ell, m.ell + m.k);
        double Ll = ct.L(m.ell), LM = ct.L(M);
        double c_lM = C_lm(ct.plancherel(), m.ell, M);
        double c_Ml = C_lm(ct.plancherel(), M, m.ell);
        t.weight = LM / (Ll * Ll) * c_lM;
        double a_l = 4.0 * b * LM * c_lM / (pi2 * az * az * az);
        double a_M = 4.0 * b * Ll * c_Ml / (pi2 * az * az * az);
        t.coefficient = eps[m.ell] * a_l + eps[M] * a_M;
        t.symbol_value = ct.symbol()(Ll / b, LM / b);
        total += t.coefficient * t.symbol_value;
        s.terms.push_back(t);
    }
    s.residue_literal = s.chart_prefactor * total;
    s.residue_F = 2.0 * std::numbers::pi * I * s.residue_literal;
    s.residue_R = I * std::numbers::pi * s.residue_F;
    return s;
}

namespace {

// Poles u_j and residues r_j with m_k = sum r_j u_j^k, k = 0..3.
void prony(const std::array<cplx, 4>& m, double tol, std::vector<std::pair<cplx, cplx>>& out) {
    double scale = 0;
    for (auto x : m) scale = std::max(scale, std::abs(x));
    if (scale <= tol) return;
    cplx det = m[0] * m[2] - m[1] * m[1];
    double ref = std::abs(m[0]) * std::abs(m[2]) + std::norm(m[1]);
    if (std::abs(det) <= 1e-6 * ref) {
        if (std::abs(m[0]) > tol) out.push_back({m[1] / m[0], m[0]});
        return;
    }
    // u^2 + c1 u + c0 annihilates the moment sequence
    cplx c0 = (-m[2] * m[2] + m[1] * m[3]) / det;
    cplx c1 = (-m[0] * m[3] + m[1] * m[2]) / det;
    cplx d = std::sqrt(c1 * c1 - 4.0 * c0);
    cplx u1 = (-c1 + d) / 2.0, u2 = (-c1 - d) / 2.0;
    cplx r1 = (m[1] - u2 * m[0]) / (u1 - u2);
    out.push_back({u1, r1});
    out.push_back({u2, m[0] - r1});
}

}  // namespace

std::vector<DetectedPole> scan_poles(const Contour& ct, int N, int samples, double rel_tol) {
    const auto& space = ct.space();
    require_continuable(space);
    std::vector<DetectedPole> found;
    for (int n = -1; n <= N; ++n) {
        double lo = n < 0 ? 0.0 : ct.L(n), hi = ct.L(n + 1), len = hi - lo;
        for (double frac : {0.3, 0.7}) {
            cplx c(0.0, -(lo + frac * len));
            double R = 0.28 * len;
            auto path = circle_path(c, R, samples, 1);
            auto start = make_sheet_point(space, N, path[0], std::vector<int>(N + 1, 1));
            auto trace = continue_along_path(ct, start, path, true).trace;
            std::array<cplx, 4> m{};
            double mag = 0;
            for (int j = 0; j < samples; ++j) {
                cplx u = std::polar(1.0, 2.0 * std::numbers::pi * j / samples);
                cplx f = *trace[j].F_tilde;
                mag = std::max(mag, std::abs(f));
                cplx w = f * u / static_cast<double>(samples);  // (1/2 pi i) F dz / R
                for (int k = 0; k < 4; ++k, w *= u) m[k] += w;
            }
            std::vector<std::pair<cplx, cplx>> poles;
            prony(m, rel_tol * mag, poles);
            for (auto [u, r] : poles) {
                if (std::abs(u) > 0.95) continue;
                cplx z = c + R * u;
                bool dup = std::any_of(found.begin(), found.end(),
                                       [&](const DetectedPole& p) { return std::abs(p.z - z) < 1e-6 * ct.b(); });
                if (!dup) found.push_back({z, r * R, n});
            }
        }
    }
    std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) { return a.z.imag() > b.z.imag(); });
    return found;
}

FiniteDimWitness finite_dim_check(const SpaceDescriptor& space, int l1, int l2) {
    auto rho = rho_data(space);
    FiniteDimWitness w;
    LatticePoint lam = lambda_point_exact(space, l1, l2);
    if (lam.x2 < lam.x1) {
        std::swap(lam.x1, lam.x2);
        w.weyl_reduced = true;
    }
    w.dominant = lam;
    w.a = lam.x1 - rho.rho_b1;
    w.c = (lam.x2 - rho.rho_b2) - w.a;
    w.finite = w.a.is_integer() && w.c.is_integer() && w.a >= Rational(0) && w.c >= Rational(0);
    return w;
}

std::vector<LatticePoint> residue_operator_spectrum(const SpaceDescriptor& space, const Resonance& res) {
    std::vector<LatticePoint> out;
    for (const auto& m : res.members) out.push_back(lambda_point_exact(space, m.ell, m.ell + m.k));
    return out;
}

}  // namespace res_atlas
