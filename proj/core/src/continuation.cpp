#include "res_atlas/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace res_atlas {

namespace {
const cplx I(0.0, 1.0);
const cplx kTwoPiI(0.0, 2.0 * std::numbers::pi);

bool on_cut(cplx u) { return u.imag() == 0.0 && std::abs(u.real()) <= 1.0; }

cplx inside_root(cplx u) {
    cplx s = std::sqrt(u * u - 1.0);
    cplx a = u + s, b = u - s;
    cplx big = std::abs(a) >= std::abs(b) ? a : b;
    return 1.0 / big;
}
}  // namespace

cplx w1_plus(const SpaceDescriptor& space, int ell, cplx z) {
    if (z == 0.0) throw ContourError("w1_plus: z = 0", ell);
    cplx u = I * L_ell(space, ell) / z;
    if (on_cut(u)) throw ContourError("w1_plus: z on the removed ray", ell);
    return inside_root(u);
}

cplx C_ell(const Plancherel& pl, int ell) {
    double L = L_ell(pl.space(), ell);
    return pl.b() / std::numbers::pi * L * pl.p1(I * L);
}

cplx G_ell(const Contour& ct, int ell, cplx z) {
    cplx w = w1_plus(ct.space(), ell, z);
    return -C_ell(ct.plancherel(), ell) * ct.psi_vartheta(z, w) * ct.plancherel().p1q1(I * z * smap(w));
}

cplx zeta_plus(const SpaceDescriptor& space, int ell, cplx z) {
    if (z == 0.0) throw BranchError("zeta_plus: z = 0");
    cplx u = I * L_ell(space, ell) / z;
    if (on_cut(u)) {
        if (std::abs(u.real()) == 1.0) throw BranchError("zeta_plus: branch point");
        return I * std::sqrt(1.0 - u.real() * u.real());
    }
    return u - inside_root(u);
}

cplx G_tilde(const Contour& ct, int ell, cplx z, cplx zeta) {
    const auto& pl = ct.plancherel();
    double L = ct.L(ell);
    cplx w = I * L / z - zeta;
    return pl.b() / std::numbers::pi * L * pl.p1(I * L) * ct.psi_vartheta(z, w) * pl.p1q1(I * z * zeta);
}

cplx chart_z(const SpaceDescriptor& space, int ell, int sign, cplx zeta) {
    return static_cast<double>(sign) * I * L_ell(space, ell) / std::sqrt(zeta * zeta + 1.0);
}

cplx G_tilde_chart(const Contour& ct, int ell, int sign, cplx zeta) {
    return G_tilde(ct, ell, chart_z(ct.space(), ell, sign, zeta), zeta);
}

bool is_cancelled(const SpaceDescriptor& space, int ell, int m) {
    int h = space.m.m_m / 2 - 1;
    return m >= ell - h && m <= ell + h;
}

double abs_z_lm(const SpaceDescriptor& space, int ell, int m) {
    return std::hypot(L_ell(space, ell), L_ell(space, m));
}

cplx zeta_lm(const SpaceDescriptor& space, int ell, int m) {
    double Lm = L_ell(space, m);
    return I * (Lm / abs_z_lm(space, ell, m));
}

double C_lm(const Plancherel& pl, int ell, int m) {
    const auto& s = pl.space();
    double Ll = L_ell(s, ell), Lm = L_ell(s, m);
    Rational x1 = L_ell_over_b(s, ell), x2 = L_ell_over_b(s, m);
    return pl.b() * Ll * (pl.p1(I * Ll) * pl.p1(I * Lm)).real() * pl.vartheta0(x1, x2).to_double();
}

ChartResidue residue_G_tilde(const Contour& ct, int ell, int m, int sign) {
    ChartResidue r;
    const auto& s = ct.space();
    if (ell < 0 || m < 0) throw std::invalid_argument("residue_G_tilde: negative index");
    r.cancelled = is_cancelled(s, ell, m);
    r.C_lm = C_lm(ct.plancherel(), ell, m);
    if (r.cancelled) return r;
    double Ll = ct.L(ell);
    double az = abs_z_lm(s, ell, m);
    cplx sig = ct.symbol()(Ll / ct.b(), ct.L(m) / ct.b());
    r.literal = static_cast<double>(sign) / (I * std::numbers::pi * std::numbers::pi) * r.C_lm * sig;
    r.jacobian = ct.b() * Ll * Ll / (az * az * az);
    r.value = r.literal * r.jacobian;
    return r;
}

int segment_of(const SpaceDescriptor& space, cplx z) {
    double t = std::abs(z) / space.b - rho_data(space).rho_tilde_long.to_double();
    if (t < 0) return -1;
    return static_cast<int>(std::floor(t));
}

std::optional<double> segment_radius(const Contour& ct, int n, cplx z) {
    if (n < 0) return 1.0;
    if (z == 0.0) return std::nullopt;
    auto modulus = [&](int ell) {
        cplx u = I * ct.L(ell) / z;
        return on_cut(u) ? 1.0 : std::abs(inside_root(u));
    };
    auto score = [&](double r) -> double {
        double best = std::numeric_limits<double>::infinity();
        int top = std::max(ct.max_relevant_ell(z, r), n + 1);
        for (int ell = 0; ell <= top; ++ell) {
            double m = modulus(ell);
            double margin = ell <= n ? std::log(m / r) : std::log(r / m);
            if (margin <= 1e-9) return -1.0;
            best = std::min(best, margin);
        }
        return best;
    };
    double best_r = -1, best_s = 0;
    for (int i = 0; i < 50; ++i) {
        double r = (i + 1) / 51.0;
        double sc = score(r);
        if (sc > best_s) {
            best_s = sc;
            best_r = r;
        }
    }
    // refine between the bracketing moduli when the grid is too coarse
    double lo = modulus(n + 1), hi = modulus(n);
    if (lo < hi) {
        double r = std::sqrt(lo * hi);
        double sc = score(r);
        if (sc > best_s) {
            best_s = sc;
            best_r = r;
        }
    }
    if (best_r < 0) return std::nullopt;
    return best_r;
}

PiecewiseValue piecewise_F(const Contour& ct, int n, cplx z, const ContourConfig& cfg) {
    PiecewiseValue out;
    out.n = n;
    if (n < 0) {
        out.F_n = ct.F(z, cfg).value;
        out.correction = 0.0;
        return out;
    }
    auto r = segment_radius(ct, n, z);
    if (!r) throw ContourError("piecewise_F: no valid radius for segment " + std::to_string(n), n);
    out.radius = *r;
    out.F_n = ct.circle(z, *r, cfg).value;
    cplx corr = 0.0;
    for (int ell = 0; ell <= n; ++ell) corr += G_ell(ct, ell, z);
    out.correction = kTwoPiI * 4.0 * corr;
    return out;
}

SheetPoint make_sheet_point(const SpaceDescriptor& space, int N, cplx z, std::vector<int> eps) {
    if (static_cast<int>(eps.size()) != N + 1) throw std::invalid_argument("sheet vector must have N+1 entries");
    SheetPoint p{z, std::move(eps), {}};
    for (int ell = 0; ell <= N; ++ell) {
        if (p.eps[ell] != 1 && p.eps[ell] != -1) throw std::invalid_argument("sheet entries must be +-1");
        p.zetas.push_back(static_cast<double>(p.eps[ell]) * zeta_plus(space, ell, z));
    }
    return p;
}

std::vector<int> sheet_of(const SpaceDescriptor& space, cplx z, const std::vector<cplx>& zetas) {
    std::vector<int> eps;
    for (std::size_t ell = 0; ell < zetas.size(); ++ell) {
        cplx zp = zeta_plus(space, static_cast<int>(ell), z);
        eps.push_back(std::abs(zetas[ell] - zp) <= std::abs(zetas[ell] + zp) ? 1 : -1);
    }
    return eps;
}

FTildeValue F_tilde(const Contour& ct, const SheetPoint& pt, int n, const ContourConfig& cfg) {
    const int N = pt.N();
    if (n > N) throw ContourError("F_tilde: segment beyond N", n);
    FTildeValue out;
    out.n = n;
    if (n < 0) {
        out.F_n = ct.F(pt.z, cfg).value;
    } else {
        auto r = segment_radius(ct, n, pt.z);
        if (!r) throw ContourError("F_tilde: point outside the lifted neighbourhood of segment " + std::to_string(n), n);
        out.radius = *r;
        out.F_n = ct.circle(pt.z, *r, cfg).value;
    }
    cplx sum = 0.0;
    for (int ell = 0; ell <= n; ++ell) sum += G_tilde(ct, ell, pt.z, pt.zetas[ell]);
    for (int ell = std::max(n + 1, 0); ell <= N; ++ell) {
        cplx zp = zeta_plus(ct.space(), ell, pt.z);
        bool minus = std::abs(pt.zetas[ell] + zp) < std::abs(pt.zetas[ell] - zp);
        if (minus)
            sum += G_tilde(ct, ell, pt.z, pt.zetas[ell]) - G_tilde(ct, ell, pt.z, -pt.zetas[ell]);
    }
    out.value = out.F_n + kTwoPiI * 4.0 * sum;
    return out;
}

FTildeValue F_tilde(const Contour& ct, const SheetPoint& pt, const ContourConfig& cfg) {
    int n0 = std::min(segment_of(ct.space(), pt.z), pt.N());
    for (int n : {n0, n0 - 1, n0 + 1}) {
        if (n < -1 || n > pt.N()) continue;
        if (n >= 0 && !segment_radius(ct, n, pt.z)) continue;
        if (n < 0 && pt.z.real() == 0.0 && std::abs(pt.z.imag()) >= ct.L(0)) continue;
        return F_tilde(ct, pt, n, cfg);
    }
    throw ContourError("F_tilde: no segment representation near this point");
}

std::vector<cplx> circle_path(cplx center, double radius, int samples, int turns, double start_angle) {
    std::vector<cplx> out;
    int total = samples * turns;
    for (int j = 0; j <= total; ++j)
        out.push_back(center + std::polar(radius, start_angle + 2.0 * std::numbers::pi * j / samples));
    return out;
}

PathResult continue_along_path(const Contour& ct, const SheetPoint& start, const std::vector<cplx>& path,
                               bool evaluate, const ContourConfig& cfg) {
    const auto& space = ct.space();
    const int N = start.N();
    const double b = ct.b();
    PathResult res;
    std::vector<cplx> zetas = start.zetas;
    cplx z = start.z;

    auto guard = [&](cplx zz) {
        for (int ell = 0; ell <= N; ++ell)
            for (double sgn : {1.0, -1.0})
                if (std::abs(zz - sgn * I * ct.L(ell)) < 1e-6 * b)
                    throw BranchError("path passes within the singular-fibre margin of a branch point");
    };
    auto roots_at = [&](cplx zz, int ell) {
        cplx u = I * ct.L(ell) / zz;
        return std::sqrt(u * u - 1.0);
    };
    // one substep; false when the branch choice is ambiguous
    auto step = [&](cplx zn, std::vector<cplx>& zs) {
        for (int ell = 0; ell <= N; ++ell) {
            cplx s = roots_at(zn, ell);
            double dp = std::abs(s - zs[ell]), dm = std::abs(-s - zs[ell]);
            if (std::min(dp, dm) > 0.25 * std::max(dp, dm)) return false;
            zs[ell] = dp <= dm ? s : -s;
        }
        return true;
    };
    auto record = [&](cplx zz) {
        TraceSample t{zz, sheet_of(space, zz, zetas), std::nullopt};
        if (evaluate) t.F_tilde = F_tilde(ct, SheetPoint{zz, t.eps, zetas}, cfg).value;
        for (int ell = 0; ell <= N; ++ell) {
            cplx u = I * ct.L(ell) / zz;
            cplx target = u * u - 1.0;
            res.max_residual = std::max(res.max_residual, std::abs(zetas[ell] * zetas[ell] - target) /
                                                              std::max(1.0, std::abs(target)));
        }
        res.trace.push_back(std::move(t));
    };

    guard(z);
    record(z);
    for (std::size_t j = 1; j < path.size(); ++j) {
        cplx target = path[j];
        guard(target);
        int base = std::max(1, static_cast<int>(std::ceil(200.0 * std::abs(target - z) / b)));
        bool done = false;
        for (int refine = 0; refine <= 6 && !done; ++refine) {
            int sub = base << refine;
            std::vector<cplx> zs = zetas;
            bool ok = true;
            for (int k = 1; k <= sub && ok; ++k) {
                cplx zk = z + (target - z) * (static_cast<double>(k) / sub);
                guard(zk);
                ok = step(zk, zs);
            }
            if (ok) {
                zetas = zs;
                done = true;
                res.refinements = std::max(res.refinements, refine);
            }
        }
        if (!done) throw BranchError("path continuation unstable: step too close to a branch point");
        z = target;
        record(z);
    }
    res.end = SheetPoint{z, sheet_of(space, z, zetas), zetas};
    return res;
}

ResidueResult F_tilde_chart_residue(const Contour& ct, const SheetPoint& ref, int n, double radius) {
    const auto& space = ct.space();
    const int N = ref.N();
    auto f = [&](cplx zn) {
        cplx z = chart_z(space, n, -1, zn);
        SheetPoint pt{z, ref.eps, std::vector<cplx>(N + 1)};
        for (int ell = 0; ell <= N; ++ell) {
            cplx u = I * ct.L(ell) / z;
            cplx s = std::sqrt(u * u - 1.0);
            pt.zetas[ell] = std::abs(s - ref.zetas[ell]) <= std::abs(s + ref.zetas[ell]) ? s : -s;
        }
        pt.zetas[n] = zn;
        return F_tilde(ct, pt, n).value;
    };
    return numerical_residue(f, ref.zetas[n], radius, 32, 1 << 10, 1e-9);
}

}  // namespace res_atlas
