#include "res_atlas/contour.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "res_atlas/continuation.hpp"

namespace res_atlas {

namespace {
constexpr double kBand = 1e-9;
const cplx I(0.0, 1.0);
}  // namespace

cplx cmap(cplx w) {
    if (w == 0.0) throw std::domain_error("cmap at w = 0");
    return 0.5 * (w + 1.0 / w);
}

cplx smap(cplx w) {
    if (w == 0.0) throw std::domain_error("smap at w = 0");
    return 0.5 * (w - 1.0 / w);
}

Contour::Contour(Plancherel pl, SpectralSymbol symbol) : pl_(std::move(pl)), symbol_(std::move(symbol)) {}

double Contour::L(int ell) const { return L_ell(pl_.space(), ell); }

cplx Contour::vartheta_z(cplx z, cplx w) const {
    const double b = pl_.b();
    const int mm = pl_.space().m.m_m;
    cplx c = cmap(w);
    cplx cm = cmap(-I * w);
    cplx s = smap(w);
    cplx zb = z / b;
    cplx v = zb * zb * (c * c - cm * cm);
    for (int k = 1; k <= mm - 1; ++k) {
        cplx t = zb * s - mm / 2.0 + static_cast<double>(k);
        v *= t * t + zb * zb * c * c;
    }
    return v;
}

cplx Contour::psi_z(cplx z, cplx w) const {
    cplx zb = I * z / pl_.b();
    return symbol_(zb * cmap(w), zb * cmap(-I * w));
}

cplx Contour::phi_z(cplx z, cplx w) const {
    cplx c = cmap(w);
    cplx s = smap(w);
    return -z * z * c * (s / w) * pl_.p1q1(z * c) * pl_.p1q1(z * cmap(-I * w));
}

cplx Contour::integrand(cplx z, cplx w) const {
    return vartheta_z(z, w) * psi_z(z, w) * phi_z(z, w);
}

int Contour::max_relevant_ell(cplx z, double r) const {
    double cr = 0.5 * (r + 1.0 / r);
    double bound = 2.0 * std::abs(z) * cr + 2.0 * pl_.b();
    double rt = pl_.rho().rho_tilde_long.to_double();
    return std::max(0, static_cast<int>(std::ceil(bound / pl_.b() - rt)));
}

std::vector<IntegrandPole> Contour::poles(cplx z, double rmin, double rmax) const {
    std::vector<IntegrandPole> out;
    if (z == 0.0) return out;
    int top = max_relevant_ell(z, std::max(rmin, 1e-3));
    for (int ell = 0; ell <= top; ++ell) {
        cplx u = I * L(ell) / z;
        cplx sq = std::sqrt(u * u - 1.0);
        for (cplx root : {u + sq, u - sq})
            for (int k = 0; k < 4; ++k) {
                cplx w = root * std::pow(I, k);
                double a = std::abs(w);
                if (a > rmin && a < rmax) out.push_back({ell, w});
            }
    }
    return out;
}

double Contour::pole_distance(cplx z, double r) const {
    double d = std::numeric_limits<double>::infinity();
    int top = max_relevant_ell(z, r);
    for (int ell = 0; ell <= top; ++ell) {
        cplx u = I * L(ell) / z;
        cplx sq = std::sqrt(u * u - 1.0);
        for (cplx root : {u + sq, u - sq}) d = std::min(d, std::abs(std::abs(root) - r));
    }
    return d;
}

std::array<cplx, 4> Contour::quarter_integrals(cplx z, double r, int nodes) const {
    std::array<cplx, 4> out{};
    const double h = 2.0 * std::numbers::pi / nodes;
    int q = nodes / 4;
    for (int part = 0; part < 4; ++part) {
        std::vector<cplx> terms;
        for (int j = part * q; j <= (part + 1) * q; ++j) {
            cplx w = std::polar(r, h * j);
            double wt = (j == part * q || j == (part + 1) * q) ? 0.5 : 1.0;
            terms.push_back(wt * integrand(z, w) * I * w * h);
        }
        out[part] = pairwise_sum(terms);
    }
    return out;
}

ContourResult Contour::circle(cplx z, double r, const ContourConfig& cfg) const {
    if (z == 0.0) return {0.0, r, 0};
    double d = pole_distance(z, r);
    int n = std::max(cfg.nodes, 64);
    if (cfg.use_symmetry) n = (n + 3) / 4 * 4;
    while (d <= 4.0 * 2.0 * std::numbers::pi * r / n) {
        n *= 2;
        if (n > cfg.max_nodes) throw ContourError("integrand pole too close to the contour");
    }
    auto eval = [&](int nodes) {
        const double h = 2.0 * std::numbers::pi / nodes;
        int count = cfg.use_symmetry ? nodes / 4 : nodes;
        std::vector<cplx> terms(count);
        std::vector<cplx> mags(count);
        for (int j = 0; j < count; ++j) {
            cplx w = std::polar(r, h * j);
            terms[j] = integrand(z, w) * I * w;
            mags[j] = std::abs(terms[j]);
        }
        double scale = cfg.use_symmetry ? 4.0 : 1.0;
        return std::pair{pairwise_sum(terms) * h * scale, pairwise_sum(mags).real() * h * scale};
    };
    auto [prev, mag] = eval(n);
    while (2 * n <= cfg.max_nodes) {
        n *= 2;
        auto [cur, m2] = eval(n);
        if (std::abs(cur - prev) <= cfg.tol * std::max(std::abs(cur), 1e-4 * m2)) return {cur, r, n};
        prev = cur;
    }
    throw ConvergenceError("contour quadrature did not converge at the node cap");
}

ContourResult Contour::F(cplx z, const ContourConfig& cfg) const {
    if (z.real() == 0.0 && std::abs(z.imag()) >= pl_.rho().L)
        throw ContourError("F: z on a removed ray");
    return circle(z, 1.0, cfg);
}

double Contour::ellipse_metric(cplx z, int ell, double r) const {
    cplx u = I * L(ell) / z;
    double cr = 0.5 * (r + 1.0 / r);
    double sr = 0.5 * (r - 1.0 / r);
    return (u.real() / cr) * (u.real() / cr) + (u.imag() / sr) * (u.imag() / sr);
}

double Contour::resolve_radius(cplx z, double r) const {
    if (!(r > 0.0 && r <= 1.0)) throw ContourError("radius must lie in (0,1]");
    auto degenerate = [&](double rr) -> long {
        int top = max_relevant_ell(z, rr);
        for (int ell = 0; ell <= top; ++ell)
            if (std::abs(ellipse_metric(z, ell, rr) - 1.0) < kBand) return ell;
        return -1;
    };
    long bad = degenerate(r);
    if (bad < 0) return r;
    for (double f : {1.0 - 1e-3, 1.0 + 1e-3}) {
        double rr = r * f;
        if (rr < 1.0 && degenerate(rr) < 0) return rr;
    }
    throw ContourError("+-iL_l on the boundary of z E_{c(r),s(r)}", bad);
}

std::vector<int> Contour::S_set(cplx z, double r) const {
    std::vector<int> out;
    int top = max_relevant_ell(z, r);
    for (int ell = 0; ell <= top; ++ell) {
        cplx u = I * L(ell) / z;
        double m = ellipse_metric(z, ell, r);
        if (std::abs(m - 1.0) < kBand) throw ContourError("degenerate S_{r,z,+} membership", ell);
        bool on_segment = u.imag() == 0.0 && std::abs(u.real()) <= 1.0;
        if (m < 1.0 && !on_segment) out.push_back(ell);
    }
    return out;
}

ContourResult Contour::F_r(cplx z, double r, const ContourConfig& cfg) const {
    return circle(z, resolve_radius(z, r), cfg);
}

ContourResult Contour::F_r_res(cplx z, double r) const {
    double rr = resolve_radius(z, r);
    cplx sum = 0.0;
    for (int ell : S_set(z, rr)) sum += G_ell(*this, ell, z);
    return {4.0 * sum, rr, 0};
}

ContourResult Contour::F_r_res_numerical(cplx z, double r) const {
    double rr = resolve_radius(z, r);
    auto ps = poles(z, rr, 1.0);
    cplx sum = 0.0;
    int nodes = 0;
    for (const auto& p : ps) {
        double sep = std::min(std::abs(std::abs(p.w) - rr), 1.0 - std::abs(p.w));
        for (const auto& q : poles(z, 0.5 * rr, 2.0))
            if (q.w != p.w) sep = std::min(sep, std::abs(q.w - p.w));
        double rad = std::min(1e-2, 0.25 * sep) * std::max(1.0, std::abs(p.w));
        auto res = numerical_residue([&](cplx w) { return integrand(z, w); }, p.w, rad, 64);
        sum += res.value;
        nodes = std::max(nodes, res.nodes);
    }
    return {sum, rr, nodes};
}

}  // namespace res_atlas
