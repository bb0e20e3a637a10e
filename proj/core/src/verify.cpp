#include "res_atlas/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "res_atlas/errors.hpp"

namespace res_atlas {

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
    CheckResult r;
    Check(std::string name, const SpaceDescriptor& s, double tol) {
        r.name = std::move(name);
        r.space = s.label();
        r.tolerance = tol;
    }
    void add(double err) {
        r.max_error = std::isnan(err) ? INFINITY : std::max(r.max_error, err);
    }
    void finish(SuiteReport& rep, bool ok = true, std::string detail = {}) {
        r.passed = ok && r.max_error <= r.tolerance;
        r.detail = std::move(detail);
        rep.checks.push_back(std::move(r));
    }
};

std::vector<SpectralSymbol> symbols_of(const VerifyOptions& o) {
    return o.symbols.empty() ? builtin_symbols() : o.symbols;
}

// Radius between the inner roots of families count-1 and count, for |z| < L_0.
double inner_radius(const Contour& ct, cplx z, int count) {
    double a = std::abs(w1_plus(ct.space(), count - 1, z));
    double c = std::abs(w1_plus(ct.space(), count, z));
    return std::sqrt(a * c);
}

double chart_radius(const SpaceDescriptor& s, int ell, int m) {
    cplx z0 = zeta_lm(s, ell, m);
    double d = std::abs(z0 - cplx(0, 1));
    for (int j = 0; j <= m + 6; ++j)
        if (j != m) d = std::min(d, std::abs(zeta_lm(s, ell, j) - z0));
    return std::min(1e-3, 0.25 * d);
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

double relative_error(cplx a, cplx b) {
    double s = std::max(std::abs(a), std::abs(b));
    return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

double tol_scale_from_env() {
    const char* v = std::getenv("RES_ATLAS_TOL");
    if (!v) return 1.0;
    char* end = nullptr;
    double x = std::strtod(v, &end);
    return (end != v && x > 0 && std::isfinite(x)) ? x : 1.0;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"plancherel", "symmetry",     "deformation",
                                                   "residues",   "cancellation", "enumeration"};
    return names;
}

void verify_plancherel(const SpaceDescriptor& s, const VerifyOptions& o, SuiteReport& rep) {
    Plancherel pl(s);
    double t = o.tol_scale;

    Check norm("normalization", s, 1e-11 * t);
    norm.add(std::abs(pl.c_hc({pl.rho().rho_b1.to_double(), pl.rho().rho_b2.to_double()}) - 1.0));
    norm.finish(rep);

    Check fac("direct_vs_factored", s, 1e-10 * t);
    Check weyl("weyl_invariance", s, 1e-10 * t);
    std::uint64_t state = o.seed;
    for (int i = 0; i < 100; ++i) {
        auto l = random_generic_lambda(pl, state);
        cplx d = pl.density_direct(l);
        fac.add(relative_error(d, pl.density_factored(l).product));
        if (i < 20) {
            for (SpectralPoint w : {SpectralPoint{-l.x1, l.x2}, SpectralPoint{l.x1, -l.x2},
                                    SpectralPoint{l.x2, l.x1}, SpectralPoint{-l.x2, -l.x1}})
                weyl.add(relative_error(d, pl.density_direct(w)));
        }
    }
    fac.finish(rep);
    weyl.finish(rep);

    if (!s.continuation_excluded) {
        Check prod("rank_one_product", s, 1e-10 * t);
        prod.add(factorization_identity_check(pl, 100, o.seed).max_rel_err);
        prod.finish(rep);

        Check odd("rank_one_parity", s, 1e-12 * t);
        std::mt19937_64 rng(o.seed);
        std::uniform_real_distribution<double> u(-3, 3);
        for (int i = 0; i < 50; ++i) {
            cplx x(u(rng), u(rng));
            odd.add(relative_error(pl.p1(-x), pl.p1(x)));
            odd.add(relative_error(pl.q1(-x), -pl.q1(x)));
            odd.add(relative_error(pl.p1q1(-x), -pl.p1q1(x)));
        }
        odd.finish(rep);
    }
}

void verify_symmetry(const SpaceDescriptor& s, const VerifyOptions& o, SuiteReport& rep) {
    if (s.continuation_excluded) throw ExcludedSpaceError(s.label() + " is excluded from continuation");
    Plancherel pl(s);
    double b = s.b;
    const cplx I(0, 1);
    for (const auto& sym : symbols_of(o)) {
        Contour ct(pl, sym);
        std::mt19937_64 rng(o.seed);
        std::uniform_real_distribution<double> uz(-3.0 * b, 3.0 * b), ur(0.5, 1.5), ut(0, 2 * kPi);
        Check psi("psi_identities/" + sym.name, s, 1e-11 * o.tol_scale);
        Check phi("phi_identities/" + sym.name, s, 1e-11 * o.tol_scale);
        Check th("vartheta_identities/" + sym.name, s, 1e-11 * o.tol_scale);
        for (int i = 0; i < 200; ++i) {
            cplx z(uz(rng), uz(rng));
            cplx w = std::polar(ur(rng), ut(rng));
            cplx p = ct.psi_z(z, w);
            psi.add(relative_error(ct.psi_z(-z, w), p));
            psi.add(relative_error(ct.psi_z(z, -w), p));
            psi.add(relative_error(ct.psi_z(z, I * w), p));
            cplx f = ct.phi_z(z, w);
            phi.add(relative_error(ct.phi_z(-z, w), f));
            phi.add(relative_error(ct.phi_z(z, -w), -f));
            phi.add(relative_error(ct.phi_z(z, I * w), -I * f));
            cplx v = ct.vartheta_z(z, w);
            th.add(relative_error(ct.vartheta_z(-z, w), v));
            th.add(relative_error(ct.vartheta_z(z, -w), v));
            th.add(relative_error(ct.vartheta_z(z, I * w), v));
        }
        psi.finish(rep);
        phi.finish(rep);
        th.finish(rep);

        Check even("F_even/" + sym.name, s, 1e-10 * o.tol_scale);
        std::uniform_real_distribution<double> ux(0.1 * b, 2.0 * b), sg(0, 1);
        ContourConfig cfg;
        cfg.tol = 1e-12;
        for (int i = 0; i < 20; ++i) {
            cplx z(ux(rng) * (sg(rng) < 0.5 ? -1 : 1), uz(rng));
            even.add(relative_error(ct.F(z, cfg).value, ct.F(-z, cfg).value));
        }
        even.finish(rep);
    }
}

std::vector<cplx> deformation_points(const Contour& ct, int n, int count) {
    double b = ct.b();
    double lo = n < 0 ? 0.2 * ct.L(0) : ct.L(n);
    double hi = ct.L(n + 1);
    if (n < 0) hi = ct.L(0);
    std::vector<cplx> out;
    for (int j = 0; j < count; ++j) {
        double v = lo + (hi - lo) * (j + 0.5) / count;
        double d = (j % 2 == 0 ? 1.0 : -1.0) * (j % 4 < 2 ? 0.1 : 0.2) * b;
        out.push_back({d, -v});
    }
    return out;
}

void verify_deformation(const SpaceDescriptor& s, const VerifyOptions& o, SuiteReport& rep) {
    if (s.continuation_excluded) throw ExcludedSpaceError(s.label() + " is excluded from continuation");
    Plancherel pl(s);
    for (const auto& sym : symbols_of(o)) {
        Contour ct(pl, sym);
        for (int n = -1; n <= 2; ++n) {
            std::string tag = sym.name + "/n=" + std::to_string(n);
            Check id("identity/" + tag, s, 1e-8 * o.tol_scale);
            Check res("residue_sum/" + tag, s, 1e-8 * o.tol_scale);
            int missing = 0;
            for (cplx z : deformation_points(ct, n, 10)) {
                auto r = segment_radius(ct, n, z);
                if (!r) {
                    ++missing;
                    continue;
                }
                cplx F = ct.F(z).value;
                cplx Fr = ct.F_r(z, *r).value;
                cplx closed = ct.F_r_res(z, *r).value;
                cplx numeric = ct.F_r_res_numerical(z, *r).value;
                id.add(relative_error(F, Fr + 2.0 * kPi * cplx(0, 1) * closed));
                res.add(relative_error(closed, numeric));
            }
            std::string d = missing ? std::to_string(missing) + " points without a separating radius" : "";
            id.finish(rep, missing == 0, d);
            res.finish(rep, missing == 0, d);
        }
        // below L_0 with the l = 0 poles captured; F is small there, so the
        // error is taken relative to the largest term
        Check cap("identity_captured/" + sym.name, s, 1e-8 * o.tol_scale);
        for (cplx z : deformation_points(ct, -1, 10)) {
            double r = inner_radius(ct, z, 1);
            cplx F = ct.F(z).value;
            cplx Fr = ct.F_r(z, r).value;
            cplx R = 2.0 * kPi * cplx(0, 1) * ct.F_r_res(z, r).value;
            double scale = std::max({std::abs(F), std::abs(Fr), std::abs(R)});
            cap.add(std::abs(F - Fr - R) / scale);
        }
        cap.finish(rep);
    }
}

void verify_residues(const SpaceDescriptor& s, const VerifyOptions& o, SuiteReport& rep) {
    if (s.continuation_excluded) throw ExcludedSpaceError(s.label() + " is excluded from continuation");
    Plancherel pl(s);
    for (const auto& sym : symbols_of(o)) {
        Contour ct(pl, sym);
        Check chart("chart_residue/" + sym.name, s, 1e-8 * o.tol_scale);
        Check pos("C_lm_positive/" + sym.name, s, 0.0);
        int nonpositive = 0;
        for (int ell = 0; ell <= 3; ++ell) {
            int found = 0;
            for (int m = 0; found < 3; ++m) {
                if (is_cancelled(s, ell, m)) continue;
                ++found;
                double rad = chart_radius(s, ell, m);
                for (int sign : {-1, 1}) {
                    auto closed = residue_G_tilde(ct, ell, m, sign);
                    if (!(closed.C_lm > 0)) ++nonpositive;
                    auto f = [&](cplx zt) { return G_tilde_chart(ct, ell, sign, zt); };
                    for (cplx c : {zeta_lm(s, ell, m), -zeta_lm(s, ell, m)}) {
                        auto num = numerical_residue(f, c, rad);
                        chart.add(relative_error(closed.value, num.value));
                    }
                }
            }
        }
        chart.finish(rep);
        pos.finish(rep, nonpositive == 0, nonpositive ? std::to_string(nonpositive) + " non-positive" : "");
    }

    // F~ residues at the first resonances on a few sheets, sigma = 1
    Contour ct(pl, symbol_one());
    Check ft("F_tilde_residue", s, 1e-7 * o.tol_scale);
    auto list = enumerate_first(s, 3);
    int skipped = 0;
    for (const auto& r : list) {
        if (on_branch_point(s, r)) {
            ++skipped;
            continue;
        }
        int n = resonance_segment(s, r);
        int N = n + 1;
        for (int variant = 0; variant < 3; ++variant) {
            std::vector<int> eps(N + 1, 1);
            if (variant == 1) eps[0] = -1;
            if (variant == 2) eps[n] = -1;
            auto sum = residue_summary(ct, r, n, eps);
            auto pt = make_sheet_point(s, N, r.location(s.b), eps);
            auto num = F_tilde_chart_residue(ct, pt, n);
            double scale = std::max(std::abs(sum.residue_F), 1e-3 * num.magnitude);
            ft.add(scale == 0.0 ? 0.0 : std::abs(sum.residue_F - num.value) / scale);
        }
    }
    ft.finish(rep, true, skipped ? std::to_string(skipped) + " resonances on a branch point skipped" : "");
}

void verify_cancellation(const SpaceDescriptor& s, const VerifyOptions& o, SuiteReport& rep) {
    if (s.continuation_excluded) throw ExcludedSpaceError(s.label() + " is excluded from continuation");
    Plancherel pl(s);
    Contour ct(pl, symbol_one());
    int h = s.m.m_m / 2 - 1;
    Check exact("zero_set", s, 0.0);
    Check num("numerical_residue", s, 1e-10 * o.tol_scale);
    std::ostringstream bad;
    for (int ell = 0; ell <= 4; ++ell) {
        for (int m = 0; m <= 12; ++m) {
            bool zero = pl.vartheta0(L_ell_over_b(s, ell), L_ell_over_b(s, m)) == Rational(0);
            bool expect = m >= ell - h && m <= ell + h;
            if (zero != expect) bad << "(" << ell << "," << m << ") ";
            if (!zero) continue;
            double rad = chart_radius(s, ell, m);
            auto f = [&](cplx zt) { return G_tilde_chart(ct, ell, -1, zt); };
            auto res = numerical_residue(f, zeta_lm(s, ell, m), rad);
            // compared with the size of the chart function on the circle
            num.add(std::abs(res.value) / std::max(1.0, res.magnitude));
        }
    }
    exact.finish(rep, bad.str().empty(), bad.str().empty() ? "" : "mismatch at " + bad.str());
    num.finish(rep);
}

void verify_enumeration(const SpaceDescriptor& s, const VerifyOptions& o, SuiteReport& rep) {
    (void)o;
    if (s.continuation_excluded) throw ExcludedSpaceError(s.label() + " is excluded from continuation");
    auto rho = rho_data(s);
    auto list = enumerate_first(s, 30);

    Check first("first_resonance", s, 0.0);
    first.finish(rep, !list.empty() && list.front().radius_sq() == rho.rho_norm_sq,
                 list.empty() ? "empty" : list.front().radius_sq().str() + " vs " + rho.rho_norm_sq.str());

    // independent lattice scan
    Rational bound = list.back().radius_sq();
    std::map<Rational, int> brute;
    Rational rt = rho.rho_tilde_long;
    for (int ell = 0;; ++ell) {
        Rational x = rt + Rational(ell);
        if (x * x > bound) break;
        for (int k = 0;; ++k) {
            Rational y = rt + Rational(ell + s.m.m_m / 2 + k);
            Rational q = x * x + y * y;
            if (q > bound) break;
            ++brute[q];
        }
    }
    bool same = brute.size() == list.size();
    std::size_t i = 0;
    for (auto it = brute.begin(); same && it != brute.end(); ++it, ++i)
        same = it->first == list[i].radius_sq() && it->second == static_cast<int>(list[i].members.size());
    Check scan("lattice_scan", s, 0.0);
    scan.finish(rep, same);

    Check fin("finite_dimensional", s, 0.0);
    bool ok = true;
    for (const auto& r : list) {
        auto spec = residue_operator_spectrum(s, r);
        std::set<std::pair<Rational, Rational>> seen;
        for (const auto& m : r.members) {
            ok = ok && finite_dim_check(s, m.ell, m.ell + m.k).finite;
        }
        for (const auto& p : spec) ok = ok && seen.insert({p.x1, p.x2}).second;
    }
    fin.finish(rep, ok);
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts) {
    SuiteReport rep;
    rep.suite = name;
    using Fn = void (*)(const SpaceDescriptor&, const VerifyOptions&, SuiteReport&);
    static const std::map<std::string, Fn> table = {
        {"plancherel", verify_plancherel},     {"symmetry", verify_symmetry},
        {"deformation", verify_deformation},   {"residues", verify_residues},
        {"cancellation", verify_cancellation}, {"enumeration", verify_enumeration}};
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown suite: " + name);
    std::vector<SpaceDescriptor> spaces = opts.spaces;
    if (spaces.empty()) {
        if (name == "plancherel") spaces = default_catalog();
        else if (name == "deformation") spaces = {catalog_lookup("DIII"), catalog_lookup("CII:2")};
        else if (name == "residues")
            spaces = {catalog_lookup("DIII"), catalog_lookup("EIII"), catalog_lookup("CII:2")};
        else spaces = continuation_catalog();
    }
    for (const auto& s : spaces) it->second(s, opts, rep);
    return rep;
}

}  // namespace res_atlas
