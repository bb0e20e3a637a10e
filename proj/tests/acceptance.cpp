#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "res_atlas/verify.hpp"

using namespace res_atlas;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void report(int id, const char* title, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
}

Outcome from_checks(const SuiteReport& rep, std::function<bool(const CheckResult&)> keep = {}) {
    Outcome o;
    double worst = 0;
    int n = 0;
    std::ostringstream bad;
    for (const auto& c : rep.checks) {
        if (keep && !keep(c)) continue;
        ++n;
        if (c.tolerance > 0) worst = std::max(worst, c.max_error / c.tolerance);
        if (!c.passed) {
            o.pass = false;
            bad << " " << c.space << "/" << c.name << "=" << c.max_error;
        }
    }
    std::ostringstream s;
    s << n << " checks, worst error/tolerance " << worst;
    if (!o.pass) s << "; failing:" << bad.str();
    if (n == 0) {
        o.pass = false;
        s << "; nothing checked";
    }
    o.detail = s.str();
    return o;
}

VerifyOptions spaces(std::initializer_list<const char*> sels) {
    VerifyOptions o;
    for (auto s : sels) o.spaces.push_back(catalog_lookup(s));
    return o;
}

Outcome catalog_fidelity() {
    Outcome o;
    std::ostringstream bad;
    int rows = 0;
    std::vector<std::string> L_rows;
    for (const auto& s : default_catalog(6)) {
        auto t = reference_table_row(s.family, s.p);
        auto r = rho_data(s);
        ++rows;
        auto fail = [&](const std::string& what, const Rational& got, const Rational& want) {
            o.pass = false;
            bad << " " << s.label() << " " << what << " computed " << got << " table " << want << ";";
        };
        if (!(t.m == s.m)) {
            o.pass = false;
            bad << " " << s.label() << " multiplicities;";
        }
        if (r.rho_b1 * Rational(2) != t.two_rho_b1) fail("2rho_1", r.rho_b1 * Rational(2), t.two_rho_b1);
        if (r.rho_b2 * Rational(2) != t.two_rho_b2) fail("2rho_2", r.rho_b2 * Rational(2), t.two_rho_b2);
        if (r.rho_tilde_long != t.rho_tilde_long) fail("rho~_long", r.rho_tilde_long, t.rho_tilde_long);
        if (r.rho_tilde_mid != t.rho_tilde_mid) fail("rho~_mid", r.rho_tilde_mid, t.rho_tilde_mid);
        if (r.L_sq_over_b2 != t.L_sq_over_b2) {
            std::ostringstream l;
            l << s.label() << " L^2/b^2 " << r.L_sq_over_b2 << " vs " << t.L_sq_over_b2;
            L_rows.push_back(l.str());
        }
    }
    std::ostringstream s;
    s << rows << " rows;" << (o.pass ? " all match" : bad.str()) << " L-row differences reported: "
      << L_rows.size();
    for (const auto& l : L_rows) s << " [" << l << "]";
    o.detail = s.str();
    return o;
}

Outcome monodromy() {
    Outcome o;
    auto space = catalog_lookup("DIII");
    Contour ct(Plancherel(space), symbol_one());
    const int N = 4;
    double worst = 0;
    std::ostringstream bad;
    for (int ell = 0; ell <= 3; ++ell) {
        cplx c(0.0, -ct.L(ell));
        double R = 0.25 * space.b;
        std::vector<int> base(N + 1, 1);
        auto start = make_sheet_point(space, N, c + R, base);
        auto once = continue_along_path(ct, start, circle_path(c, R, 64, 1), true);
        auto expect = base;
        expect[ell] = -1;
        if (once.end.eps != expect) {
            o.pass = false;
            bad << " l=" << ell << " single loop sheet wrong;";
        }
        auto twice = continue_along_path(ct, start, circle_path(c, R, 128, 2), false);
        if (twice.end.eps != base) {
            o.pass = false;
            bad << " l=" << ell << " double loop not restored;";
        }
        for (const auto& t : once.trace) {
            auto direct = F_tilde(ct, make_sheet_point(space, N, t.z, t.eps)).value;
            worst = std::max(worst, relative_error(*t.F_tilde, direct));
        }
    }
    if (worst >= 1e-8) {
        o.pass = false;
        bad << " trace mismatch;";
    }
    std::ostringstream s;
    s << "DIII N=4 l<=3, max relative trace error " << worst << (o.pass ? "" : ";") << bad.str();
    o.detail = s.str();
    return o;
}

Outcome first_resonance() {
    Outcome o;
    std::ostringstream s, bad;
    int n = 0;
    for (const auto& sp : continuation_catalog()) {
        auto r = enumerate_first(sp, 1).at(0);
        ++n;
        if (r.radius_sq() != rho_data(sp).rho_norm_sq) {
            o.pass = false;
            bad << " " << sp.label() << " " << r.radius_sq() << " vs <rho,rho> " << rho_data(sp).rho_norm_sq << ";";
        }
    }
    s << "radius_sq == <rho,rho> on " << n << " spaces" << (o.pass ? " ok" : bad.str()) << ";";
    struct Listed {
        const char* sel;
        Rational value;
    };
    for (auto [sel, want] : {Listed{"DIII", Rational(29, 2)}, Listed{"EIII", Rational(89, 4)},
                             Listed{"AIII:3", Rational(5)}, Listed{"CII:2", Rational(106, 4)}}) {
        auto got = enumerate_first(catalog_lookup(sel), 1).at(0).radius_sq();
        s << " " << sel << " " << got;
        if (got != want) {
            o.pass = false;
            s << " (listed " << want << ")";
        }
    }
    o.detail = s.str();
    return o;
}

Outcome scan_agreement() {
    Outcome o;
    auto space = catalog_lookup("DIII");
    Contour ct(Plancherel(space), symbol_one());
    const int N = 3;
    auto found = scan_poles(ct, N);
    std::vector<double> expect;
    for (const auto& r : enumerate_first(space, 20))
        if (r.abs_z_over_b() * space.b < ct.L(N + 1)) expect.push_back(r.abs_z_over_b() * space.b);
    std::ostringstream s;
    s << found.size() << " detected, " << expect.size() << " enumerated below L_4";
    double worst = 0;
    std::vector<bool> used(found.size(), false);
    int missing = 0;
    for (double e : expect) {
        int best = -1;
        for (std::size_t i = 0; i < found.size(); ++i)
            if (!used[i] && std::abs(found[i].z - cplx(0, -e)) < 1e-6 * space.b) best = static_cast<int>(i);
        if (best < 0) {
            ++missing;
            continue;
        }
        used[best] = true;
        worst = std::max(worst, std::abs(found[best].z - cplx(0, -e)));
    }
    int spurious = static_cast<int>(std::count(used.begin(), used.end(), false));
    o.pass = missing == 0 && spurious == 0;
    s << ", missing " << missing << ", spurious " << spurious << ", max |dz| " << worst;
    o.detail = s.str();
    return o;
}

}  // namespace

int main() {
    report(1, "catalog fidelity", catalog_fidelity);

    VerifyOptions all;
    all.spaces = default_catalog(6);
    auto plancherel = run_suite("plancherel", all);
    report(2, "normalization", [&] {
        return from_checks(plancherel, [](const CheckResult& c) { return c.name == "normalization"; });
    });
    report(3, "factorization oracle", [&] {
        return from_checks(plancherel, [](const CheckResult& c) { return c.name == "direct_vs_factored"; });
    });
    report(4, "symmetry suite", [] { return from_checks(run_suite("symmetry", {})); });
    report(5, "deformation identity", [] { return from_checks(run_suite("deformation", spaces({"DIII", "CII:2"}))); });
    report(6, "residue closed forms",
           [] { return from_checks(run_suite("residues", spaces({"DIII", "EIII", "CII:2"}))); });
    report(7, "cancellation exactness", [] { return from_checks(run_suite("cancellation", {})); });
    report(8, "monodromy", monodromy);
    report(9, "first resonance", first_resonance);
    report(10, "enumeration vs detected poles", scan_agreement);

    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
