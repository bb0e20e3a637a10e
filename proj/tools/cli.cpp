#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "res_atlas/errors.hpp"
#include "res_atlas/verify.hpp"

namespace res_atlas::cli {

namespace {

using nlohmann::ordered_json;

ordered_json multiplicities_json(const Multiplicities& m) {
    return {{"m_l", m.m_l}, {"m_m", m.m_m}, {"m_s", m.m_s}};
}

ordered_json space_json(const SpaceDescriptor& s) {
    auto rho = rho_data(s);
    auto table = reference_table_row(s.family, s.p);
    Rational two_b1 = rho.rho_b1 * Rational(2), two_b2 = rho.rho_b2 * Rational(2);
    ordered_json j;
    j["label"] = s.label();
    j["p"] = s.p ? ordered_json(*s.p) : ordered_json(nullptr);
    j["multiplicities"] = multiplicities_json(s.m);
    j["hermitian"] = s.hermitian;
    j["continuation_excluded"] = s.continuation_excluded;
    j["two_rho"] = {two_b1.str(), two_b2.str()};
    j["rho_norm_sq"] = rho.rho_norm_sq.str();
    j["rho_tilde_long"] = rho.rho_tilde_long.str();
    j["rho_tilde_mid"] = rho.rho_tilde_mid.str();
    j["L_sq_over_b2"] = rho.L_sq_over_b2.str();
    j["L_over_b"] = rho.L / s.b;
    j["L_table"] = table.L_text;
    ordered_json flags = ordered_json::array();
    if (table.two_rho_b1 != two_b1 || table.two_rho_b2 != two_b2) flags.push_back("two_rho");
    if (table.rho_tilde_long != rho.rho_tilde_long || table.rho_tilde_mid != rho.rho_tilde_mid)
        flags.push_back("rho_tilde");
    if (table.L_sq_over_b2 != rho.L_sq_over_b2) flags.push_back("L");
    j["table_discrepancies"] = flags;
    if (table.two_rho_b1 != two_b1 || table.two_rho_b2 != two_b2)
        j["table_two_rho"] = {table.two_rho_b1.str(), table.two_rho_b2.str()};
    return j;
}

ordered_json catalog_json(double b) {
    ordered_json fams = ordered_json::array();
    for (Family f : {Family::AIII, Family::BDI, Family::CII, Family::DIII, Family::EIII}) {
        ordered_json jf;
        jf["family"] = std::string(family_name(f));
        jf["parametric"] = family_is_parametric(f);
        ordered_json spaces = ordered_json::array();
        for (const auto& s : default_catalog())
            if (s.family == f) {
                SpaceDescriptor t = s;
                t.b = b;
                spaces.push_back(space_json(t));
            }
        jf["spaces"] = spaces;
        fams.push_back(jf);
    }
    return {{"b", b}, {"families", fams}};
}

std::string members_text(const Resonance& r) {
    std::ostringstream o;
    o << "[";
    for (std::size_t i = 0; i < r.members.size(); ++i)
        o << (i ? "," : "") << "(" << r.members[i].ell << "," << r.members[i].k << ")";
    o << "]";
    return o.str();
}

struct Row {
    Resonance r;
    std::vector<LatticePoint> lambdas;
    std::vector<double> weights;
};

std::vector<Row> resonance_rows(const SpaceDescriptor& s, const Rational& bound, const SpectralSymbol& sym) {
    Plancherel pl(s);
    std::vector<Row> rows;
    for (auto& r : enumerate_resonances(s, bound)) {
        Row row{r, residue_operator_spectrum(s, r), {}};
        for (const auto& m : r.members) {
            int M = m.ell + s.m.m_m / 2 + m.k;
            double Ll = L_ell(s, m.ell), LM = L_ell(s, M);
            double w = LM / (Ll * Ll) * C_lm(pl, m.ell, M);
            row.weights.push_back(w * sym(Ll / s.b, LM / s.b).real());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json rows_json(const SpaceDescriptor& s, const Rational& bound, const std::string& symbol,
                       const std::vector<Row>& rows) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) {
        ordered_json j;
        j["h"] = row.r.h;
        j["radius_sq"] = row.r.radius_sq().str();
        j["abs_z_over_b"] = row.r.abs_z_over_b();
        ordered_json mem = ordered_json::array();
        for (const auto& m : row.r.members) mem.push_back({m.ell, m.k});
        j["members"] = mem;
        ordered_json lam = ordered_json::array();
        for (const auto& l : row.lambdas) lam.push_back({l.x1.str(), l.x2.str()});
        j["lambda"] = lam;
        j["weights"] = row.weights;
        ordered_json al = ordered_json::array();
        for (const auto& a : row.r.aliases) al.push_back({a.ell, a.m});
        j["aliases"] = al;
        j["on_branch_point"] = on_branch_point(s, row.r);
        arr.push_back(j);
    }
    return {{"space", s.label()}, {"b", s.b}, {"max_radius_sq", bound.str()}, {"N", auto_N(s, bound)},
            {"symbol", symbol}, {"resonances", arr}};
}

void rows_csv(std::ostream& o, const std::vector<Row>& rows) {
    o << "h,radius_sq,abs_z_over_b,members,lambda,weights,aliases\n";
    for (const auto& row : rows) {
        o << row.r.h << "," << row.r.radius_sq().str() << ",";
        ordered_json f = row.r.abs_z_over_b();
        o << f.dump() << ",\"" << members_text(row.r) << "\",\"[";
        for (std::size_t i = 0; i < row.lambdas.size(); ++i)
            o << (i ? "," : "") << "(" << row.lambdas[i].x1.str() << "," << row.lambdas[i].x2.str() << ")";
        o << "]\",\"" << ordered_json(row.weights).dump() << "\",\"[";
        for (std::size_t i = 0; i < row.r.aliases.size(); ++i)
            o << (i ? "," : "") << "(" << row.r.aliases[i].ell << "," << row.r.aliases[i].m << ")";
        o << "]\"\n";
    }
}

ordered_json report_json(const SuiteReport& rep) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name},
                          {"space", c.space},
                          {"max_error", c.max_error},
                          {"tolerance", c.tolerance},
                          {"passed", c.passed},
                          {"detail", c.detail}});
    return {{"suite", rep.suite}, {"passed", rep.passed()}, {"checks", checks}};
}

ordered_json cplx_json(cplx z) { return {z.real(), z.imag()}; }

std::vector<double> parse_numbers(const std::string& s) {
    std::vector<double> v;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        std::size_t used = 0;
        v.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("bad number: " + tok);
    }
    return v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Resonances of the Laplacian on rank-two Riemannian symmetric spaces"};
    app.require_subcommand(1);

    double b = 1.0;
    std::string space_sel, format = "json", out_path, symbol = "one", lambda_text, bound_text, suite;
    std::uint64_t seed = 1;
    int count = 0;
    double tol = 0.0;
    app.add_option("--b", b, "scale of the metric")->check(CLI::PositiveNumber);

    auto* cat = app.add_subcommand("catalog", "list the catalog");
    cat->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));

    auto* den = app.add_subcommand("density", "evaluate the Plancherel density");
    den->add_option("--space", space_sel)->required();
    den->add_option("--lambda", lambda_text, "re1,im1,re2,im2")->required();

    auto* res = app.add_subcommand("resonances", "resonance table");
    res->add_option("--space", space_sel)->required();
    auto* bound_opt = res->add_option("--max-radius-sq", bound_text, "bound on |z|^2/b^2 (rational)");
    auto* count_opt = res->add_option("--count", count, "number of resonances")->check(CLI::PositiveNumber);
    bound_opt->excludes(count_opt);
    res->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    res->add_option("--out", out_path);
    res->add_option("--symbol", symbol);

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--suite", suite)->required();
    ver->add_option("--space", space_sel);
    ver->add_option("--seed", seed);
    ver->add_option("--tol", tol, "tolerance multiplier (overrides RES_ATLAS_TOL)")->check(CLI::PositiveNumber);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        if (*cat) {
            auto j = catalog_json(b);
            if (format == "json") {
                out << j.dump(2) << "\n";
            } else {
                out << "label,m_l,m_m,m_s,two_rho_b1,two_rho_b2,rho_tilde_long,rho_tilde_mid,L_sq_over_b2,"
                       "hermitian,continuation_excluded,table_discrepancies\n";
                for (const auto& f : j["families"])
                    for (const auto& s : f["spaces"]) {
                        std::string flags;
                        for (const auto& x : s["table_discrepancies"])
                            flags += (flags.empty() ? "" : ";") + x.get<std::string>();
                        out << s["label"].get<std::string>() << "," << s["multiplicities"]["m_l"] << ","
                            << s["multiplicities"]["m_m"] << "," << s["multiplicities"]["m_s"] << ","
                            << s["two_rho"][0].get<std::string>() << "," << s["two_rho"][1].get<std::string>()
                            << "," << s["rho_tilde_long"].get<std::string>() << ","
                            << s["rho_tilde_mid"].get<std::string>() << ","
                            << s["L_sq_over_b2"].get<std::string>() << "," << s["hermitian"] << ","
                            << s["continuation_excluded"] << "," << flags << "\n";
                    }
            }
            return kOk;
        }
        if (*den) {
            auto v = parse_numbers(lambda_text);
            if (v.size() != 4) throw std::invalid_argument("--lambda needs re1,im1,re2,im2");
            Plancherel pl(catalog_lookup(space_sel, b));
            SpectralPoint l{{v[0], v[1]}, {v[2], v[3]}};
            ordered_json j;
            j["space"] = pl.space().label();
            j["lambda"] = {cplx_json(l.x1), cplx_json(l.x2)};
            j["density_direct"] = cplx_json(pl.density_direct(l));
            try {
                auto parts = pl.density_factored(l);
                j["density_factored"] = cplx_json(parts.product);
                j["Pi"] = cplx_json(parts.Pi);
                j["P"] = cplx_json(parts.P);
                j["Q"] = cplx_json(parts.Q);
            } catch (const PoleError& e) {
                j["density_factored"] = nullptr;
                j["note"] = e.what();
            }
            j["c_hc"] = cplx_json(pl.c_hc(l));
            out << j.dump(2) << "\n";
            return kOk;
        }
        if (*res) {
            auto s = catalog_lookup(space_sel, b);
            if (s.continuation_excluded) {
                err << "error: " << s.label() << " is excluded from continuation (SO0(p,2) with p odd)\n";
                return kExcluded;
            }
            Rational bound;
            if (!bound_text.empty()) bound = Rational::parse(bound_text);
            else bound = enumerate_first(s, count > 0 ? count : 10).back().radius_sq();
            auto sym = symbol_by_name(symbol);
            auto rows = resonance_rows(s, bound, sym);
            std::ostringstream buf;
            if (format == "json") buf << rows_json(s, bound, symbol, rows).dump(2) << "\n";
            else rows_csv(buf, rows);
            if (out_path.empty()) {
                out << buf.str();
            } else {
                std::ofstream f(out_path, std::ios::binary);
                if (!f) throw std::runtime_error("cannot write " + out_path);
                f << buf.str();
            }
            return kOk;
        }
        if (*ver) {
            VerifyOptions o;
            o.seed = seed;
            o.tol_scale = tol > 0 ? tol : tol_scale_from_env();
            if (!space_sel.empty()) o.spaces = {catalog_lookup(space_sel, b)};
            std::vector<std::string> suites;
            if (suite == "all") suites = suite_names();
            else suites = {suite};
            for (const auto& n : suites)
                if (std::find(suite_names().begin(), suite_names().end(), n) == suite_names().end()) {
                    err << "error: unknown suite " << n << "\n";
                    return kUsage;
                }
            ordered_json reports = ordered_json::array();
            bool ok = true;
            for (const auto& n : suites) {
                auto rep = run_suite(n, o);
                ok = ok && rep.passed();
                reports.push_back(report_json(rep));
            }
            out << (suites.size() == 1 ? reports[0] : ordered_json{{"suites", reports}, {"passed", ok}}).dump(2)
                << "\n";
            return ok ? kOk : kVerifyFailed;
        }
    } catch (const ExcludedSpaceError& e) {
        err << "error: " << e.what() << "\n";
        return kExcluded;
    } catch (const CatalogError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const PoleError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace res_atlas::cli
