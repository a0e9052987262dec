// Command-line front end. Every library operation is reachable as a
// subcommand with machine-readable output: exact integers and rationals
// are printed as decimal strings, floating-point values appear only where
// the quantity is inherently approximate and carry a precision marker.
// Usage errors exit 2; computation errors exit 1 with a JSON object on
// stderr; `scan` additionally exits 1 when a theorem-identity check fails.

#include <CLI11.hpp>
#include <json.hpp>

#include <hexpoly/families.hpp>
#include <hexpoly/hexsys.hpp>
#include <hexpoly/limits.hpp>
#include <hexpoly/realroots.hpp>
#include <hexpoly/resonance.hpp>
#include <hexpoly/scan.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;
using namespace hexpoly;

constexpr const char* kFloatPrecision = "ieee-754-double";

Polynomial poly(std::vector<BigInt> coeffs) { return Polynomial(std::move(coeffs)); }

json poly_coeffs(const Polynomial& f) {
    if (f.is_zero()) return json::array({"0"});
    json arr = json::array();
    for (int i = 0; i <= f.degree(); ++i) arr.push_back(f[i].str());
    return arr;
}

std::string rational_str(const Rational& r) { return to_string(r); }

void print_polynomial(const Polynomial& f, const std::string& format) {
    if (format == "plain")
        std::cout << f.to_string() << "\n";
    else
        std::cout << poly_coeffs(f).dump() << "\n";
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string item;
    for (char c : text) {
        if (c == ',') {
            if (!item.empty()) out.push_back(item);
            item.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            item += c;
        }
    }
    if (!item.empty()) out.push_back(item);
    return out;
}

Polynomial parse_coeffs(const std::string& text) {
    std::vector<BigInt> c;
    for (const std::string& item : split_list(text)) c.emplace_back(item);
    if (c.empty()) throw std::invalid_argument("empty coefficient list");
    return Polynomial(std::move(c));
}

// Shared flags selecting the polynomial a subcommand operates on.
struct PolySource {
    std::string family;
    int n = -1;
    int m = 0;
    std::string cells;
    std::string coeffs;

    void attach(CLI::App* cmd, bool with_coeffs) {
        cmd->add_option("--family", family,
                        "family id: pyrene, delannoy, line, line-m, u, v");
        cmd->add_option("--n", n, "family index");
        cmd->add_option("--m", m, "segment length (line-m only)");
        cmd->add_option("--cells", cells, "canonical cell code of a hexagonal system");
        if (with_coeffs)
            cmd->add_option("--coeffs", coeffs, "explicit coefficients, constant first");
    }

    Polynomial resolve() const {
        int sources = !family.empty() + !cells.empty() + !coeffs.empty();
        if (sources != 1)
            throw std::invalid_argument(
                "need exactly one of --family, --cells, --coeffs");
        if (!coeffs.empty()) return parse_coeffs(coeffs);
        if (!cells.empty()) return sextet_polynomial(build_from_code(cells));
        if (n < 0) throw std::invalid_argument("--family requires --n");
        if (family == "pyrene") return pyrene(n);
        if (family == "delannoy") return delannoy(n);
        if (family == "line") return line_poly(n);
        if (family == "line-m") {
            if (m < 2) throw std::invalid_argument("line-m requires --m >= 2");
            return line_m_poly(m, n);
        }
        if (family == "u") return u_poly(n);
        if (family == "v") return v_poly(n);
        throw UnknownFamily(family);
    }
};

// Second-order recurrence data behind each family, for the limit-set view.
struct FamilyRecurrence {
    Polynomial a, b, f0, f1;
};

FamilyRecurrence family_recurrence(const std::string& family, int m) {
    const Polynomial x = Polynomial::x();
    if (family == "pyrene")
        return {poly({1, 4, 1}), poly({0, 0, -1}), Polynomial(1), poly({1, 4, 1})};
    if (family == "delannoy")
        return {poly({1, 1}), x, Polynomial(1), poly({1, 1})};
    if (family == "u")
        return {poly({1, 2}), poly({0, 1, -1}), Polynomial(1), poly({1, 1})};
    if (family == "v")
        return {poly({1, 2}), poly({0, 1, -1}), Polynomial(1), poly({1, 2})};
    if (family == "line-m") {
        if (m < 2) throw std::invalid_argument("line-m requires --m >= 2");
        return {poly({1, BigInt(m - 2)}), x, Polynomial(1), poly({1, BigInt(m - 1)})};
    }
    throw UnknownFamily(family);
}

json interval_json(const LimitInterval& part) {
    json j;
    j["lo"] = part.lo_infinite ? json(nullptr) : json(part.lo.str());
    j["hi"] = part.hi_infinite ? json(nullptr) : json(part.hi.str());
    if (!part.lo_infinite) {
        j["lo_value"] = part.lo.to_double();
        j["lo_closed"] = part.lo_closed;
    }
    if (!part.hi_infinite) {
        j["hi_value"] = part.hi.to_double();
        j["hi_closed"] = part.hi_closed;
    }
    return j;
}

json report_json(const ScanReport& r) {
    json j;
    j["code"] = r.code;
    j["hexagons"] = r.hexagons;
    j["kekulean"] = r.kekulean;
    j["kekule"] = r.profile.kekule.str();
    if (r.kekulean) {
        j["clar"] = r.profile.clar;
        j["thin"] = r.profile.thin;
        j["sigma"] = poly_coeffs(r.profile.sigma);
        j["chi"] = poly_coeffs(r.profile.chi);
        j["phi"] = poly_coeffs(r.profile.phi);
    } else {
        j["clar"] = nullptr;
    }
    json checks = json::object();
    for (const auto& [id, result] : r.checks) {
        json entry{{"verdict", verdict_name(result.verdict)}};
        if (!result.detail.empty()) entry["detail"] = result.detail;
        checks[id] = entry;
    }
    j["checks"] = checks;
    return j;
}

const char* error_kind(const std::exception& e) {
    if (dynamic_cast<const NotKekulean*>(&e)) return "not_kekulean";
    if (dynamic_cast<const BudgetExceeded*>(&e)) return "budget_exceeded";
    if (dynamic_cast<const UnknownFamily*>(&e)) return "unknown_family";
    if (dynamic_cast<const HasHole*>(&e)) return "has_hole";
    if (dynamic_cast<const DisconnectedCells*>(&e)) return "disconnected_cells";
    if (dynamic_cast<const DegenerateRecurrence*>(&e)) return "degenerate_recurrence";
    if (dynamic_cast<const UnsupportedDiscriminant*>(&e)) return "unsupported_discriminant";
    if (dynamic_cast<const NotRealRooted*>(&e)) return "not_real_rooted";
    if (dynamic_cast<const std::invalid_argument*>(&e)) return "invalid_argument";
    if (dynamic_cast<const std::domain_error*>(&e)) return "domain_error";
    if (dynamic_cast<const std::length_error*>(&e)) return "length_error";
    return "runtime_error";
}

int run(int argc, char** argv) {
    CLI::App app{"exact sextet, Clar covering, and proper-sextet analytics "
                 "for hexagonal systems"};
    app.require_subcommand(1);
    int exit_code = 0;

    // family <id> --n [--m]
    auto* cmd_family = app.add_subcommand("family", "print a family polynomial");
    std::string family_id, family_format = "json";
    int family_n = 0, family_m = 0;
    cmd_family->add_option("id", family_id, "pyrene, delannoy, line, line-m, u, v")
        ->required();
    cmd_family->add_option("--n", family_n, "index within the family")->required();
    cmd_family->add_option("--m", family_m, "segment length (line-m only)");
    cmd_family->add_option("--format", family_format, "json | plain");
    cmd_family->callback([&] {
        PolySource src;
        src.family = family_id;
        src.n = family_n;
        src.m = family_m;
        print_polynomial(src.resolve(), family_format);
    });

    // sextet | chi | phi --cells <code>
    struct ResonanceCmd {
        const char* name;
        const char* help;
    };
    static const ResonanceCmd resonance_cmds[] = {
        {"sextet", "sextet polynomial of a hexagonal system"},
        {"chi", "Clar covering polynomial of a hexagonal system"},
        {"phi", "proper-sextet polynomial of a hexagonal system"},
    };
    for (const auto& rc : resonance_cmds) {
        auto* cmd = app.add_subcommand(rc.name, rc.help);
        auto cells = std::make_shared<std::string>();
        auto format = std::make_shared<std::string>("json");
        auto parity = std::make_shared<std::string>("odd");
        cmd->add_option("--cells", *cells, "canonical cell code")->required();
        cmd->add_option("--format", *format, "json | plain");
        if (std::string(rc.name) == "phi")
            cmd->add_option("--parity", *parity, "alternation parity: odd | even");
        std::string which = rc.name;
        cmd->callback([&, cells, format, parity, which] {
            HexSystem h = build_from_code(*cells);
            Polynomial f;
            if (which == "sextet") f = sextet_polynomial(h);
            else if (which == "chi") f = clar_covering_polynomial(h);
            else {
                if (*parity != "odd" && *parity != "even")
                    throw std::invalid_argument("parity must be odd or even");
                f = proper_sextet_polynomial(h, *parity == "odd" ? SextetParity::odd
                                                                 : SextetParity::even);
            }
            print_polynomial(f, *format);
        });
    }

    // roots
    auto* cmd_roots = app.add_subcommand(
        "roots", "exact real-root isolation (optionally approximate complex roots)");
    PolySource roots_src;
    roots_src.attach(cmd_roots, true);
    std::string roots_isolate, roots_format = "json";
    bool roots_complex = false;
    cmd_roots->add_option("--isolate", roots_isolate,
                          "maximum isolating-interval width (exact rational)");
    cmd_roots->add_flag("--complex", roots_complex, "include approximate complex roots");
    cmd_roots->add_option("--format", roots_format, "json | csv");
    cmd_roots->callback([&] {
        Polynomial f = roots_src.resolve();
        std::optional<Rational> width;
        if (!roots_isolate.empty()) width = parse_rational(roots_isolate);
        RootIsolation iso = isolate_roots(f, width);
        if (roots_format == "csv") {
            std::cout << "lo,hi,multiplicity\n";
            for (const RootInterval& r : iso.roots)
                std::cout << rational_str(r.lo) << "," << rational_str(r.hi) << ","
                          << r.multiplicity << "\n";
            return;
        }
        json j;
        j["degree"] = f.degree();
        j["real_roots"] = json::array();
        for (const RootInterval& r : iso.roots)
            j["real_roots"].push_back({{"lo", rational_str(r.lo)},
                                       {"hi", rational_str(r.hi)},
                                       {"multiplicity", r.multiplicity}});
        j["nonreal_count"] = iso.nonreal_count;
        if (roots_complex) {
            json approx = json::array();
            for (const ApproxRoot& r : approx_complex_roots(f))
                approx.push_back({{"re", r.value.real()},
                                  {"im", r.value.imag()},
                                  {"residual", r.residual}});
            j["complex_roots"] = approx;
            j["complex_roots_precision"] = kFloatPrecision;
        }
        std::cout << j.dump() << "\n";
    });

    // zeros: closed-form pyrene zero pairs for plotting
    auto* cmd_zeros = app.add_subcommand(
        "zeros", "closed-form pyrene-chain zero pairs as CSV plot data");
    int zeros_n = 0;
    cmd_zeros->add_option("--n", zeros_n, "chain length")->required();
    cmd_zeros->callback([&] {
        std::cout << "family,n,k,root_lo,root_hi\n";
        std::cout.precision(17);
        for (int k = 1; k <= zeros_n; ++k) {
            auto [lo, hi] = pyrene_root(zeros_n, k);
            std::cout << "pyrene," << zeros_n << "," << k << "," << lo << "," << hi
                      << "\n";
        }
    });

    // check --props ...
    auto* cmd_check = app.add_subcommand("check", "coefficient and zero-location properties");
    PolySource check_src;
    check_src.attach(cmd_check, true);
    std::string check_props, check_format = "json";
    cmd_check->add_option("--props", check_props,
                          "comma list: symmetric, unimodal, logconcave, newton, "
                          "realrooted, hurwitz")
        ->required();
    cmd_check->add_option("--format", check_format, "json | plain");
    cmd_check->callback([&] {
        Polynomial f = check_src.resolve();
        json results = json::object();
        bool all = true;
        for (const std::string& prop : split_list(check_props)) {
            bool ok;
            if (prop == "symmetric") ok = f.is_symmetric();
            else if (prop == "unimodal") ok = f.is_unimodal();
            else if (prop == "logconcave") ok = f.is_log_concave();
            else if (prop == "newton") ok = f.newton_check();
            else if (prop == "realrooted") ok = is_real_rooted(f);
            else if (prop == "hurwitz") ok = hurwitz_stable(f);
            else throw std::invalid_argument("unknown property: " + prop);
            results[prop] = ok ? "pass" : "fail";
            all = all && ok;
        }
        if (check_format == "plain") {
            for (const auto& [prop, verdict] : results.items())
                std::cout << prop << ": " << verdict.get<std::string>() << "\n";
            return;
        }
        json j;
        j["coefficients"] = poly_coeffs(f);
        j["properties"] = results;
        j["all"] = all ? "pass" : "fail";
        std::cout << j.dump() << "\n";
    });

    // identities --n-max
    auto* cmd_ident = app.add_subcommand("identities",
                                         "verify the exact pyrene-family identities");
    int ident_n_max = 0;
    cmd_ident->add_option("--n-max", ident_n_max, "largest index checked")->required();
    cmd_ident->callback([&] {
        IdentityReport report = verify_pyrene_identities(ident_n_max);
        json j;
        j["n_max"] = report.n_max;
        j["checks_run"] = report.checks_run;
        j["all_passed"] = report.all_passed();
        j["failures"] = json::array();
        for (const IdentityFailure& f : report.failures)
            j["failures"].push_back(
                {{"identity", f.identity}, {"n", f.n}, {"detail", f.detail}});
        std::cout << j.dump() << "\n";
        if (!report.all_passed()) exit_code = 1;
    });

    // limits --family [--m]
    auto* cmd_limits = app.add_subcommand(
        "limits", "limit set of the real zeros of a recurrence family");
    std::string limits_family;
    int limits_m = 0;
    cmd_limits->add_option("--family", limits_family,
                           "pyrene, delannoy, u, v, line-m")
        ->required();
    cmd_limits->add_option("--m", limits_m, "segment length (line-m only)");
    cmd_limits->callback([&] {
        FamilyRecurrence rec = family_recurrence(limits_family, limits_m);
        IntervalSet set = bkw_limit_set(rec.a, rec.b);
        NondegeneracyReport nd =
            check_bkw_nondegeneracy(rec.a, rec.b, rec.f0, rec.f1, set);
        json j;
        j["family"] = limits_family;
        if (limits_family == "line-m") j["m"] = limits_m;
        j["recurrence"] = {{"a", rec.a.to_string()}, {"b", rec.b.to_string()}};
        j["limit_set"] = set.str();
        j["intervals"] = json::array();
        for (const LimitInterval& part : set.intervals())
            j["intervals"].push_back(interval_json(part));
        j["interval_values_precision"] = kFloatPrecision;
        j["nondegeneracy"] = {{"samples", nd.samples},
                              {"moduli_distinct", nd.moduli_distinct},
                              {"weights_nonzero", nd.weights_nonzero},
                              {"ok", nd.ok()}};
        std::cout << j.dump() << "\n";
    });

    // density --target --eps [--n-cap]
    auto* cmd_density = app.add_subcommand(
        "density", "certified sextet zero near a negative rational target");
    std::string density_target, density_eps;
    int density_cap = 500;
    cmd_density->add_option("--target", density_target, "negative rational")->required();
    cmd_density->add_option("--eps", density_eps, "positive rational tolerance")->required();
    cmd_density->add_option("--n-cap", density_cap, "segmented-branch length cap");
    cmd_density->callback([&] {
        DensityWitness w = density_witness(parse_rational(density_target),
                                           parse_rational(density_eps), density_cap);
        json j;
        j["family"] = w.family;
        j["m"] = w.m;
        j["n"] = w.n;
        j["lo"] = rational_str(w.lo);
        j["hi"] = rational_str(w.hi);
        std::cout << j.dump() << "\n";
    });

    // normality --n
    auto* cmd_norm = app.add_subcommand(
        "normality", "normal-approximation statistics of the pyrene coefficients");
    int norm_n = 0;
    cmd_norm->add_option("--n", norm_n, "chain length")->required();
    cmd_norm->callback([&] {
        NormalityStats s = normality_stats(norm_n);
        json j;
        j["n"] = s.n;
        j["mean"] = rational_str(s.mean);
        j["variance"] = s.variance;
        j["clt_sup_distance"] = s.clt_sup;
        j["llt_sup_distance"] = s.llt_sup;
        j["float_fields"] = {"variance", "clt_sup_distance", "llt_sup_distance"};
        j["float_precision"] = kFloatPrecision;
        std::cout << j.dump() << "\n";
    });

    // re --n
    auto* cmd_re = app.add_subcommand("re", "resonance energy of a pyrene chain");
    int re_n = 0;
    cmd_re->add_option("--n", re_n, "chain length")->required();
    cmd_re->callback([&] {
        double total = aihara_re_pyrene(re_n);
        json j;
        j["n"] = re_n;
        j["re_star"] = total;
        j["per_unit"] = total / re_n;
        j["per_unit_limit"] = aihara_per_unit_limit();
        j["float_fields"] = {"re_star", "per_unit", "per_unit_limit"};
        j["float_precision"] = kFloatPrecision;
        std::cout << j.dump() << "\n";
    });

    // scan --h-max [--checks] [--out]
    auto* cmd_scan = app.add_subcommand(
        "scan", "sweep the enumerated corpus and report per-system verdicts");
    int scan_h_max = 0;
    std::string scan_checks = "all", scan_out;
    cmd_scan->add_option("--h-max", scan_h_max, "largest hexagon count")->required();
    cmd_scan->add_option("--checks", scan_checks, "comma list of check ids, or 'all'");
    cmd_scan->add_option("--out", scan_out,
                         "write newline-delimited reports here (manifest goes to stdout)");
    cmd_scan->callback([&] {
        std::vector<std::string> ids =
            scan_checks == "all" ? scan_check_ids() : split_list(scan_checks);
        std::ofstream file;
        if (!scan_out.empty()) {
            file.open(scan_out);
            if (!file) throw std::runtime_error("cannot open " + scan_out);
        }
        std::ostream& reports = scan_out.empty() ? std::cout : file;
        ScanManifest m = scan(scan_h_max, ids, [&](const ScanReport& r) {
            reports << report_json(r).dump() << "\n";
        });
        json j;
        j["h_max"] = m.h_max;
        j["checks"] = m.checks;
        j["counts_per_size"] = json::object();
        for (const auto& [size, count] : m.counts_per_size)
            j["counts_per_size"][std::to_string(size)] = count;
        j["kekulean_count"] = m.kekulean_count;
        j["failures"] = json::array();
        for (const auto& [code, id] : m.failures)
            j["failures"].push_back({{"code", code}, {"check", id}});
        j["identity_failure"] = m.identity_failure;
        std::ostream& manifest_out = scan_out.empty() ? std::cerr : std::cout;
        manifest_out << j.dump(2) << "\n";
        if (m.identity_failure) exit_code = 1;
    });

    // enumerate --h-max [--count-only]
    auto* cmd_enum = app.add_subcommand("enumerate",
                                        "enumerate hexagonal systems up to a size");
    int enum_h_max = 0;
    bool enum_count_only = false;
    cmd_enum->add_option("--h-max", enum_h_max, "largest hexagon count")->required();
    cmd_enum->add_flag("--count-only", enum_count_only, "print counts per size only");
    cmd_enum->callback([&] {
        if (enum_h_max < 1) throw std::invalid_argument("need --h-max >= 1");
        if (enum_count_only) {
            std::map<int, long long> counts;
            enumerate_polyhexes(enum_h_max,
                                [&](const HexSystem& h) { ++counts[h.hexagon_count()]; });
            json j = json::object();
            for (const auto& [size, count] : counts) j[std::to_string(size)] = count;
            std::cout << j.dump() << "\n";
            return;
        }
        json arr = json::array();
        enumerate_polyhexes(enum_h_max, [&](const HexSystem& h) {
            arr.push_back({{"hexagons", h.hexagon_count()}, {"code", h.code}});
        });
        std::cout << arr.dump() << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help exits 0, usage errors exit 2
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        json err{{"error", error_kind(e)}, {"message", e.what()}};
        std::cerr << err.dump() << "\n";
        return 1;
    }
}
