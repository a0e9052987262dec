#pragma once

// Conjecture and identity sweeps over the enumerated corpus. Every system
// gets a report with one verdict per enabled check; coefficient-property
// failures carry the offending index, so a counterexample can be replayed
// from the report alone. Failing a conjecture check is a result, not an
// error — only the identity checks (which restate theorems) signal an
// implementation bug, and the manifest flags those separately.

#include <hexpoly/hexsys.hpp>
#include <hexpoly/realroots.hpp>
#include <hexpoly/resonance.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hexpoly {

enum class Verdict { Pass, Fail, Skipped };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        default: return "skipped";
    }
}

struct CheckResult {
    Verdict verdict = Verdict::Skipped;
    std::string detail;  // failure data or skip reason; empty on pass
};

// Registered check ids, in report order. The identity_* checks restate
// theorems; sigma_real_rooted is informational (small systems may fail it
// legitimately); the rest are open conjectures at corpus scale.
inline const std::vector<std::string>& scan_check_ids() {
    static const std::vector<std::string> ids = {
        "sigma_log_concave",
        "sigma_unimodal",
        "chi_log_concave",
        "chi_unimodal",
        "chi_first_half_decreasing",
        "phi_log_concave",
        "sigma_real_zero_interval",
        "sigma_hurwitz",
        "sigma_real_rooted",
        "identity_chi_eq_phi_shift",
        "identity_phi_eq_sigma_thin",
        "identity_sigma1_eq_K_thin",
    };
    return ids;
}

inline bool is_identity_check(const std::string& id) {
    return id.rfind("identity_", 0) == 0;
}

struct ScanReport {
    std::string code;
    int hexagons = 0;
    bool kekulean = false;
    ResonanceProfile profile;
    std::vector<std::pair<std::string, CheckResult>> checks;

    const CheckResult* find(const std::string& id) const {
        for (const auto& [name, result] : checks)
            if (name == id) return &result;
        return nullptr;
    }
};

namespace detail {

inline std::optional<std::size_t> log_concavity_violation(const Polynomial& f) {
    for (std::size_t i = 1; i + 1 <= f.degree(); ++i)
        if (f[i] * f[i] < f[i - 1] * f[i + 1]) return i;
    return std::nullopt;
}

inline std::optional<std::size_t> unimodality_violation(const Polynomial& f) {
    bool descending = false;
    for (std::size_t i = 1; i <= f.degree(); ++i) {
        if (f[i] < f[i - 1]) descending = true;
        else if (descending && f[i] > f[i - 1]) return i;
    }
    return std::nullopt;
}

}  // namespace detail

// Strict decrease of the Clar-covering coefficients from the top degree
// down through the upper half: c_C < c_{C-1} < ... < c_{ceil(C/2)}.
inline bool chi_first_half_decreasing(const Polynomial& chi) {
    const std::size_t top = chi.degree();
    for (std::size_t d = top; d > (top + 1) / 2; --d)
        if (!(chi[d] < chi[d - 1])) return false;
    return true;
}

inline bool chi_first_half_decreasing(const HexSystem& h) {
    return chi_first_half_decreasing(clar_covering_polynomial(h));
}

// Evaluate the enabled checks against one system. Non-Kekulean systems get
// skipped verdicts across the board (their resonance polynomials vanish).
inline ScanReport run_checks(const HexSystem& h,
                             const std::vector<std::string>& enabled = scan_check_ids()) {
    ScanReport report;
    report.code = h.code;
    report.hexagons = h.hexagon_count();
    report.profile = analyze(h);
    report.kekulean = report.profile.kekulean;

    auto index_fail = [](const std::string& what, std::size_t i) {
        return CheckResult{Verdict::Fail, what + " violated at coefficient index " +
                                              std::to_string(i)};
    };

    for (const std::string& id : enabled) {
        CheckResult result;
        if (!report.kekulean) {
            result = {Verdict::Skipped, "system is not Kekulean"};
            report.checks.emplace_back(id, result);
            continue;
        }
        const Polynomial& sigma = report.profile.sigma;
        const Polynomial& chi = report.profile.chi;
        const Polynomial& phi = report.profile.phi;

        if (id == "sigma_log_concave") {
            auto bad = detail::log_concavity_violation(sigma);
            result = bad ? index_fail("sigma log-concavity", *bad) : CheckResult{Verdict::Pass, ""};
        } else if (id == "sigma_unimodal") {
            auto bad = detail::unimodality_violation(sigma);
            result = bad ? index_fail("sigma unimodality", *bad) : CheckResult{Verdict::Pass, ""};
        } else if (id == "chi_log_concave") {
            auto bad = detail::log_concavity_violation(chi);
            result = bad ? index_fail("chi log-concavity", *bad) : CheckResult{Verdict::Pass, ""};
        } else if (id == "chi_unimodal") {
            auto bad = detail::unimodality_violation(chi);
            result = bad ? index_fail("chi unimodality", *bad) : CheckResult{Verdict::Pass, ""};
        } else if (id == "chi_first_half_decreasing") {
            result = chi_first_half_decreasing(chi)
                         ? CheckResult{Verdict::Pass, ""}
                         : CheckResult{Verdict::Fail,
                                       "upper-half chi coefficients not strictly decreasing"};
        } else if (id == "phi_log_concave") {
            auto bad = detail::log_concavity_violation(phi);
            result = bad ? index_fail("phi log-concavity", *bad) : CheckResult{Verdict::Pass, ""};
        } else if (id == "sigma_real_zero_interval") {
            // a zero in [-1, 0): sigma(0) = 1 keeps the right end open for free
            bool hit = sigma.sign_at(Rational(-1)) == 0 ||
                       sturm_count(sigma, Rational(-1), Rational(0)) >= 1;
            result = hit ? CheckResult{Verdict::Pass, ""}
                         : CheckResult{Verdict::Fail, "no sextet zero in [-1, 0)"};
        } else if (id == "sigma_hurwitz") {
            result = hurwitz_stable(sigma)
                         ? CheckResult{Verdict::Pass, ""}
                         : CheckResult{Verdict::Fail, "sigma has a zero outside the open left half-plane"};
        } else if (id == "sigma_real_rooted") {
            result = is_real_rooted(sigma)
                         ? CheckResult{Verdict::Pass, ""}
                         : CheckResult{Verdict::Fail, "sigma has non-real zeros (informational)"};
        } else if (id == "identity_chi_eq_phi_shift") {
            result = chi == phi.shift_compose(1)
                         ? CheckResult{Verdict::Pass, ""}
                         : CheckResult{Verdict::Fail, "chi(x) != phi(x + 1)"};
        } else if (id == "identity_phi_eq_sigma_thin") {
            if (!report.profile.thin)
                result = {Verdict::Skipped, "system is not thin"};
            else
                result = phi == sigma ? CheckResult{Verdict::Pass, ""}
                                      : CheckResult{Verdict::Fail, "phi != sigma on a thin system"};
        } else if (id == "identity_sigma1_eq_K_thin") {
            if (!report.profile.thin)
                result = {Verdict::Skipped, "system is not thin"};
            else
                result = sigma.evaluate(BigInt(1)) == report.profile.kekule
                             ? CheckResult{Verdict::Pass, ""}
                             : CheckResult{Verdict::Fail, "sigma(1) != Kekule count on a thin system"};
        } else {
            throw std::invalid_argument("unknown check id: " + id);
        }
        report.checks.emplace_back(id, result);
    }
    return report;
}

// Aggregate record of one sweep: corpus counts, every failure, and whether
// any theorem-identity check failed (the only outcome that should make a
// driver exit nonzero).
struct ScanManifest {
    int h_max = 0;
    std::vector<std::string> checks;
    std::map<int, long long> counts_per_size;
    long long kekulean_count = 0;
    std::vector<std::pair<std::string, std::string>> failures;  // (code, check id)
    bool identity_failure = false;
};

inline ScanManifest scan(int h_max,
                         const std::vector<std::string>& checks = scan_check_ids(),
                         const std::function<void(const ScanReport&)>& visit = {}) {
    if (h_max < 1) throw std::invalid_argument("need h_max >= 1");
    for (const std::string& id : checks) {
        const auto& known = scan_check_ids();
        if (std::find(known.begin(), known.end(), id) == known.end())
            throw std::invalid_argument("unknown check id: " + id);
    }
    ScanManifest manifest;
    manifest.h_max = h_max;
    manifest.checks = checks;
    enumerate_polyhexes(h_max, [&](const HexSystem& h) {
        ScanReport report = run_checks(h, checks);
        ++manifest.counts_per_size[report.hexagons];
        if (report.kekulean) ++manifest.kekulean_count;
        for (const auto& [id, result] : report.checks)
            if (result.verdict == Verdict::Fail) {
                manifest.failures.emplace_back(report.code, id);
                if (is_identity_check(id)) manifest.identity_failure = true;
            }
        if (visit) visit(report);
    });
    return manifest;
}

}  // namespace hexpoly
