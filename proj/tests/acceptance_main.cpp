// Acceptance gate: twelve end-to-end criteria, one line of output each.
// Every criterion has a wall-clock budget and pinned tolerances; a run
// exits nonzero if any criterion fails its checks or its budget.

#include <hexpoly/families.hpp>
#include <hexpoly/hexsys.hpp>
#include <hexpoly/limits.hpp>
#include <hexpoly/realroots.hpp>
#include <hexpoly/resonance.hpp>
#include <hexpoly/scan.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace hexpoly;

Polynomial poly(std::vector<BigInt> coeffs) { return Polynomial(std::move(coeffs)); }

struct Failure {
    std::string reason;
};

[[noreturn]] void fail(const std::string& reason) { throw Failure{reason}; }

void require(bool ok, const std::string& reason) {
    if (!ok) fail(reason);
}

Rational pow10_inv(int k) {
    BigInt den = 1;
    for (int i = 0; i < k; ++i) den *= 10;
    return Rational(BigInt(1), den);
}

// ---- criterion bodies ------------------------------------------------

// Pinned low-order polynomials, plus the same values recomputed from
// explicit cell geometry.
std::string golden_polynomials() {
    require(pyrene(1) == poly({1, 4, 1}), "pyrene(1) coefficients");
    require(pyrene(2) == poly({1, 8, 17, 8, 1}), "pyrene(2) coefficients");
    require(pyrene(3) == poly({1, 12, 49, 80, 49, 12, 1}), "pyrene(3) coefficients");
    require(sextet_polynomial(build_from_cells(pyrene_cells(1))) == pyrene(1),
            "sextet polynomial of the first pyrene geometry");
    HexSystem t = build_from_cells({{0, 0}, {1, 0}, {-1, 1}, {0, -1}});
    require(sextet_polynomial(t) == poly({1, 4, 3, 1}),
            "triphenylene sextet polynomial");
    return "pyrene 1..3 and two cell-built systems match pinned coefficients";
}

// Real-rootedness, simplicity, and exact surd bounds on every zero of
// pyrene(n) up to n = 50.
std::string zeros_inside_limit_interval() {
    const Surd lower(Rational(-3), Rational(-2), 2);  // -3 - 2 sqrt(2)
    const Surd upper(Rational(-3), Rational(2), 2);   // -3 + 2 sqrt(2)
    const Rational width(1, 32768);  // below the n=50 gap to the endpoints
    for (int n = 1; n <= 50; ++n) {
        Polynomial f = pyrene(n);
        require(is_real_rooted(f), "pyrene(" + std::to_string(n) + ") real-rooted");
        require(Polynomial::gcd(f, f.derivative()).degree() == 0,
                "pyrene(" + std::to_string(n) + ") squarefree");
        RootIsolation iso = isolate_roots(f, width);
        require(static_cast<int>(iso.roots.size()) == 2 * n,
                "pyrene(" + std::to_string(n) + ") distinct root count");
        for (const RootInterval& r : iso.roots) {
            require(lower < Surd(r.lo) && Surd(r.hi) < upper,
                    "pyrene(" + std::to_string(n) + ") root interval [" +
                        to_string(r.lo) + ", " + to_string(r.hi) +
                        "] escapes the open limit interval");
        }
    }
    return "5100 roots isolated; all intervals inside (-3-2*sqrt(2), -3+2*sqrt(2))";
}

// Closed-form reciprocal root pairs against exact isolation, n <= 20.
std::string closed_form_roots_match() {
    const Rational width = pow10_inv(12);
    const double tol = 1e-9;
    for (int n = 1; n <= 20; ++n) {
        std::vector<double> closed;
        for (int k = 1; k <= n; ++k) {
            auto [a, b] = pyrene_root(n, k);
            closed.push_back(a);
            closed.push_back(b);
        }
        std::sort(closed.begin(), closed.end());
        RootIsolation iso = isolate_roots(pyrene(n), width);
        require(iso.roots.size() == closed.size(), "root multiset size");
        for (std::size_t i = 0; i < closed.size(); ++i) {
            double mid = (to_double(iso.roots[i].lo) + to_double(iso.roots[i].hi)) / 2;
            if (std::abs(mid - closed[i]) > tol)
                fail("n=" + std::to_string(n) + " root " + std::to_string(i) +
                     ": closed form deviates by " + std::to_string(std::abs(mid - closed[i])));
        }
    }
    return "420 closed-form roots match exact isolation to 1e-9";
}

// The exact identity battery, including the corrected second-coefficient
// binomial form and the Kekule floor evaluated in Z[sqrt(2)].
std::string identity_battery() {
    IdentityReport report = verify_pyrene_identities(30);
    if (!report.all_passed()) {
        const IdentityFailure& f = report.failures.front();
        fail(f.identity + " at n=" + std::to_string(f.n) + ": " + f.detail);
    }
    std::ostringstream out;
    out << report.checks_run << " exact checks up to n=30, including the corrected "
        << "binomial coefficient form";
    return out.str();
}

// Symmetry, unimodality, log-concavity, and the Newton inequalities by
// exact integer comparison, n <= 50.
std::string coefficient_properties() {
    for (int n = 1; n <= 50; ++n) {
        Polynomial f = pyrene(n);
        require(f.is_symmetric(), "symmetric at n=" + std::to_string(n));
        require(f.is_unimodal(), "unimodal at n=" + std::to_string(n));
        require(f.is_log_concave(), "log-concave at n=" + std::to_string(n));
        require(f.newton_check(), "Newton inequalities at n=" + std::to_string(n));
    }
    return "pyrene 1..50 symmetric, unimodal, log-concave, Newton-satisfying";
}

// Variance growth and central/local limit gates for the coefficient
// distribution.
std::string normal_approximation() {
    NormalityStats big = normality_stats(1000);
    double ratio = big.variance / 1000.0;
    if (std::abs(ratio - std::sqrt(2.0) / 4.0) > 0.01)
        fail("variance/n at n=1000 is " + std::to_string(ratio));
    NormalityStats mid = normality_stats(200);
    if (mid.clt_sup > 0.05) fail("CLT sup-distance " + std::to_string(mid.clt_sup));
    if (mid.llt_sup > 0.05) fail("LLT sup-distance " + std::to_string(mid.llt_sup));
    std::ostringstream out;
    out << "variance/n -> " << ratio << "; CLT sup " << mid.clt_sup << ", LLT sup "
        << mid.llt_sup;
    return out.str();
}

// Per-hexagon resonance energy at n = 2000 against the pinned constant.
std::string resonance_energy() {
    double per_unit = aihara_re_pyrene(2000) / 2000.0;
    if (std::abs(per_unit - 2.432) > 0.01)
        fail("RE*/n at n=2000 is " + std::to_string(per_unit));
    std::ostringstream out;
    out << "RE*/n = " << per_unit << " (limit constant " << aihara_per_unit_limit()
        << ")";
    return out.str();
}

// Exact limit sets of the zero recurrences, with surd endpoints and the
// overlap chain of the segmented-family intervals.
std::string limit_sets() {
    const Polynomial x = Polynomial::x();

    IntervalSet pyr = bkw_limit_set(poly({1, 4, 1}), poly({0, 0, -1}));
    require(pyr.str() == "[-3-2*sqrt(2), -3+2*sqrt(2)]", "pyrene limit set");

    IntervalSet zig = bkw_limit_set(Polynomial(1), x);
    require(zig.str() == "(-inf, -1/4]", "zigzag limit set");

    for (int m = 3; m <= 10; ++m) {
        const Rational sq(BigInt((m - 2) * (m - 2)));
        const Surd lo(Rational(-m) / sq, Rational(-2) / sq, m - 1);
        const Surd hi(Rational(-m) / sq, Rational(2) / sq, m - 1);
        IntervalSet im = interval_Im(m);
        IntervalSet rec = bkw_limit_set(poly({1, BigInt(m - 2)}), x);
        require(im == rec, "interval_Im vs recurrence at m=" + std::to_string(m));
        const LimitInterval& part = im.intervals().front();
        require(im.intervals().size() == 1 && part.lo == lo && part.hi == hi &&
                    part.lo_closed && part.hi_closed,
                "exact endpoints at m=" + std::to_string(m));
    }
    for (int m = 3; m <= 20; ++m) {
        IntervalSet cur = interval_Im(m);
        IntervalSet next = interval_Im(m + 1);
        require(next.intervals().front().lo < cur.intervals().front().hi,
                "interval overlap at m=" + std::to_string(m));
    }
    return "surd endpoints exact for m=3..10; neighbor intervals overlap to m=20";
}

// Certified zeros near 50 evenly spaced targets in [-10, -1/20].
std::string density_witnesses() {
    const Rational eps = pow10_inv(3);
    const Rational step(BigInt(199), BigInt(980));  // (10 - 1/20) / 49
    for (int i = 0; i < 50; ++i) {
        Rational target = Rational(-10) + step * i;
        DensityWitness w = density_witness(target, eps, 500);
        require(w.lo <= w.hi && target - eps <= w.lo && w.hi <= target + eps,
                "witness window at target " + to_string(target));
    }
    return "all 50 targets certified with eps = 1/1000";
}

// Consecutive chain members interlace for every second-order family.
std::string chain_interlacing() {
    auto run_chain = [](const std::string& name,
                        const std::function<Polynomial(int)>& member) {
        Polynomial prev = member(0);
        require(is_real_rooted(prev), name + " member 0 real-rooted");
        for (int n = 1; n <= 30; ++n) {
            Polynomial cur = member(n);
            require(is_real_rooted(cur),
                    name + " member " + std::to_string(n) + " real-rooted");
            require(interlaces(prev, cur),
                    name + " members " + std::to_string(n - 1) + "," +
                        std::to_string(n) + " interlace");
            prev = std::move(cur);
        }
    };
    run_chain("delannoy", [](int n) { return delannoy(n); });
    run_chain("u", [](int n) { return u_poly(n); });
    run_chain("v", [](int n) { return v_poly(n); });
    for (int m = 2; m <= 6; ++m)
        run_chain("line-" + std::to_string(m),
                  [m](int n) { return line_m_poly(m, n); });
    return "8 chains x 30 steps: real-rooted and interlacing";
}

// Independent corpus census: grow every translation-normalized shape by
// breadth-first cell addition, then count congruence classes directly by
// minimizing the serialization over the twelve lattice symmetries. Shapes
// of at most five cells cannot enclose a hole, so no filtering is needed.
std::map<int, std::set<std::string>> congruence_census(int h_max) {
    std::map<int, std::set<std::string>> classes;
    std::set<std::string> level{"0,0"};
    for (int h = 1; h <= h_max; ++h) {
        std::set<std::string> next_level;
        for (const std::string& s : level) {
            std::vector<Cell> cells = parse_cells(s);
            std::string best;
            std::vector<Cell> image(cells.size());
            for (int t = 0; t < 12; ++t) {
                for (std::size_t i = 0; i < cells.size(); ++i)
                    image[i] = apply_symmetry(cells[i], t);
                std::string ser = serialize_cells(image);
                if (best.empty() || ser < best) best = std::move(ser);
            }
            classes[h].insert(best);
            if (h == h_max) continue;
            std::set<Cell> occupied(cells.begin(), cells.end());
            std::set<Cell> grown;
            for (const Cell& c : cells)
                for (const Cell& d : kNeighborOffsets)
                    if (!occupied.count(c + d)) grown.insert(c + d);
            for (const Cell& g : grown) {
                cells.push_back(g);
                next_level.insert(serialize_cells(cells));
                cells.pop_back();
            }
        }
        level = std::move(next_level);
    }
    return classes;
}

// Full corpus sweep at h <= 5: census agreement, the observed zero and
// coefficient properties on every Kekulean member, and the theorem
// identities on 100% of them.
std::string corpus_scan() {
    auto oracle = congruence_census(5);
    long long kekulean_seen = 0;
    std::vector<std::string> required = {"sigma_log_concave", "sigma_real_zero_interval",
                                         "sigma_hurwitz"};
    ScanManifest manifest = scan(5, scan_check_ids(), [&](const ScanReport& r) {
        if (!r.kekulean) return;
        ++kekulean_seen;
        for (const std::string& id : required) {
            const CheckResult* c = r.find(id);
            require(c && c->verdict == Verdict::Pass,
                    id + " on " + r.code + (c ? ": " + c->detail : ""));
        }
        for (const auto& [id, result] : r.checks)
            if (is_identity_check(id))
                require(result.verdict == Verdict::Pass,
                        id + " on " + r.code + ": " + result.detail);
    });
    require(!manifest.identity_failure, "manifest records an identity failure");
    const std::vector<long long> expected{1, 1, 3, 7, 22};
    for (int h = 1; h <= 5; ++h) {
        long long census = static_cast<long long>(oracle[h].size());
        require(census == expected[h - 1],
                "census count at h=" + std::to_string(h));
        require(manifest.counts_per_size.at(h) == census,
                "enumeration vs census at h=" + std::to_string(h));
    }
    std::ostringstream out;
    out << kekulean_seen << " Kekulean systems pass the zero/coefficient checks; "
        << "identities pass on all; census counts 1,1,3,7,22 agree";
    return out.str();
}

// The one known sextet polynomial with nonreal zeros at this scale.
std::string triphenylene_nonreal_zeros() {
    Polynomial sigma = sextet_polynomial(build_from_cells({{0, 0}, {1, 0}, {-1, 1}, {0, -1}}));
    require(!is_real_rooted(sigma), "sigma(T) must not be real-rooted");
    const std::vector<std::complex<double>> targets = {
        {-0.32, 0.0}, {-1.34, 1.16}, {-1.34, -1.16}};
    std::vector<ApproxRoot> roots = approx_complex_roots(sigma);
    for (const auto& target : targets) {
        bool hit = false;
        for (const ApproxRoot& r : roots)
            hit = hit || (std::abs(r.value.real() - target.real()) <= 1e-2 &&
                          std::abs(r.value.imag() - target.imag()) <= 1e-2);
        std::ostringstream t;
        t << target;
        require(hit, "no approximate root within 1e-2 of " + t.str());
    }
    return "roots -0.32, -1.34 +/- 1.16i reproduced to 1e-2; not real-rooted";
}

// ---- driver ----------------------------------------------------------

struct Criterion {
    int id;
    std::string label;
    double budget_seconds;
    std::function<std::string()> body;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "golden polynomials", 1, golden_polynomials},
        {2, "zeros inside the exact limit interval (n <= 50)", 60,
         zeros_inside_limit_interval},
        {3, "closed-form zeros match exact isolation (n <= 20)", 30,
         closed_form_roots_match},
        {4, "exact identity battery (n <= 30)", 30, identity_battery},
        {5, "coefficient properties (n <= 50)", 10, coefficient_properties},
        {6, "normal approximation gates", 60, normal_approximation},
        {7, "resonance-energy constant (n = 2000)", 10, resonance_energy},
        {8, "recurrence limit sets with exact endpoints", 5, limit_sets},
        {9, "zero-density witnesses on the negative axis", 120, density_witnesses},
        {10, "chain interlacing (8 families, n <= 30)", 60, chain_interlacing},
        {11, "corpus sweep and theorem identities (h <= 5)", 600, corpus_scan},
        {12, "triphenylene nonreal zeros", 1, triphenylene_nonreal_zeros},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string verdict = "PASS", note;
        try {
            note = c.body();
        } catch (const Failure& f) {
            verdict = "FAIL";
            note = f.reason;
        } catch (const std::exception& e) {
            verdict = "FAIL";
            note = std::string("unexpected error: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        if (verdict == "PASS" && secs > c.budget_seconds) {
            verdict = "FAIL";
            note = "exceeded time budget";
        }
        if (verdict == "FAIL") ++failures;
        std::printf("[%2d] %s  %7.2f s / %3.0f s  %s: %s\n", c.id, verdict.c_str(),
                    secs, c.budget_seconds, c.label.c_str(), note.c_str());
    }
    if (failures) std::printf("%d of 12 criteria failed\n", failures);
    else std::printf("all 12 criteria passed\n");
    return failures == 0 ? 0 : 1;
}
