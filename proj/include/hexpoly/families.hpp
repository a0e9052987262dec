#pragma once

// The recursively defined polynomial families and the exact identities
// relating them: the pyrene-chain polynomials P_n, the Delannoy
// polynomials D_n, the linear-chain polynomials L_n and their segmented
// generalization L^(m)_n, and the two auxiliary families U_n, V_n. All
// identities are checked in exact arithmetic; verify_pyrene_identities
// bundles the P_n battery into a single report.

#include "numeric.hpp"
#include "polynomial.hpp"

#include <string>
#include <vector>

namespace hexpoly {

// x^2 + 4x + 1, the single-unit pyrene polynomial and the fixed factor of
// every odd-index member.
inline const Polynomial& pyrene_unit() {
    static const Polynomial p(std::vector<BigInt>{1, 4, 1});
    return p;
}

// P_0 = 1, P_1 = x^2+4x+1, P_n = (x^2+4x+1) P_(n-1) - x^2 P_(n-2).
inline std::vector<Polynomial> pyrene_up_to(int n) {
    if (n < 0) throw std::invalid_argument("negative index");
    std::vector<Polynomial> p;
    p.reserve(n + 1);
    p.emplace_back(1);
    if (n >= 1) p.push_back(pyrene_unit());
    const Polynomial x2 = Polynomial::monomial(1, 2);
    for (int k = 2; k <= n; ++k) p.push_back(pyrene_unit() * p[k - 1] - x2 * p[k - 2]);
    return p;
}

inline Polynomial pyrene(int n) {
    if (n < 0) throw std::invalid_argument("negative index");
    Polynomial prev(1);
    if (n == 0) return prev;
    Polynomial cur = pyrene_unit();
    const Polynomial x2 = Polynomial::monomial(1, 2);
    for (int k = 2; k <= n; ++k) {
        Polynomial next = pyrene_unit() * cur - x2 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Coefficient of x^k in P_n as the double-binomial sum
// sum_i C(2n+1-i, i) C(2n-2i, k-i).
inline BigInt pyrene_coeff(int n, int k) {
    BigInt total = 0;
    for (long long i = 0; i <= n; ++i) total += binomial(2 * n + 1 - i, i) * binomial(2 * n - 2 * i, k - i);
    return total;
}

// P_n rebuilt from the closed form sum_i C(2n+1-i, i) x^i (x+1)^(2n-2i).
inline Polynomial pyrene_binomial_form(int n) {
    if (n < 0) throw std::invalid_argument("negative index");
    Polynomial total;
    const Polynomial xp1(std::vector<BigInt>{1, 1});
    std::vector<Polynomial> half(n + 1);  // half[j] = (x+1)^j
    half[0] = Polynomial(1);
    for (int j = 1; j <= n; ++j) half[j] = half[j - 1] * xp1;
    for (int i = 0; i <= n; ++i) {
        Polynomial term = Polynomial::monomial(binomial(2 * n + 1 - i, i), i);
        total += term * (half[n - i] * half[n - i]);  // x^i (x+1)^(2n-2i)
    }
    return total;
}

// D_0 = 1, D_1 = x+1, D_n = (x+1) D_(n-1) + x D_(n-2).
inline std::vector<Polynomial> delannoy_up_to(int n) {
    std::vector<Polynomial> d;
    d.reserve(n + 1);
    d.emplace_back(1);
    if (n >= 1) d.push_back(Polynomial(std::vector<BigInt>{1, 1}));
    const Polynomial xp1(std::vector<BigInt>{1, 1});
    const Polynomial x = Polynomial::x();
    for (int k = 2; k <= n; ++k) d.push_back(xp1 * d[k - 1] + x * d[k - 2]);
    return d;
}

inline Polynomial delannoy(int n) {
    if (n < 0) throw std::invalid_argument("negative index");
    return delannoy_up_to(n).back();
}

// n x + 1, the linear chain.
inline Polynomial line_poly(int n) {
    if (n < 0) throw std::invalid_argument("negative index");
    return Polynomial(std::vector<BigInt>{1, n});
}

// L^(m)_0 = 1, L^(m)_1 = (m-1)x+1,
// L^(m)_n = ((m-2)x+1) L^(m)_(n-1) + x L^(m)_(n-2), for m >= 2.
inline Polynomial line_m_poly(int m, int n) {
    if (m < 2) throw std::invalid_argument("segment length must be at least 2");
    if (n < 0) throw std::invalid_argument("negative index");
    Polynomial prev(1);
    if (n == 0) return prev;
    Polynomial cur(std::vector<BigInt>{1, m - 1});
    const Polynomial step(std::vector<BigInt>{1, m - 2});
    const Polynomial x = Polynomial::x();
    for (int k = 2; k <= n; ++k) {
        Polynomial next = step * cur + x * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// U_0 = 1, U_1 = x+1; V_0 = 1, V_1 = 2x+1; both follow
// f_n = (2x+1) f_(n-1) + x(1-x) f_(n-2).
inline Polynomial u_or_v_poly(int n, bool v_start) {
    if (n < 0) throw std::invalid_argument("negative index");
    Polynomial prev(1);
    if (n == 0) return prev;
    Polynomial cur = v_start ? Polynomial(std::vector<BigInt>{1, 2})
                             : Polynomial(std::vector<BigInt>{1, 1});
    const Polynomial step(std::vector<BigInt>{1, 2});
    const Polynomial xmx2(std::vector<BigInt>{0, 1, -1});  // x - x^2
    for (int k = 2; k <= n; ++k) {
        Polynomial next = step * cur + xmx2 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline Polynomial u_poly(int n) { return u_or_v_poly(n, false); }
inline Polynomial v_poly(int n) { return u_or_v_poly(n, true); }

// Exact floor of (1+sqrt2)^(2n+2) / (4 sqrt2). With
// (1+sqrt2)^(2n+2) = a + b sqrt2 the value is (2b + a sqrt2)/8, which is
// irrational, so the floor is floor((2b + floor(a sqrt2)) / 8).
inline BigInt pyrene_kekule_floor(int n) {
    BigInt a = 1, b = 1;  // 1 + sqrt2
    unsigned e = 2 * static_cast<unsigned>(n) + 2;
    BigInt ra = 1, rb = 0;
    while (e > 0) {
        if (e & 1) {
            BigInt na = ra * a + 2 * rb * b;
            rb = ra * b + rb * a;
            ra = na;
        }
        BigInt sa = a * a + 2 * b * b;
        b = 2 * a * b;
        a = sa;
        e >>= 1;
    }
    BigInt numerator = 2 * rb + boost::multiprecision::sqrt(BigInt(2 * ra * ra));
    return numerator / 8;
}

struct IdentityFailure {
    std::string identity;
    int n = 0;
    std::string detail;
};

struct IdentityReport {
    int n_max = 0;
    int checks_run = 0;
    std::vector<IdentityFailure> failures;
    bool all_passed() const { return failures.empty(); }
};

// Every exact identity the pyrene family satisfies, checked for all
// indices up to n_max:
//   degree            deg P_n = 2n
//   symmetry          palindromic coefficients
//   value_at_minus_one    P_n(-1) = (n+1)(-1)^n
//   odd_divisibility  (x^2+4x+1) | P_n for odd n
//   delannoy_quotient P_n = D_(2n+1) / (x+1)
//   coefficient_formula   entries match the double-binomial sum
//   binomial_form     P_n = sum_i C(2n+1-i, i) x^i (x+1)^(2n-2i)
//   generating_function   (x^2 y^2 - (x^2+4x+1) y + 1) * sum P_j y^j = 1 + O(y^(n_max+1))
//   kekule_floor      P_n(1) = floor((1+sqrt2)^(2n+2) / (4 sqrt2))
inline IdentityReport verify_pyrene_identities(int n_max) {
    IdentityReport report;
    report.n_max = n_max;
    auto fail = [&](const std::string& id, int n, const std::string& detail) {
        report.failures.push_back({id, n, detail});
    };

    std::vector<Polynomial> p = pyrene_up_to(n_max);
    std::vector<Polynomial> d = delannoy_up_to(2 * n_max + 1);
    const Polynomial xp1(std::vector<BigInt>{1, 1});

    for (int n = 0; n <= n_max; ++n) {
        ++report.checks_run;
        if (p[n].degree() != 2 * n) fail("degree", n, "deg = " + std::to_string(p[n].degree()));

        ++report.checks_run;
        if (!p[n].is_symmetric()) fail("symmetry", n, "coefficients not palindromic");

        ++report.checks_run;
        BigInt expected = BigInt(n + 1) * (n % 2 == 0 ? 1 : -1);
        if (p[n].evaluate(BigInt(-1)) != expected)
            fail("value_at_minus_one", n, "got " + p[n].evaluate(BigInt(-1)).str());

        if (n % 2 == 1) {
            ++report.checks_run;
            if (!Polynomial::exact_divide(p[n], pyrene_unit()))
                fail("odd_divisibility", n, "x^2+4x+1 does not divide P_n");
        }

        ++report.checks_run;
        auto quotient = Polynomial::exact_divide(d[2 * n + 1], xp1);
        if (!quotient || *quotient != p[n])
            fail("delannoy_quotient", n, "D_(2n+1)/(x+1) differs from P_n");

        ++report.checks_run;
        bool coeffs_ok = true;
        for (int k = 0; k <= 2 * n && coeffs_ok; ++k)
            if (p[n][k] != pyrene_coeff(n, k)) coeffs_ok = false;
        if (!coeffs_ok) fail("coefficient_formula", n, "double-binomial sum mismatch");

        ++report.checks_run;
        if (pyrene_binomial_form(n) != p[n]) fail("binomial_form", n, "closed form mismatch");

        ++report.checks_run;
        if (BigInt(p[n].evaluate(BigInt(1))) != pyrene_kekule_floor(n))
            fail("kekule_floor", n,
                 "P_n(1) = " + p[n].evaluate(BigInt(1)).str() + " vs floor " +
                     pyrene_kekule_floor(n).str());
    }

    // truncated generating-function product: the y^0 coefficient is 1 and
    // the y^1 .. y^n_max coefficients all vanish
    const Polynomial x2 = Polynomial::monomial(1, 2);
    for (int j = 0; j <= n_max; ++j) {
        ++report.checks_run;
        Polynomial coeff = p[j];
        if (j >= 1) coeff -= pyrene_unit() * p[j - 1];
        if (j >= 2) coeff += x2 * p[j - 2];
        const bool ok = j == 0 ? coeff == Polynomial(1) : coeff.is_zero();
        if (!ok) fail("generating_function", j, "y^" + std::to_string(j) + " coefficient wrong");
    }

    return report;
}

}  // namespace hexpoly
