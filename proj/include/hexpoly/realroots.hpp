#pragma once

// Exact real-root machinery built on Sturm chains with primitive
// pseudo-remainder sequences: root counting over half-open intervals,
// isolation with multiplicities, interlacing tests that compare algebraic
// numbers exactly, a rational Routh-Hurwitz test, and an Aberth-Ehrlich
// iteration for approximate complex roots.

#include "polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hexpoly {

struct NotRealRooted : std::domain_error {
    NotRealRooted() : std::domain_error("polynomial has nonreal roots") {}
};

struct DegreeGap : std::domain_error {
    DegreeGap() : std::domain_error("degrees differ by more than one") {}
};

struct NoConvergence : std::runtime_error {
    NoConvergence() : std::runtime_error("root iteration did not converge") {}
};

// All real roots of f lie strictly inside (-bound, bound).
inline Rational cauchy_bound(const Polynomial& f) {
    if (f.degree() < 0) throw std::invalid_argument("zero polynomial");
    Rational best = 0;
    const BigInt lead = abs_val(f.leading());
    for (int i = 0; i < f.degree(); ++i) {
        Rational r(abs_val(f[i]), lead);
        if (r > best) best = r;
    }
    return best + 1;
}

// Sturm chain: s0 = f, s1 = f', s_{i+1} = -(s_{i-1} mod s_i), every element
// replaced by its primitive part with the sign chosen so the variation
// counts match the rational-coefficient chain. The chain of a polynomial
// with repeated roots terminates in gcd(f, f') rather than a constant;
// count() below insists on a squarefree chain, while callers that only
// evaluate at non-roots of the gcd (degree bookkeeping in is_real_rooted)
// may use variations_at directly.
class SturmChain {
  public:
    explicit SturmChain(const Polynomial& f) {
        seq_.push_back(f.primitive_part());
        Polynomial d = f.derivative();
        if (!d.is_zero()) {
            seq_.push_back(d.primitive_part());
            while (true) {
                const Polynomial& a = seq_[seq_.size() - 2];
                const Polynomial& b = seq_.back();
                Polynomial prem = Polynomial::pseudo_rem(a, b);
                if (prem.is_zero()) break;
                // prem = lc(b)^(delta+1) * (a mod b); flip so the stored
                // element is a positive multiple of -(a mod b)
                int delta = a.degree() - b.degree();
                bool factor_negative = b.leading() < 0 && (delta + 1) % 2 == 1;
                Polynomial next = prem.primitive_part();
                if (!factor_negative) next = -next;
                seq_.push_back(std::move(next));
            }
        }
    }

    const std::vector<Polynomial>& sequence() const { return seq_; }

    // Last nonzero element of the PRS, a constant multiple of gcd(f, f').
    const Polynomial& tail() const { return seq_.back(); }

    bool squarefree() const { return seq_.size() == 1 || tail().degree() == 0; }

    // Sign variations at x with the right-limit convention: a vanishing
    // leading element takes the sign of the next one, so V(x) behaves as
    // V(x+0). Interior zeros are skipped; adjacent elements of a
    // squarefree chain never vanish together.
    int variations_at(const Rational& x) const {
        int count = 0, prev = 0;
        for (std::size_t i = 0; i < seq_.size(); ++i) {
            int s = seq_[i].sign_at(x);
            if (i == 0 && s == 0 && seq_.size() > 1) {
                s = seq_[1].sign_at(x);
                if (s == 0) throw std::logic_error("variation count at a repeated root");
            }
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++count;
            prev = s;
        }
        return count;
    }

    // Number of distinct roots in (lo, hi]. Requires a squarefree chain.
    int count(const Rational& lo, const Rational& hi) const {
        if (!(lo < hi)) throw std::invalid_argument("empty interval");
        if (!squarefree()) throw std::logic_error("count on non-squarefree chain");
        return variations_at(lo) - variations_at(hi);
    }

  private:
    std::vector<Polynomial> seq_;
};

// Distinct real roots of f in the half-open interval (lo, hi].
inline int sturm_count(const Polynomial& f, const Rational& lo, const Rational& hi) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("sturm_count needs lo < hi");
    if (f.degree() == 0) return 0;
    SturmChain chain(f);
    if (chain.squarefree()) return chain.count(lo, hi);
    Polynomial reduced = *Polynomial::exact_divide(chain.sequence().front(), chain.tail());
    return SturmChain(reduced).count(lo, hi);
}

// True iff every root of f is real (multiplicities do not matter). Uses a
// single PRS: the tail is gcd(f, f'), so f has deg f - deg tail distinct
// complex roots, and the variation count at +-infinity-sized bounds gives
// the number of distinct real ones. The bounds are never roots, so the
// variation counts are valid even for a non-squarefree chain.
inline bool is_real_rooted(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    if (f.degree() <= 1) return true;
    SturmChain chain(f);
    int distinct_expected = f.degree() - chain.tail().degree();
    Rational bound = cauchy_bound(f);
    return chain.variations_at(-bound) - chain.variations_at(bound) == distinct_expected;
}

// Isolating interval for one distinct real root: the root lies in
// (lo, hi], and no other root of the original polynomial does.
struct RootInterval {
    Rational lo;
    Rational hi;
    int multiplicity = 1;
    // squarefree factor (from the Yun decomposition) this root belongs to;
    // exposed so exact follow-up queries can keep refining
    Polynomial factor;
};

struct RootIsolation {
    std::vector<RootInterval> roots;  // ascending
    int nonreal_count = 0;            // complex roots counted with multiplicity

    int real_count_with_multiplicity() const {
        int n = 0;
        for (const auto& r : roots) n += r.multiplicity;
        return n;
    }
};

// One bisection refinement of an isolating interval (lo, hi] of the
// squarefree g: exactly one root lies inside, and just right of lo the
// sign of g is opposite to its sign at hi (or the root sits at hi).
inline void refine_isolating_interval(const Polynomial& g, Rational& lo, Rational& hi) {
    int s_hi = g.sign_at(hi);
    Rational mid = midpoint(lo, hi);
    if (s_hi == 0) {  // root exactly at hi
        lo = mid;
        return;
    }
    int s_mid = g.sign_at(mid);
    if (s_mid == 0) {  // root exactly at mid: keep it as the new right end
        lo = midpoint(lo, mid);
        hi = mid;
    } else if (s_mid == s_hi) {
        hi = mid;
    } else {
        lo = mid;
    }
}

// Isolate all distinct real roots of f into pairwise disjoint half-open
// intervals tagged with multiplicities. If max_width is given, every
// interval is refined until hi - lo <= max_width.
inline RootIsolation isolate_roots(const Polynomial& f,
                                   const std::optional<Rational>& max_width = std::nullopt) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    RootIsolation out;
    if (f.degree() == 0) return out;

    auto factors = Polynomial::squarefree_decomposition(f);
    for (auto& [g, mult] : factors) {
        if (g.degree() == 0) continue;
        SturmChain chain(g);
        Rational bound = cauchy_bound(g);
        struct Span {
            Rational lo, hi;
            int vlo, vhi;
        };
        std::vector<Span> work;
        work.push_back({-bound, bound, chain.variations_at(-bound), chain.variations_at(bound)});
        while (!work.empty()) {
            Span s = work.back();
            work.pop_back();
            int nroots = s.vlo - s.vhi;
            if (nroots == 0) continue;
            if (nroots == 1) {
                out.roots.push_back({s.lo, s.hi, mult, g});
                continue;
            }
            Rational mid = midpoint(s.lo, s.hi);
            int vmid = chain.variations_at(mid);
            work.push_back({s.lo, mid, s.vlo, vmid});
            work.push_back({mid, s.hi, vmid, s.vhi});
        }
    }

    std::sort(out.roots.begin(), out.roots.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });

    // Roots from different squarefree factors are distinct, so refining
    // overlapping neighbors must eventually separate them.
    bool overlap = true;
    while (overlap) {
        overlap = false;
        for (std::size_t i = 0; i + 1 < out.roots.size(); ++i) {
            if (out.roots[i].hi <= out.roots[i + 1].lo) continue;
            overlap = true;
            refine_isolating_interval(out.roots[i].factor, out.roots[i].lo, out.roots[i].hi);
            refine_isolating_interval(out.roots[i + 1].factor, out.roots[i + 1].lo,
                                      out.roots[i + 1].hi);
        }
        if (overlap)
            std::sort(out.roots.begin(), out.roots.end(),
                      [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
    }

    if (max_width) {
        for (auto& r : out.roots)
            while (r.hi - r.lo > *max_width) refine_isolating_interval(r.factor, r.lo, r.hi);
    }

    out.nonreal_count = f.degree();
    for (const auto& r : out.roots) out.nonreal_count -= r.multiplicity;
    return out;
}

namespace detail {

// Exact comparison of two isolated algebraic numbers. Returns -1/0/+1.
// Equality can only happen through a common factor h = gcd; the root of
// each interval equals the (unique) root of h in the intersection exactly
// when all three counts are 1.
class RootComparator {
  public:
    int compare(RootInterval& a, RootInterval& b) {
        const Polynomial h = Polynomial::gcd(a.factor, b.factor);
        const bool may_be_equal = h.degree() > 0;
        std::optional<SturmChain> ha, hb, hh;
        for (int iter = 0; iter < 512; ++iter) {
            if (a.hi <= b.lo) return -1;
            if (b.hi <= a.lo) return 1;
            if (may_be_equal) {
                Rational klo = std::max(a.lo, b.lo);
                Rational khi = std::min(a.hi, b.hi);
                if (klo < khi) {
                    if (!ha) {
                        ha.emplace(a.factor);
                        hb.emplace(b.factor);
                        hh.emplace(h);
                    }
                    if (ha->count(klo, khi) == 1 && hb->count(klo, khi) == 1 &&
                        hh->count(klo, khi) == 1)
                        return 0;
                }
            }
            refine_isolating_interval(a.factor, a.lo, a.hi);
            refine_isolating_interval(b.factor, b.lo, b.hi);
        }
        throw std::logic_error("algebraic comparison failed to separate");
    }

    bool less_equal(RootInterval& a, RootInterval& b) { return compare(a, b) <= 0; }
};

}  // namespace detail

// True iff the roots of g interlace the roots of f in the weak sense:
// listing roots in increasing order with multiplicity, either
//   deg f = deg g + 1 and  f1 <= g1 <= f2 <= g2 <= ... <= g_(n-1) <= f_n, or
//   deg f = deg g     and  g1 <= f1 <= g2 <= f2 <= ... <= g_n <= f_n.
// Both polynomials must be real-rooted and the degrees may differ by at
// most one (with f the larger).
inline bool interlaces(const Polynomial& g, const Polynomial& f) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("zero polynomial");
    int df = f.degree(), dg = g.degree();
    if (df != dg && df != dg + 1) throw DegreeGap();
    if (!is_real_rooted(f) || !is_real_rooted(g)) throw NotRealRooted();
    if (dg == 0) return true;

    auto expand = [](const Polynomial& p) {
        std::vector<RootInterval> seq;
        for (const auto& r : isolate_roots(p).roots)
            for (int i = 0; i < r.multiplicity; ++i) seq.push_back(r);
        return seq;
    };
    std::vector<RootInterval> froots = expand(f);
    std::vector<RootInterval> groots = expand(g);

    detail::RootComparator cmp;
    if (df == dg + 1) {
        // f1 <= g1 <= f2 <= ... <= g_(n-1) <= f_n
        for (std::size_t i = 0; i < groots.size(); ++i) {
            if (!cmp.less_equal(froots[i], groots[i])) return false;
            if (!cmp.less_equal(groots[i], froots[i + 1])) return false;
        }
    } else {
        // g1 <= f1 <= g2 <= f2 <= ... <= g_n <= f_n
        for (std::size_t i = 0; i < groots.size(); ++i) {
            if (!cmp.less_equal(groots[i], froots[i])) return false;
            if (i + 1 < groots.size() && !cmp.less_equal(froots[i], groots[i + 1])) return false;
        }
    }
    return true;
}

// Strict Hurwitz stability (all roots in the open left half-plane) via the
// Routh array over exact rationals. Any zero pivot or zero row means the
// polynomial is at best marginally stable, hence not strictly Hurwitz.
inline bool hurwitz_stable(const Polynomial& f_in) {
    if (f_in.is_zero()) throw std::invalid_argument("zero polynomial");
    Polynomial f = Polynomial::normalize_sign(f_in);
    if (f[0] == 0) throw ZeroConstantTerm();
    int n = f.degree();
    if (n == 0) return true;

    auto row_from = [&](int top) {
        std::vector<Rational> row;
        for (int k = top; k >= 0; k -= 2) row.emplace_back(f[k]);
        return row;
    };
    std::vector<Rational> prev2 = row_from(n);      // a_n, a_(n-2), ...
    std::vector<Rational> prev = row_from(n - 1);   // a_(n-1), a_(n-3), ...
    if (sign_of(prev2[0]) <= 0) return false;
    for (int stage = 0; stage < n; ++stage) {
        if (prev.empty() || sign_of(prev[0]) <= 0) return false;
        if (stage == n - 1) break;
        std::vector<Rational> next(prev2.size() - 1);
        if (next.empty()) break;
        for (std::size_t j = 0; j < next.size(); ++j) {
            Rational p2 = j + 1 < prev2.size() ? prev2[j + 1] : Rational(0);
            Rational p1 = j + 1 < prev.size() ? prev[j + 1] : Rational(0);
            next[j] = (prev[0] * p2 - prev2[0] * p1) / prev[0];
        }
        prev2 = std::move(prev);
        prev = std::move(next);
    }
    return true;
}

// True iff f has a root on the imaginary axis (including the origin).
// Roots of gcd(f(x), f(-x)) form a symmetric set; with f(0) != 0 that gcd
// is an even polynomial H(x^2), and f has a root i*w, w != 0, exactly when
// H picks up a negative real root t = -w^2.
inline bool has_imaginary_axis_root(const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    if (f[0] == 0) return true;
    Polynomial g = Polynomial::gcd(f, f.scale_arg(-1));
    if (g.degree() <= 0) return false;
    std::vector<BigInt> even;
    for (int k = 0; k <= g.degree(); k += 2) even.push_back(g[static_cast<std::size_t>(k)]);
    for (int k = 1; k <= g.degree(); k += 2)
        if (g[static_cast<std::size_t>(k)] != 0)
            throw std::logic_error("symmetric gcd is not even");
    Polynomial h(std::move(even));
    if (h.degree() < 1) return false;
    // f(0) != 0 rules out t = 0, so the half-open count over (-bound, 0]
    // sees exactly the negative roots of h
    Rational bound = cauchy_bound(h);
    return sturm_count(h, -bound, 0) > 0;
}

// ---------------------------------------------------------------------------
// Approximate complex roots (Aberth-Ehrlich).

struct ApproxRoot {
    std::complex<double> value;
    // |f(z)| / sum_k |a_k| |z|^k; a small residual certifies z as an exact
    // root of a nearby polynomial with relatively perturbed coefficients
    double residual = 0.0;
};

inline std::vector<ApproxRoot> approx_complex_roots(const Polynomial& f, double tol = 1e-12,
                                                    int max_iterations = 600) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    std::vector<ApproxRoot> out;

    // exact roots at the origin come off first
    std::size_t zero_mult = 0;
    while (f[zero_mult] == 0) ++zero_mult;
    std::vector<double> a;
    for (std::size_t k = zero_mult; k <= static_cast<std::size_t>(f.degree()); ++k) {
        double c = to_double(BigInt(f[k]));
        if (!std::isfinite(c)) throw std::overflow_error("coefficient exceeds double range");
        a.push_back(c);
    }
    for (std::size_t i = 0; i < zero_mult; ++i) out.push_back({{0.0, 0.0}, 0.0});
    const int n = static_cast<int>(a.size()) - 1;
    if (n == 0) return out;

    auto horner = [&](std::complex<double> z, std::complex<double>& val, std::complex<double>& der) {
        val = a[n];
        der = 0.0;
        for (int k = n - 1; k >= 0; --k) {
            der = der * z + val;
            val = val * z + a[k];
        }
    };
    auto residual_at = [&](std::complex<double> z) {
        std::complex<double> val, der;
        horner(z, val, der);
        double az = std::abs(z);
        double p = 1.0;
        double scale = 0.0;
        for (int k = 0; k <= n; ++k) {
            scale += std::abs(a[k]) * p;
            p *= az;
        }
        return std::abs(val) / (scale > 0 ? scale : 1.0);
    };

    // initial guesses on a circle sized by the geometric estimate, with an
    // angular offset so real-axis symmetry cannot trap the iteration
    double r = std::pow(std::abs(a[0] / a[n]), 1.0 / n);
    if (!(r > 1e-12) || !std::isfinite(r)) r = 1.0;
    std::vector<std::complex<double>> z(n);
    for (int j = 0; j < n; ++j) {
        double angle = 2.0 * M_PI * j / n + 0.42;
        double radius = r * (0.85 + 0.3 * j / std::max(1, n - 1));
        z[j] = std::polar(radius, angle);
    }

    for (int iter = 0; iter < max_iterations; ++iter) {
        double worst = 0.0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> val, der;
            horner(z[i], val, der);
            std::complex<double> w;
            if (der == std::complex<double>(0.0, 0.0)) {
                z[i] += std::complex<double>(1e-8, 1e-8);
                worst = 1.0;
                continue;
            }
            w = val / der;
            std::complex<double> s = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += 1.0 / (z[i] - z[j]);
            std::complex<double> denom = 1.0 - w * s;
            std::complex<double> step = denom == std::complex<double>(0.0, 0.0) ? w : w / denom;
            z[i] -= step;
            worst = std::max(worst, residual_at(z[i]));
        }
        if (worst <= tol) break;
        if (iter == max_iterations - 1) throw NoConvergence();
    }

    std::sort(z.begin(), z.end(), [](const auto& p, const auto& q) {
        if (p.real() != q.real()) return p.real() < q.real();
        return p.imag() < q.imag();
    });
    for (const auto& root : z) out.push_back({root, residual_at(root)});
    return out;
}

}  // namespace hexpoly
