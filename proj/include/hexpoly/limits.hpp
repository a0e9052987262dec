#pragma once

// Where the zeros of the recursive families live: exact limit sets of
// zeros for degree-2 polynomial recurrences (the equal-modulus locus of
// the characteristic roots), the closed-form zeros of the pyrene chains,
// density witnesses for sextet zeros on the negative axis, the resonance
// energy sum, and the normal-approximation statistics of the pyrene
// coefficient distribution.

#include "families.hpp"
#include "numeric.hpp"
#include "polynomial.hpp"
#include "realroots.hpp"
#include "surd.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hexpoly {

struct DegenerateRecurrence : std::domain_error {
    explicit DegenerateRecurrence(const std::string& what) : std::domain_error(what) {}
};

// The limit-set computation represents endpoints as quadratic surds, so it
// requires the discriminant to split into factors of degree at most two.
struct UnsupportedDiscriminant : std::domain_error {
    explicit UnsupportedDiscriminant(int degree)
        : std::domain_error("discriminant has a squarefree factor of degree " +
                            std::to_string(degree) +
                            "; endpoints would not be quadratic surds") {}
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// One interval of the real line with exact surd endpoints; an absent
// endpoint is the corresponding infinity and is always open.
struct LimitInterval {
    bool lo_infinite = false;
    bool hi_infinite = false;
    Surd lo;
    Surd hi;
    bool lo_closed = true;
    bool hi_closed = true;

    static LimitInterval closed(Surd lo, Surd hi) {
        if (hi < lo) throw std::invalid_argument("interval endpoints out of order");
        LimitInterval r;
        r.lo = std::move(lo);
        r.hi = std::move(hi);
        return r;
    }

    static LimitInterval ray_below(Surd hi) {  // (-inf, hi]
        LimitInterval r;
        r.lo_infinite = true;
        r.lo_closed = false;
        r.hi = std::move(hi);
        return r;
    }

    static LimitInterval ray_above(Surd lo) {  // [lo, +inf)
        LimitInterval r;
        r.hi_infinite = true;
        r.hi_closed = false;
        r.lo = std::move(lo);
        return r;
    }

    static LimitInterval whole_line() {
        LimitInterval r;
        r.lo_infinite = r.hi_infinite = true;
        r.lo_closed = r.hi_closed = false;
        return r;
    }

    bool contains(const Surd& x) const {
        if (!lo_infinite) {
            int c = lo.compare(x);
            if (c > 0 || (c == 0 && !lo_closed)) return false;
        }
        if (!hi_infinite) {
            int c = x.compare(hi);
            if (c > 0 || (c == 0 && !hi_closed)) return false;
        }
        return true;
    }

    bool operator==(const LimitInterval& other) const {
        if (lo_infinite != other.lo_infinite || hi_infinite != other.hi_infinite) return false;
        if (!lo_infinite && (lo_closed != other.lo_closed || !(lo == other.lo))) return false;
        if (!hi_infinite && (hi_closed != other.hi_closed || !(hi == other.hi))) return false;
        return true;
    }

    std::string str() const {
        std::string s;
        s += lo_infinite ? "(-inf" : (lo_closed ? "[" : "(") + lo.str();
        s += ", ";
        s += hi_infinite ? "+inf)" : hi.str() + (hi_closed ? "]" : ")");
        return s;
    }
};

// A sorted union of pairwise disjoint intervals.
class IntervalSet {
  public:
    IntervalSet() = default;

    explicit IntervalSet(std::vector<LimitInterval> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
            const LimitInterval& a = parts_[i];
            const LimitInterval& b = parts_[i + 1];
            bool separated = !a.hi_infinite && !b.lo_infinite &&
                             (a.hi < b.lo || (a.hi == b.lo && !a.hi_closed && !b.lo_closed));
            if (!separated) throw std::invalid_argument("intervals not sorted and disjoint");
        }
    }

    bool empty() const { return parts_.empty(); }
    const std::vector<LimitInterval>& intervals() const { return parts_; }

    bool contains(const Surd& x) const {
        for (const LimitInterval& part : parts_)
            if (part.contains(x)) return true;
        return false;
    }

    bool operator==(const IntervalSet& other) const { return parts_ == other.parts_; }

    std::string str() const {
        if (parts_.empty()) return "{}";
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += " U ";
            s += parts_[i].str();
        }
        return s;
    }

  private:
    std::vector<LimitInterval> parts_;
};

// Real limit points of zeros for a sequence satisfying
// f_n = a(x) f_{n-1} + b(x) f_{n-2}: the locus where the characteristic
// roots of t^2 - a(x) t - b(x) share their modulus, i.e. where the
// discriminant a^2 + 4b is nonpositive. Returned with exact endpoints.
inline IntervalSet bkw_limit_set(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero())
        throw DegenerateRecurrence("both recurrence coefficients are zero");
    Polynomial d = a * a + b * BigInt(4);
    if (d.is_zero())
        throw DegenerateRecurrence("characteristic roots coincide for every x");
    if (d.degree() == 0)
        return d.leading() < 0 ? IntervalSet({LimitInterval::whole_line()}) : IntervalSet();

    // roots of the discriminant as exact surds, with multiplicities
    std::vector<std::pair<Surd, int>> roots;
    for (const auto& [factor, mult] : Polynomial::squarefree_decomposition(d)) {
        switch (factor.degree()) {
            case 0:
                break;
            case 1:
                roots.emplace_back(Surd(Rational(-factor[0], factor[1])), mult);
                break;
            case 2: {
                const BigInt& qa = factor[2];
                BigInt disc = factor[1] * factor[1] - 4 * qa * factor[0];
                if (disc < 0) break;  // conjugate pair, no real locus
                Rational center(-factor[1], 2 * qa);
                Rational half(1, 2 * qa);
                roots.emplace_back(Surd(center, -half, disc), mult);
                roots.emplace_back(Surd(center, half, disc), mult);
                break;
            }
            default:
                throw UnsupportedDiscriminant(factor.degree());
        }
    }
    if (roots.empty())
        return d[0] < 0 ? IntervalSet({LimitInterval::whole_line()}) : IntervalSet();
    std::sort(roots.begin(), roots.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    // gap_sign[i] is the sign of d on the open interval left of roots[i]
    // (right of roots[i-1]); walk from the leading sign, flipping at roots
    // of odd multiplicity.
    const int k = static_cast<int>(roots.size());
    std::vector<int> gap_sign(k + 1);
    gap_sign[k] = d.leading() > 0 ? 1 : -1;
    for (int i = k - 1; i >= 0; --i)
        gap_sign[i] = roots[i].second % 2 == 1 ? -gap_sign[i + 1] : gap_sign[i + 1];

    std::vector<LimitInterval> parts;
    for (int i = 0; i <= k; ++i) {
        if (gap_sign[i] > 0) continue;
        int j = i;
        while (j <= k && gap_sign[j] < 0) ++j;  // negative run covers gaps i..j-1
        LimitInterval part;
        if (i == 0) {
            part.lo_infinite = true;
            part.lo_closed = false;
        } else {
            part.lo = roots[i - 1].first;
        }
        if (j == k + 1) {
            part.hi_infinite = true;
            part.hi_closed = false;
        } else {
            part.hi = roots[j - 1].first;  // right boundary of the last negative gap
        }
        parts.push_back(std::move(part));
        i = j;
    }
    // roots buried between two positive gaps are isolated limit points
    for (int t = 0; t + 1 <= k; ++t)
        if (gap_sign[t] > 0 && gap_sign[t + 1] > 0)
            parts.push_back(LimitInterval::closed(roots[t].first, roots[t].first));
    std::sort(parts.begin(), parts.end(), [](const LimitInterval& x, const LimitInterval& y) {
        if (x.lo_infinite != y.lo_infinite) return x.lo_infinite;
        if (x.lo_infinite) return false;
        return x.lo < y.lo;
    });
    return IntervalSet(std::move(parts));
}

// The limit interval of the segmented chains with segment length m:
// [-1/(sqrt(m-1)-1)^2, -1/(sqrt(m-1)+1)^2], rationalized to
// -(m +- 2 sqrt(m-1)) / (m-2)^2.
inline IntervalSet interval_Im(int m) {
    if (m < 3) throw std::invalid_argument("segment length must be at least 3");
    BigInt den = BigInt(m - 2) * (m - 2);
    Rational center(BigInt(-m), den);
    Rational half(BigInt(2), den);
    return IntervalSet({LimitInterval::closed(Surd(center, -half, m - 1), Surd(center, half, m - 1))});
}

// Whether the two-term recurrence is honestly nondegenerate at randomly
// sampled rational points outside the limit set: the characteristic roots
// there have distinct moduli, and the Binet weights determined by the
// initial polynomials f0, f1 are both nonzero. All checks are exact.
struct NondegeneracyReport {
    int samples = 0;
    bool moduli_distinct = true;
    bool weights_nonzero = true;
    bool ok() const { return moduli_distinct && weights_nonzero; }
};

inline NondegeneracyReport check_bkw_nondegeneracy(const Polynomial& a, const Polynomial& b,
                                                   const Polynomial& f0, const Polynomial& f1,
                                                   const IntervalSet& limit_set, int samples = 5,
                                                   std::uint32_t seed = 0x1d8a5) {
    NondegeneracyReport report;
    Polynomial d = a * a + b * BigInt(4);
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-400, 400);
    std::uniform_int_distribution<int> den(1, 40);
    for (int tries = 0; report.samples < samples && tries < 4000; ++tries) {
        Rational x(num(rng), den(rng));
        if (limit_set.contains(Surd(x))) continue;
        Rational dv = d.evaluate(x);
        if (!(dv > 0)) continue;  // boundary or inside: equal moduli by design
        ++report.samples;
        Rational av = a.evaluate(x);
        if (av == 0) report.moduli_distinct = false;  // roots are +-sqrt(b), equal modulus
        // lambda = (a(x) +- sqrt(dv)) / 2 with sqrt(P/Q) = sqrt(PQ)/Q
        BigInt rad = numerator(dv) * denominator(dv);
        Surd sqrt_d(Rational(0), Rational(BigInt(1), denominator(dv)), rad);
        Surd lam_plus = (Surd(av) + sqrt_d) * Surd(Rational(1, 2));
        Surd lam_minus = (Surd(av) - sqrt_d) * Surd(Rational(1, 2));
        Surd f0v{f0.evaluate(x)}, f1v{f1.evaluate(x)};
        if ((f1v - lam_minus * f0v).sign() == 0 || (f1v - lam_plus * f0v).sign() == 0)
            report.weights_nonzero = false;
    }
    return report;
}

// Zeros of the n-th pyrene chain polynomial come in reciprocal pairs
// (-r_k, -1/r_k) with r_k = (sqrt(1+cos^2 t_k) + cos t_k)^2 at
// t_k = k*pi/(2n+2), k = 1..n.
inline std::pair<double, double> pyrene_root(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    double c = std::cos(k * std::numbers::pi / (2.0 * n + 2.0));
    double r = std::sqrt(1.0 + c * c) + c;
    r *= r;
    return {-r, -1.0 / r};
}

// A certified zero of a concrete hexagonal system close to a requested
// point on the negative axis.
struct DensityWitness {
    std::string family;  // always the segmented chain family
    int m = 0;
    int n = 0;
    Rational lo;  // interval holding exactly one sextet zero,
    Rational hi;  // inside [target - eps, target + eps]
};

namespace detail {

// Upper endpoint of the segmented-chain limit interval as a surd.
inline Surd segment_interval_hi(int m) {
    BigInt den = BigInt(m - 2) * (m - 2);
    return Surd(Rational(BigInt(-m), den), Rational(BigInt(2), den), m - 1);
}

// Smallest family able to reach the target: the zigzag family covers
// everything left of the m=3 interval, otherwise the smallest m whose
// interval's right endpoint clears the target (interval overlap then
// guarantees the left endpoint does too).
inline int density_family(const Rational& target) {
    Surd st(target);
    Surd a3(Rational(-3), Rational(-2), 2);  // left endpoint of the m=3 interval
    if (st < a3) return 2;
    int m = 3;
    double td = to_double(target);
    if (td > -0.17) {  // right of the m=3 interval; jump near the closed-form index
        double s = std::sqrt(-1.0 / td) - 1.0;
        if (s * s > 4e6) throw BudgetExceeded("target too close to zero for the family scan");
        m = std::max(3, static_cast<int>(s * s) - 2);
    }
    while (st > segment_interval_hi(m)) ++m;
    while (m > 3 && !(st > segment_interval_hi(m - 1))) --m;
    return m;
}

}  // namespace detail

// Search the chosen segmented-chain family for a certified sextet zero
// within eps of the target, scanning n upward. Candidate indices are found
// by running the two scaled integer recurrences
// W_j = ((m-2)p + q) W_{j-1} + pq W_{j-2} (W_j = q^j f_j(p/q)) at the
// window endpoints and watching for a sign change.
//
// For m >= 3 the certificate and the isolating interval come from one
// Sturm chain, and n_cap bounds the scan directly. The zigzag family
// (m = 2) covers the far left tail, where the zeros -sec^2(k pi/(n+2))/4
// thin out like 4|x|^{3/2} pi / n^2: there the scan bound is derived from
// that spacing (never below n_cap), and the single zero in the window is
// certified without a chain. A sign change gives at least one zero; at
// most one follows because consecutive zeros sit exactly pi/(n+2) apart
// in theta = arccos(sqrt(u)), u = -1/(4x), while the window's theta-span
// is at most (B - A) / (2 sqrt(min u(1-u))) by the mean value theorem.
// That bound is checked as a rational inequality (with 4 pi^2 rounded
// down), halving the window around the sign change until it holds.
inline DensityWitness density_witness(const Rational& target, const Rational& eps,
                                      int n_cap = 500) {
    if (!(target < 0)) throw std::invalid_argument("target must be negative");
    if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
    const int m = detail::density_family(target);
    const Rational lo_x = target - eps, hi_x = target + eps;

    struct Track {
        BigInt prev, cur, step, scale;
        void advance() {
            BigInt next = step * cur + scale * prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
    };
    auto start = [&](const Rational& x) {
        const BigInt p = numerator(x), q = denominator(x);
        return Track{1, BigInt(m - 1) * p + q, BigInt(m - 2) * p + q, p * q};
    };
    // sign of f_n at x, by running the scaled recurrence out to n
    auto sign_at = [&](const Rational& x, int n) {
        Track t = start(x);
        for (int j = 1; j < n; ++j) t.advance();
        return sign_of(t.cur);
    };

    auto sturm_certify = [&](int n, Rational lo, Rational hi) {
        Polynomial f = line_m_poly(m, n);
        SturmChain chain(f);
        if (!chain.squarefree()) chain = SturmChain(f.squarefree_part());
        int count = chain.count(lo, hi);
        while (count != 1) {
            Rational mid = midpoint(lo, hi);
            int left = chain.count(lo, mid);
            if (left >= 1) {
                hi = mid;
                count = left;
            } else {
                lo = mid;
                count = chain.count(lo, hi);
            }
        }
        return DensityWitness{"line-m", m, n, lo, hi};
    };

    // exact single-zero certificate for the zigzag family (see above);
    // requires the window to stay left of -1/4
    auto zigzag_certify = [&](int n, Rational wl, int sl, Rational wh,
                              int sh) -> DensityWitness {
        const Rational quarter(-1, 4);
        const BigInt nn = BigInt(n + 2) * (n + 2);
        while (true) {
            Rational a = Rational(-1) / (4 * wl), b = Rational(-1) / (4 * wh);
            Rational margin_a = a * (1 - a), margin_b = b * (1 - b);
            Rational span = b - a;
            if (10000 * nn * span * span < 394784 * std::min(margin_a, margin_b))
                return {"line-m", m, n, wl, wh};
            Rational mid = midpoint(wl, wh);
            int sm = sign_at(mid, n);
            if (sm == 0) return {"line-m", m, n, mid, mid};
            if (sm == sl)
                wl = mid;
            else
                wh = mid;
        }
    };

    int scan_cap = n_cap;
    if (m == 2) {
        // spacing-derived bound: zeros near the target are about
        // 4 |t|^{3/2} pi / n^2 apart, so resolving eps needs n^2 on that
        // order; the 6x margin absorbs locally uneven spacing
        double slope = 4.0 * std::pow(-to_double(target), 1.5);
        double need = 6.0 * std::sqrt(slope / to_double(eps));
        scan_cap = std::max(n_cap, static_cast<int>(std::min(30000.0, std::ceil(need))));
    }

    Track track_lo = start(lo_x), track_hi = start(hi_x);
    for (int n = 1; n <= scan_cap; ++n) {
        const int sl = sign_of(track_lo.cur), sh = sign_of(track_hi.cur);
        if (sl == 0) return {"line-m", m, n, lo_x, lo_x};
        if (sh == 0) return {"line-m", m, n, hi_x, hi_x};
        if (sl != sh) {
            // opposite signs put a zero strictly inside the window
            if (m == 2 && hi_x < Rational(-1, 4))
                return zigzag_certify(n, lo_x, sl, hi_x, sh);
            return sturm_certify(n, lo_x, hi_x);
        }
        track_lo.advance();
        track_hi.advance();
    }
    throw BudgetExceeded("no zero within eps of " + to_string(target) + " for n <= " +
                         std::to_string(scan_cap) + " in the m=" + std::to_string(m) +
                         " family");
}

// Resonance energy of the n-th pyrene chain, the closed trigonometric sum
// 2 sum_k sqrt(1 + cos^2(k pi/(2n+2))).
inline double aihara_re_pyrene(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    double sum = 0;
    for (int k = 1; k <= n; ++k) {
        double c = std::cos(k * std::numbers::pi / (2.0 * n + 2.0));
        sum += std::sqrt(1.0 + c * c);
    }
    return 2.0 * sum;
}

// Limit of aihara_re_pyrene(n) / n: the trigonometric sum becomes the
// integral (4/pi) int_0^{pi/2} sqrt(1 + cos^2 t) dt, evaluated here by
// Simpson's rule well past double precision's needs.
inline double aihara_per_unit_limit() {
    constexpr int panels = 1 << 16;
    const double h = std::numbers::pi / 2.0 / panels;
    auto f = [](double t) {
        double c = std::cos(t);
        return std::sqrt(1.0 + c * c);
    };
    double sum = f(0.0) + f(std::numbers::pi / 2.0);
    for (int i = 1; i < panels; ++i) sum += (i % 2 ? 4.0 : 2.0) * f(i * h);
    return (4.0 / std::numbers::pi) * (sum * h / 3.0);
}

// The same energy for any polynomial whose zeros are all negative reals:
// sum of sqrt(-x) over the zeros, with multiplicity, from exact isolating
// intervals refined to 1e-12.
inline double aihara_re_from_roots(const Polynomial& f) {
    if (f.degree() < 1) throw std::invalid_argument("need a nonconstant polynomial");
    RootIsolation iso = isolate_roots(f, Rational(BigInt(1), boost::multiprecision::pow(BigInt(10), 12)));
    if (iso.nonreal_count > 0 || f[0] == 0)
        throw std::domain_error("polynomial must have only negative real zeros");
    double sum = 0;
    for (const RootInterval& root : iso.roots) {
        Rational lo = root.lo, hi = root.hi;
        for (int guard = 0; !(hi < 0) && guard < 64; ++guard)
            refine_isolating_interval(root.factor, lo, hi);
        if (!(hi < 0)) throw std::domain_error("polynomial must have only negative real zeros");
        sum += root.multiplicity * std::sqrt(-to_double(midpoint(lo, hi)));
    }
    return sum;
}

// Treating the coefficients of the n-th pyrene chain polynomial as a
// probability distribution on {0..2n}: exact mean n (the coefficients are
// palindromic), variance by the trigonometric sum
// (1/2) sum_k 1/(1+cos^2(k pi/(2n+2))), and the sup distances between the
// normalized distribution and the Gaussian laws (clt_sup against the
// normal CDF at the jump points, llt_sup against the density on the
// lattice).
struct NormalityStats {
    int n = 0;
    Rational mean;
    double variance = 0;
    double clt_sup = 0;
    double llt_sup = 0;
};

inline NormalityStats normality_stats(int n) {
    if (n < 1) throw std::invalid_argument("need n >= 1");
    NormalityStats stats;
    stats.n = n;
    stats.mean = n;
    double variance = 0;
    for (int k = 1; k <= n; ++k) {
        double c = std::cos(k * std::numbers::pi / (2.0 * n + 2.0));
        variance += 0.5 / (1.0 + c * c);
    }
    stats.variance = variance;

    const Polynomial pn = pyrene(n);
    const BigInt total = pn.evaluate(BigInt(1));
    const double sigma = std::sqrt(variance);
    auto phi_cdf = [](double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); };
    const double inv_norm = 1.0 / std::sqrt(2.0 * std::numbers::pi);

    BigInt prefix = 0;
    double clt = 0, llt = 0;
    for (int k = 0; k <= 2 * n; ++k) {
        const double x = (k - n) / sigma;
        const double gauss_cdf = phi_cdf(x);
        const double below = to_double(Rational(prefix, total));
        prefix += pn[k];
        const double upto = to_double(Rational(prefix, total));
        clt = std::max({clt, std::abs(below - gauss_cdf), std::abs(upto - gauss_cdf)});
        const double mass = to_double(Rational(pn[k], total));
        llt = std::max(llt, std::abs(sigma * mass - inv_norm * std::exp(-0.5 * x * x)));
    }
    stats.clt_sup = clt;
    stats.llt_sup = llt;
    return stats;
}

}  // namespace hexpoly
