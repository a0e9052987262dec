#pragma once

// Dense univariate polynomials over the integers, with the exact algebra
// needed by the root-location and coefficient-shape machinery: ring
// arithmetic, exact division, primitive-PRS gcd, Yun squarefree
// decomposition, Taylor shift, and the coefficient predicates (symmetry,
// unimodality, log-concavity, Newton's inequalities).

#include "numeric.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hexpoly {

// Raised by is_symmetric when the constant term vanishes: the usual
// palindrome test a_k == a_{n-k} is not meaningful with trailing zeros.
struct ZeroConstantTerm : std::domain_error {
    ZeroConstantTerm() : std::domain_error("constant term is zero") {}
};

// Raised by the shape predicates, which are only defined for polynomials
// with nonnegative coefficients.
struct NegativeCoefficient : std::domain_error {
    NegativeCoefficient() : std::domain_error("negative coefficient") {}
};

class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(long long constant) : coeffs_{BigInt(constant)} { trim(); }
    Polynomial(BigInt constant) : coeffs_{std::move(constant)} { trim(); }
    explicit Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial x() { return monomial(1, 1); }

    static Polynomial monomial(BigInt coefficient, std::size_t power) {
        if (coefficient == 0) return {};
        std::vector<BigInt> c(power + 1);
        c[power] = std::move(coefficient);
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    // Coefficient of x^k, zero beyond the degree.
    const BigInt& operator[](std::size_t k) const {
        static const BigInt zero = 0;
        return k < coeffs_.size() ? coeffs_[k] : zero;
    }

    const BigInt& leading() const {
        static const BigInt zero = 0;
        return coeffs_.empty() ? zero : coeffs_.back();
    }

    bool operator==(const Polynomial& other) const { return coeffs_ == other.coeffs_; }

    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Polynomial& operator+=(const Polynomial& other) {
        if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
        trim();
        return *this;
    }

    Polynomial& operator-=(const Polynomial& other) {
        if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
        for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (b.coeffs_[j] == 0) continue;
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Polynomial(std::move(c));
    }

    Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

    Polynomial& operator*=(const BigInt& s) {
        if (s == 0) {
            coeffs_.clear();
        } else {
            for (auto& c : coeffs_) c *= s;
        }
        return *this;
    }

    friend Polynomial operator*(Polynomial a, const BigInt& s) { return a *= s; }
    friend Polynomial operator*(const BigInt& s, Polynomial a) { return a *= s; }

    // Multiply by x^k.
    Polynomial shifted_up(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<BigInt> c(coeffs_.size() + k);
        std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + static_cast<long>(k));
        return Polynomial(std::move(c));
    }

    Rational evaluate(const Rational& t) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    BigInt evaluate(const BigInt& t) const {
        BigInt acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    // Sign of f(p/q) without building a rational: evaluates the integer
    // homogenization sum a_k p^k q^(n-k), whose sign matches when q > 0.
    int sign_at(const Rational& t) const {
        if (is_zero()) return 0;
        const BigInt p = numerator(t);
        const BigInt q = denominator(t);
        BigInt acc = 0;
        BigInt qpow = 1;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc = acc * p + *it * qpow;
            qpow *= q;
        }
        return acc.sign();
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return {};
        std::vector<BigInt> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * i;
        return Polynomial(std::move(c));
    }

    // Taylor shift f(x) -> f(x + t), exact over the integers. Horner over
    // the ring: acc = acc * (x + t) + a_i keeps every step in Z[x].
    Polynomial shift_compose(const BigInt& t) const {
        Polynomial acc;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            Polynomial next = acc.shifted_up(1);
            Polynomial scaled = acc * t;
            acc = std::move(next);
            acc += scaled;
            acc += Polynomial(*it);
        }
        return acc;
    }

    // f(c * x), exact.
    Polynomial scale_arg(const BigInt& c) const {
        Polynomial r(*this);
        BigInt p = 1;
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
            r.coeffs_[i] *= p;
            p *= c;
        }
        r.trim();
        return r;
    }

    // Reverse coefficients: x^n f(1/x) for n = degree. Useful with
    // palindromic families.
    Polynomial reversed() const {
        Polynomial r(*this);
        std::reverse(r.coeffs_.begin(), r.coeffs_.end());
        r.trim();
        return r;
    }

    // Exact quotient in Z[x]: returns q with f == g * q, or nullopt when no
    // such integer-coefficient quotient exists. Divisibility is decided
    // stepwise; when f = g*q holds, every leading division is exact.
    static std::optional<Polynomial> exact_divide(const Polynomial& f, const Polynomial& g) {
        if (g.is_zero()) return std::nullopt;
        if (f.is_zero()) return Polynomial();
        if (f.degree() < g.degree()) return std::nullopt;
        std::vector<BigInt> rem = f.coeffs_;
        std::vector<BigInt> quot(f.coeffs_.size() - g.coeffs_.size() + 1);
        const BigInt& lead = g.leading();
        for (std::size_t i = quot.size(); i-- > 0;) {
            BigInt& top = rem[i + g.coeffs_.size() - 1];
            if (top == 0) continue;
            if (top % lead != 0) return std::nullopt;
            BigInt q = top / lead;
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j) rem[i + j] -= q * g.coeffs_[j];
            quot[i] = std::move(q);
        }
        for (const auto& c : rem)
            if (c != 0) return std::nullopt;
        return Polynomial(std::move(quot));
    }

    // gcd of all coefficients, positive; zero for the zero polynomial.
    BigInt content() const {
        BigInt g = 0;
        for (const auto& c : coeffs_) {
            g = boost::multiprecision::gcd(g, c);
            if (g == 1) break;
        }
        return g;
    }

    // f / content(f); sign of the leading coefficient is preserved.
    Polynomial primitive_part() const {
        if (is_zero()) return {};
        BigInt g = content();
        Polynomial r(*this);
        for (auto& c : r.coeffs_) c /= g;
        return r;
    }

    // Pseudo-remainder prem(f, g) = lc(g)^(deg f - deg g + 1) * f mod g.
    static Polynomial pseudo_rem(const Polynomial& f, const Polynomial& g) {
        std::vector<BigInt> rem = f.coeffs_;
        const auto gsize = g.coeffs_.size();
        const BigInt& lead = g.leading();
        long long steps = static_cast<long long>(f.coeffs_.size()) - static_cast<long long>(gsize) + 1;
        for (long long i = steps - 1; i >= 0; --i) {
            BigInt top = rem[i + gsize - 1];
            for (auto& c : rem) c *= lead;
            for (std::size_t j = 0; j < gsize; ++j) rem[i + j] -= top * g.coeffs_[j];
        }
        rem.resize(gsize - 1);
        return Polynomial(std::move(rem));
    }

    // Primitive-PRS gcd, returned primitive with positive leading
    // coefficient (1 for coprime inputs).
    static Polynomial gcd(const Polynomial& f, const Polynomial& g) {
        Polynomial a = f.is_zero() ? Polynomial() : f.primitive_part();
        Polynomial b = g.is_zero() ? Polynomial() : g.primitive_part();
        if (a.is_zero()) return normalize_sign(b);
        if (b.is_zero()) return normalize_sign(a);
        if (a.degree() < b.degree()) std::swap(a, b);
        while (!b.is_zero()) {
            Polynomial r = pseudo_rem(a, b);
            a = std::move(b);
            b = r.is_zero() ? Polynomial() : r.primitive_part();
        }
        return normalize_sign(a);
    }

    // Squarefree part f / gcd(f, f'), primitive, positive leading sign.
    Polynomial squarefree_part() const {
        if (degree() <= 0) return Polynomial(1);
        Polynomial p = normalize_sign(primitive_part());
        Polynomial d = gcd(p, p.derivative());
        auto q = exact_divide(p, d);
        return normalize_sign(q.value());
    }

    // Yun decomposition of the primitive part: returns pairwise-coprime
    // squarefree factors with their multiplicities, so that up to a
    // rational constant f = prod factor^multiplicity.
    static std::vector<std::pair<Polynomial, int>> squarefree_decomposition(const Polynomial& f) {
        std::vector<std::pair<Polynomial, int>> out;
        if (f.degree() <= 0) return out;
        Polynomial p = normalize_sign(f.primitive_part());
        Polynomial d0 = gcd(p, p.derivative());
        Polynomial b = *exact_divide(p, d0);
        Polynomial c = *exact_divide(p.derivative(), d0);
        int mult = 1;
        while (b.degree() > 0) {
            Polynomial d = c - b.derivative();
            Polynomial a = gcd(b, d);
            if (a.degree() > 0) out.emplace_back(normalize_sign(a), mult);
            b = *exact_divide(b, a);
            c = *exact_divide(d, a);
            ++mult;
        }
        return out;
    }

    // Palindrome test a_k == a_(n-k). Requires a nonzero constant term so
    // the coefficient list is not silently misaligned.
    bool is_symmetric() const {
        if ((*this)[0] == 0) throw ZeroConstantTerm();
        std::size_t n = coeffs_.size();
        for (std::size_t k = 0; k < n / 2; ++k)
            if (coeffs_[k] != coeffs_[n - 1 - k]) return false;
        return true;
    }

    // Coefficients rise to a (possibly flat) peak and then fall.
    bool is_unimodal() const {
        require_nonnegative();
        std::size_t k = 0, n = coeffs_.size();
        while (k + 1 < n && coeffs_[k] <= coeffs_[k + 1]) ++k;
        while (k + 1 < n && coeffs_[k] >= coeffs_[k + 1]) ++k;
        return k + 1 >= n;
    }

    // a_k^2 >= a_(k-1) a_(k+1) for all interior k.
    bool is_log_concave() const {
        require_nonnegative();
        for (std::size_t k = 1; k + 1 < coeffs_.size(); ++k)
            if (coeffs_[k] * coeffs_[k] < coeffs_[k - 1] * coeffs_[k + 1]) return false;
        return true;
    }

    // Newton's inequalities a_k^2 >= a_(k-1) a_(k+1) (1 + 1/k)(1 + 1/(n-k)),
    // checked in the cross-multiplied integer form. Strictly stronger than
    // log-concavity; holds whenever all roots are real and nonpositive.
    bool newton_check() const {
        require_nonnegative();
        const long long n = degree();
        for (long long k = 1; k < n; ++k) {
            BigInt lhs = coeffs_[k] * coeffs_[k] * (k * (n - k));
            BigInt rhs = coeffs_[k - 1] * coeffs_[k + 1] * ((k + 1) * (n - k + 1));
            if (lhs < rhs) return false;
        }
        return true;
    }

    // Rendering like "x^2+4x+1"; used by the command-line tool's plain mode.
    std::string to_string() const {
        if (is_zero()) return "0";
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const BigInt& c = coeffs_[i];
            if (c == 0) continue;
            if (first) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? "-" : "+");
            }
            BigInt a = abs_val(c);
            if (a != 1 || i == 0) out << a.str();
            if (i >= 1) out << "x";
            if (i >= 2) out << "^" << i;
            first = false;
        }
        return out.str();
    }

    static Polynomial normalize_sign(Polynomial p) {
        if (!p.is_zero() && p.leading() < 0)
            for (auto& c : p.coeffs_) c = -c;
        return p;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    void require_nonnegative() const {
        for (const auto& c : coeffs_)
            if (c < 0) throw NegativeCoefficient();
    }

    std::vector<BigInt> coeffs_;
};

}  // namespace hexpoly
