#pragma once

// Exact arithmetic over quadratic extensions: values p + q*sqrt(d) with
// rational p, q and a nonnegative integer radicand d. The radicand is
// normalized to be squarefree, which makes the representation unique
// (1 and sqrt(d) are linearly independent over Q for squarefree d > 1),
// so equality is componentwise and sign determination is exact.

#include "numeric.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace hexpoly {

class Surd {
  public:
    Surd() = default;
    Surd(long long r) : p_(r) {}
    Surd(Rational r) : p_(std::move(r)) {}

    Surd(Rational p, Rational q, BigInt d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
        if (d_ < 0) throw std::domain_error("negative radicand");
        normalize();
    }

    static Surd sqrt_of(BigInt n) { return Surd(0, 1, std::move(n)); }

    const Rational& rational_part() const { return p_; }
    const Rational& surd_coeff() const { return q_; }
    const BigInt& radicand() const { return d_; }
    bool is_rational() const { return q_ == 0; }

    bool operator==(const Surd& other) const {
        return p_ == other.p_ && q_ == other.q_ && (q_ == 0 || d_ == other.d_);
    }

    Surd operator-() const {
        Surd r(*this);
        r.p_ = -r.p_;
        r.q_ = -r.q_;
        return r;
    }

    friend Surd operator+(const Surd& a, const Surd& b) {
        check_compatible(a, b);
        Surd r;
        r.p_ = a.p_ + b.p_;
        r.q_ = a.q_ + b.q_;
        r.d_ = a.q_ != 0 ? a.d_ : b.d_;
        if (r.q_ == 0) r.d_ = 1;
        return r;
    }

    friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }

    friend Surd operator*(const Surd& a, const Surd& b) {
        check_compatible(a, b);
        const BigInt d = a.q_ != 0 ? a.d_ : b.d_;
        Surd r;
        r.p_ = a.p_ * b.p_ + a.q_ * b.q_ * Rational(d);
        r.q_ = a.p_ * b.q_ + a.q_ * b.p_;
        r.d_ = d;
        if (r.q_ == 0) r.d_ = 1;
        return r;
    }

    Surd pow(unsigned e) const {
        Surd acc(1);
        Surd base(*this);
        for (; e > 0; e >>= 1) {
            if (e & 1) acc = acc * base;
            base = base * base;
        }
        return acc;
    }

    // Exact sign. For p + q*sqrt(d) with p, q of opposite signs the sign is
    // decided by comparing p^2 against q^2 d.
    int sign() const {
        if (q_ == 0) return sign_of(p_);
        if (p_ == 0) return sign_of(q_);
        int sp = sign_of(p_), sq = sign_of(q_);
        if (sp == sq) return sp;
        Rational diff = p_ * p_ - q_ * q_ * Rational(d_);
        int sd = sign_of(diff);
        if (sd == 0) return 0;
        return sd > 0 ? sp : sq;
    }

    // Three-way comparison, valid across distinct radicands. With matching
    // (or trivial) radicands this is the exact sign of the difference.
    // Distinct squarefree radicands force inequality, so refining rational
    // brackets around each value must separate them.
    int compare(const Surd& other) const {
        if (q_ == 0 || other.q_ == 0 || d_ == other.d_) return (*this - other).sign();
        Rational alo, ahi, blo, bhi;
        bracket(alo, ahi);
        other.bracket(blo, bhi);
        for (int iter = 0; iter < 2048; ++iter) {
            if (ahi < blo) return -1;
            if (bhi < alo) return 1;
            bracket_refine(alo, ahi);
            other.bracket_refine(blo, bhi);
        }
        throw std::logic_error("surd comparison failed to separate values");
    }

    bool operator<(const Surd& other) const { return compare(other) < 0; }
    bool operator<=(const Surd& other) const { return compare(other) <= 0; }
    bool operator>(const Surd& other) const { return compare(other) > 0; }
    bool operator>=(const Surd& other) const { return compare(other) >= 0; }

    double to_double() const {
        double v = hexpoly::to_double(p_);
        if (q_ != 0) v += hexpoly::to_double(q_) * std::sqrt(hexpoly::to_double(Rational(d_)));
        return v;
    }

    std::string str() const {
        if (q_ == 0) return to_string(p_);
        std::string s = p_ == 0 ? "" : to_string(p_);
        if (q_ > 0 && p_ != 0) s += "+";
        if (q_ == -1)
            s += "-";
        else if (q_ != 1)
            s += to_string(q_) + "*";
        s += "sqrt(" + d_.str() + ")";
        return s;
    }

  private:
    void normalize() {
        if (d_ == 0) q_ = 0;  // sqrt(0) contributes nothing
        if (q_ == 0) {
            d_ = 1;
            return;
        }
        if (d_ == 1) {
            p_ += q_;
            q_ = 0;
            return;
        }
        // pull square factors out of the radicand by trial division; the
        // radicands used in this library are small enough that this makes
        // them fully squarefree
        BigInt square_root = 1;
        for (BigInt f = 2; f <= 100000 && f * f <= d_; ++f) {
            BigInt ff = f * f;
            while (d_ % ff == 0) {
                d_ /= ff;
                square_root *= f;
            }
        }
        BigInt r = boost::multiprecision::sqrt(d_);
        if (r * r == d_) {
            square_root *= r;
            d_ = 1;
        }
        q_ *= Rational(square_root);
        if (d_ == 1) {
            p_ += q_;
            q_ = 0;
        }
    }

    static void check_compatible(const Surd& a, const Surd& b) {
        if (a.q_ != 0 && b.q_ != 0 && a.d_ != b.d_)
            throw std::domain_error("arithmetic on mixed radicands");
    }

    // exact rational bracket lo < value < hi (or lo = hi = value)
    void bracket(Rational& lo, Rational& hi) const {
        BigInt root = boost::multiprecision::sqrt(d_);
        Rational rlo(root), rhi(root + 1);
        if (q_ > 0) {
            lo = p_ + q_ * rlo;
            hi = p_ + q_ * rhi;
        } else {
            lo = p_ + q_ * rhi;
            hi = p_ + q_ * rlo;
        }
    }

    void bracket_refine(Rational& lo, Rational& hi) const {
        Rational mid = midpoint(lo, hi);
        // which side of mid the value lies on: sign of (value - mid)
        Surd diff = *this - Surd(mid);
        if (diff.sign() >= 0)
            lo = mid;
        else
            hi = mid;
    }

    Rational p_ = 0;
    Rational q_ = 0;
    BigInt d_ = 1;
};

}  // namespace hexpoly
