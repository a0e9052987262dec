#pragma once

// Exact integer and rational arithmetic used throughout the library.
// Everything that feeds a theorem check is computed over these types;
// doubles only appear in explicitly approximate outputs.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hexpoly {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline int sign_of(const BigInt& v) { return v.sign(); }
inline int sign_of(const Rational& v) { return v.sign(); }

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

inline BigInt abs_val(const BigInt& v) { return v < 0 ? BigInt(-v) : v; }

// C(n, k) with exact arithmetic; 0 outside the Pascal triangle.
inline BigInt binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= (n - k + i);
        result /= i;  // exact: result is C(n-k+i, i) after each step
    }
    return result;
}

inline std::string to_string(const BigInt& v) { return v.str(); }

// Rationals print as "p" or "p/q" with q > 0 in lowest terms.
inline std::string to_string(const Rational& v) {
    if (denominator(v) == 1) return numerator(v).str();
    return numerator(v).str() + "/" + denominator(v).str();
}

// Accepts the same "p" / "p/q" shapes that to_string produces.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("not a rational: empty string");
    auto slash = text.find('/');
    auto dot = text.find('.');
    try {
        if (slash != std::string::npos) {
            if (dot != std::string::npos) throw std::invalid_argument("mixed notation");
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) throw std::invalid_argument("zero denominator");
            return Rational(num, den);
        }
        if (dot != std::string::npos) {
            std::string frac = text.substr(dot + 1);
            if (frac.empty()) frac = "0";
            if (frac.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("not a rational: " + text);
            std::string whole = text.substr(0, dot);
            bool negative = !whole.empty() && whole[0] == '-';
            if (whole.empty() || whole == "-" || whole == "+") whole += '0';
            BigInt den = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
            Rational value = Rational(BigInt(whole)) + Rational(BigInt(frac), den) *
                                                           (negative ? -1 : 1);
            return value;
        }
        return Rational(BigInt(text));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational: " + text);
    }
}

// Midpoint helper; rationals are closed under this, no rounding anywhere.
inline Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) / 2;
}

}  // namespace hexpoly
