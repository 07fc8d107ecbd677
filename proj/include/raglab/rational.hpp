#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace raglab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact binomial coefficient C(n, k); 0 outside the Pascal triangle.
inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

/// log C(n, k) as a double, via lgamma. Requires 0 <= k <= n.
inline double log_binomial(int n, int k) {
    if (k < 0 || k > n) throw std::invalid_argument("log_binomial: index out of range");
    return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
           std::lgamma(double(n - k) + 1.0);
}

/// Exact conversion of a finite double to the dyadic rational it represents.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rational_from_double: non-finite");
    if (x == 0.0) return Rational(0);
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, |m| in [0.5, 1)
    auto mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    Rational r(mant);
    if (exp >= 0) {
        r *= Rational(BigInt(1) << exp);
    } else {
        r /= Rational(BigInt(1) << (-exp));
    }
    return r;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational_pow(const Rational& base, int e) {
    if (e < 0) throw std::invalid_argument("rational_pow: negative exponent");
    Rational acc(1), b = base;
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

inline BigInt bigint_pow(BigInt base, int e) {
    BigInt acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

/// log of a positive BigInt (double precision is ample for comparisons).
inline double log_bigint(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("log_bigint: non-positive");
    // Split off high bits so the conversion stays in double range.
    const unsigned bits = boost::multiprecision::msb(v);
    if (bits < 960) return std::log(v.convert_to<double>());
    const unsigned shift = bits - 960;
    BigInt top = v >> shift;
    return std::log(top.convert_to<double>()) + double(shift) * std::log(2.0);
}

/// Stable log(sum(exp(x))) over a list of log-values; -inf entries are skipped.
inline double log_sum_exp(const std::vector<double>& xs) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : xs)
        if (x > m) m = x;
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (double x : xs)
        if (std::isfinite(x)) s += std::exp(x - m);
    return m + std::log(s);
}

inline std::int64_t isqrt_floor(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("isqrt_floor: negative");
    auto r = static_cast<std::int64_t>(std::sqrt(double(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace raglab
