#pragma once

// Bounds on f(n), the maximum edge count of an n-vertex graph whose cycles
// have pairwise distinct lengths.
//
// Lower bounds and thresholds use exact integer arithmetic only. The
// logarithmic upper bound is floating point and advisory.

#include <cmath>
#include <cstdint>
#include <optional>

#include "dcl/error.hpp"
#include "dcl/exactform.hpp"

namespace dcl {

inline constexpr Int kPeriod = 27720;
inline constexpr Int kOffset = 169;
inline constexpr double kLimsupCoefficient = 1.98;

inline Int t_for(Int r) { return checked_add(checked_mul(kPeriod, r), kOffset); }

/// True when t = 27720r + 169 for some r >= 1.
inline bool is_valid_t(Int t) { return t > kOffset && (t - kOffset) % kPeriod == 0; }

/// 16 * n_t = 6911t^2 + 1028882t - 3309665, as a 128-bit integer.
inline Wide n_threshold_times16(Int t) {
    using detail::wide_add;
    using detail::wide_mul;
    Wide tt = t;
    return wide_add(wide_add(wide_mul(wide_mul(6911, tt), tt), wide_mul(1028882, tt)), -3309665);
}

/// n_t in 128 bits, for asymptotic checks beyond the 64-bit range. Requires
/// t = 169 (mod 27720) but not r >= 1.
inline Wide n_threshold_wide(Int t) {
    if ((t - kOffset) % kPeriod != 0) throw InvalidT("t=" + std::to_string(t) + " is not 169 mod 27720");
    Wide v = n_threshold_times16(t);
    if (v % 16 != 0) throw Error("internal: 16 does not divide 16*n_t at t=" + std::to_string(t));
    return v / 16;
}

/// n_t = (6911t^2 + 1028882t - 3309665) / 16 for t = 27720r + 169, r >= 1.
inline Int n_threshold(Int t) {
    if (!is_valid_t(t)) throw InvalidT("t=" + std::to_string(t) + " is not of the form 27720r+169 with r>=1");
    return detail::narrow(n_threshold_wide(t), "n_t");
}

struct LowerBound {
    Int t = 0;
    Int bound = 0;  ///< n + 32t - 1
};

/// Largest admissible t with n >= n_t, and the bound n + 32t - 1.
inline std::optional<LowerBound> lai_lower(Int n) {
    auto fits = [n](Int r) { return n_threshold_wide(t_for(r)) <= Wide(n); };
    if (n < 1 || !fits(1)) return std::nullopt;
    Int lo = 1;
    Int hi = 2;
    while (fits(hi)) {
        lo = hi;
        hi *= 2;
    }
    while (hi - lo > 1) {
        Int mid = lo + (hi - lo) / 2;
        (fits(mid) ? lo : hi) = mid;
    }
    Int t = t_for(lo);
    return LowerBound{t, checked_add(n, checked_sub(checked_mul(32, t), 1))};
}

/// Largest s with s*s <= v.
inline Int isqrt(Int v) {
    if (v < 0) throw Error("isqrt of negative value");
    Int s = static_cast<Int>(std::sqrt(static_cast<long double>(v)));
    while (s > 0 && Wide(s) * s > v) --s;
    while (Wide(s + 1) * (s + 1) <= v) ++s;
    return s;
}

/// n + floor((sqrt(8n-23) + 1) / 2), n >= 3.
///
/// With s = isqrt(8n-23): (sqrt(D)+1)/2 >= k  <=>  sqrt(D) >= 2k-1  <=>
/// s >= 2k-1, so the floor is (s+1)/2.
inline Int shi_lower(Int n) {
    if (n < 3) throw NTooSmall("Shi's bound needs n >= 3, got n=" + std::to_string(n), 3);
    Int s = isqrt(checked_sub(checked_mul(8, n), 23));
    return checked_add(n, (s + 1) / 2);
}

struct UpperBound {
    int m = 0;
    long double value = 0;
};

/// min over integers m >= 0 with n >= e^{2m}(2m+3)/4 of
///   n - 2 + sqrt(n ln(4n/(2m+3)) + 2n) + log2(n+6).
/// The value decreases in m, so the scan stops at the first m that fails the
/// validity condition.
inline std::optional<UpperBound> lai_upper(Int n) {
    if (n < 2) return std::nullopt;
    const long double nn = static_cast<long double>(n);
    std::optional<UpperBound> best;
    for (int m = 0;; ++m) {
        const long double k = 2.0L * m + 3.0L;
        if (nn < std::exp(2.0L * m) * k / 4.0L) break;
        long double v = nn - 2.0L + std::sqrt(nn * std::log(4.0L * nn / k) + 2.0L * nn) + std::log2(nn + 6.0L);
        if (!best || v < best->value) best = UpperBound{m, v};
    }
    return best;
}

struct LiminfConstant {
    Rational radicand;      ///< 2 + 2562/6911
    long double value = 0;  ///< sqrt(radicand)
    bool square_identity = false;  ///< radicand == 128^2 / 6911
};

inline LiminfConstant liminf_constant() {
    LiminfConstant c;
    c.radicand = Rational(2) + Rational(2562, 6911);
    c.value = std::sqrt(c.radicand.to_long_double());
    c.square_identity = c.radicand == Rational(128 * 128, 6911);
    return c;
}

}  // namespace dcl
