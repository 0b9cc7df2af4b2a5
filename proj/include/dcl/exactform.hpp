#pragma once

// Exact rational arithmetic and affine forms a*t + b*i + c in the two
// construction parameters t and i.
//
// Values are stored in 64-bit integers. Every operation is carried out in
// 128-bit intermediates, reduced, and narrowed with an overflow check, so a
// result is either exact or an OverflowError.

#include <cctype>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "dcl/error.hpp"

namespace dcl {

using Int = std::int64_t;
using Wide = __int128;

namespace detail {

inline Int narrow(Wide v, const char* what) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min()) {
        throw OverflowError(std::string("integer overflow in ") + what);
    }
    return static_cast<Int>(v);
}

inline Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

inline Wide wide_mul(Wide a, Wide b) {
    Wide r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("128-bit overflow in multiplication");
    return r;
}

inline Wide wide_add(Wide a, Wide b) {
    Wide r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("128-bit overflow in addition");
    return r;
}

inline Wide wide_gcd(Wide a, Wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b != 0) {
        Wide r = a % b;
        a = b;
        b = r;
    }
    return a;
}

}  // namespace detail

/// Overflow-checked 64-bit helpers.
inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

/// Canonical rational number: den > 0 and gcd(|num|, den) == 1.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(Int value) : num_(value) {}  // NOLINT(google-explicit-constructor)

    Rational(Int num, Int den) { assign(num, den); }

    Int num() const noexcept { return num_; }
    Int den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    bool is_zero() const noexcept { return num_ == 0; }

    /// Builds from a 128-bit numerator/denominator pair, reducing first.
    static Rational from_wide(Wide num, Wide den) {
        if (den == 0) throw Error("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        Wide g = detail::wide_gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        Rational r;
        r.num_ = detail::narrow(num, "rational numerator");
        r.den_ = detail::narrow(den, "rational denominator");
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_wide(Wide(a.num_) * b.den_ + Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from_wide(Wide(a.num_) * b.den_ - Wide(b.num_) * a.den_, Wide(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_wide(Wide(a.num_) * b.num_, Wide(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("division by zero");
        return from_wide(Wide(a.num_) * b.den_, Wide(a.den_) * b.num_);
    }
    Rational operator-() const { return from_wide(-Wide(num_), den_); }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return Wide(a.num_) * b.den_ <=> Wide(b.num_) * a.den_;
    }

    /// "p" or "p/q".
    std::string to_string() const {
        std::string s = std::to_string(num_);
        if (den_ != 1) s += "/" + std::to_string(den_);
        return s;
    }

    long double to_long_double() const {
        return static_cast<long double>(num_) / static_cast<long double>(den_);
    }

private:
    void assign(Int num, Int den) { *this = from_wide(num, den); }

    Int num_ = 0;
    Int den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

/// coeff_t * t + coeff_i * i + constant, all coefficients exact rationals.
struct AffineForm {
    Rational coeff_t;
    Rational coeff_i;
    Rational constant;

    static AffineForm of(Rational ct, Rational ci, Rational c) { return {ct, ci, c}; }
    static AffineForm constant_form(Rational c) { return {0, 0, c}; }

    bool is_constant() const { return coeff_t.is_zero() && coeff_i.is_zero(); }
    bool depends_on_i() const { return !coeff_i.is_zero(); }

    friend AffineForm operator+(const AffineForm& a, const AffineForm& b) {
        return {a.coeff_t + b.coeff_t, a.coeff_i + b.coeff_i, a.constant + b.constant};
    }
    friend AffineForm operator-(const AffineForm& a, const AffineForm& b) {
        return {a.coeff_t - b.coeff_t, a.coeff_i - b.coeff_i, a.constant - b.constant};
    }
    friend AffineForm operator*(const Rational& k, const AffineForm& f) {
        return {k * f.coeff_t, k * f.coeff_i, k * f.constant};
    }
    AffineForm operator-() const { return {-coeff_t, -coeff_i, -constant}; }
    AffineForm& operator+=(const AffineForm& o) { return *this = *this + o; }

    friend bool operator==(const AffineForm&, const AffineForm&) = default;
    friend auto operator<=>(const AffineForm&, const AffineForm&) = default;

    /// Exact value at (t, i). The numerator is accumulated over the common
    /// denominator before the single final division.
    Rational eval_exact(Int t, Int i) const {
        using detail::wide_add;
        using detail::wide_mul;
        auto lcm = [](Wide a, Wide b) { return wide_mul(a / detail::wide_gcd(a, b), b); };
        Wide den = lcm(lcm(coeff_t.den(), coeff_i.den()), constant.den());
        Wide num = wide_mul(wide_mul(coeff_t.num(), den / coeff_t.den()), t);
        num = wide_add(num, wide_mul(wide_mul(coeff_i.num(), den / coeff_i.den()), i));
        num = wide_add(num, wide_mul(constant.num(), den / constant.den()));
        return Rational::from_wide(num, den);
    }

    /// Integer value at (t, i); NonIntegralError otherwise.
    Int eval(Int t, Int i) const {
        Rational v = eval_exact(t, i);
        if (!v.is_integer()) {
            throw NonIntegralError(to_string() + " is not integral at t=" + std::to_string(t) +
                                       ", i=" + std::to_string(i) + " (value " + v.to_string() + ")",
                                   v.den());
        }
        return v.num();
    }

    /// Rendering "αt+βi+γ": zero terms dropped, unit coefficients implicit,
    /// fractions as p/q.
    std::string to_string() const {
        std::string out;
        auto term = [&out](const Rational& c, const char* var) {
            if (c.is_zero()) return;
            std::string body;
            if (*var != '\0' && c == Rational(1)) {
                body = "";
            } else if (*var != '\0' && c == Rational(-1)) {
                body = "-";
            } else {
                body = c.to_string();
            }
            body += var;
            if (!out.empty() && body.front() != '-') out += '+';
            out += body;
        };
        term(coeff_t, "t");
        term(coeff_i, "i");
        term(constant, "");
        return out.empty() ? "0" : out;
    }
};

inline std::ostream& operator<<(std::ostream& os, const AffineForm& f) { return os << f.to_string(); }

namespace detail {

class FormParser {
public:
    explicit FormParser(std::string_view text) : s_(text) {}

    AffineForm parse_all() {
        AffineForm f = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return f;
    }

private:
    AffineForm expr() {
        skip_ws();
        AffineForm acc{};
        bool first = true;
        while (true) {
            skip_ws();
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
            } else if (!first) {
                break;
            }
            acc += sign * term();
            first = false;
        }
        return acc;
    }

    AffineForm term() {
        skip_ws();
        if (peek() == '(') {
            get();
            AffineForm inner = expr();
            skip_ws();
            if (get() != ')') fail("expected ')'");
            skip_ws();
            if (peek() == '/') {
                get();
                skip_ws();
                Int d = integer();
                if (d == 0) fail("division by zero");
                inner = Rational(1, d) * inner;
            }
            return inner;
        }
        bool have_coeff = false;
        Rational coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            have_coeff = true;
            coeff = integer();
            skip_ws();
            if (peek() == '/') {
                get();
                skip_ws();
                Int d = integer();
                if (d == 0) fail("division by zero");
                coeff = coeff / Rational(d);
            }
            skip_ws();
            if (peek() == '*') {
                get();
                skip_ws();
            }
        }
        char c = peek();
        if (c == 't') {
            get();
            return {coeff, 0, 0};
        }
        if (c == 'i') {
            get();
            return {0, coeff, 0};
        }
        if (!have_coeff) fail(pos_ < s_.size() ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of form");
        return {0, 0, coeff};
    }

    Int integer() {
        std::size_t start = pos_;
        Int v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = checked_add(checked_mul(v, 10), get() - '0');
        }
        if (pos_ == start) fail("expected a number");
        return v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("bad form \"" + std::string(s_) + "\": " + msg + " at column " +
                             std::to_string(pos_ + 1),
                         0);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the rendering grammar of AffineForm::to_string, plus `*` between a
/// coefficient and its variable and parenthesised groups divided by an
/// integer, e.g. "(11t-1)/2".
inline AffineForm parse_form(std::string_view text) { return detail::FormParser(text).parse_all(); }

namespace literals {
inline AffineForm operator""_form(const char* s, std::size_t n) { return parse_form({s, n}); }
}  // namespace literals

}  // namespace dcl
