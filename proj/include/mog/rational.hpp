#ifndef MOG_RATIONAL_HPP
#define MOG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "mog/errors.hpp"

namespace mog {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// Parses a nonnegative rational from "p/q", an integer, or a decimal string.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw input_error("invalid rational: '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    for (char c : text) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '.')) fail();
    }
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        const std::string_view num = text.substr(0, slash);
        const std::string_view den = text.substr(slash + 1);
        if (num.empty() || den.empty() || num.find('.') != std::string_view::npos ||
            den.find('.') != std::string_view::npos || den.find('/') != std::string_view::npos) {
            fail();
        }
        Integer p{std::string(num)};
        Integer q{std::string(den)};
        if (q == 0) throw input_error("zero denominator in '" + std::string(text) + "'");
        return Rational(p, q);
    }
    const auto dot = text.find('.');
    if (dot != std::string_view::npos) {
        const std::string_view whole = text.substr(0, dot);
        const std::string_view frac = text.substr(dot + 1);
        if (frac.empty() || frac.find('.') != std::string_view::npos) fail();
        Integer p(whole.empty() ? "0" : std::string(whole));
        Integer scale = 1;
        for (char c : frac) {
            (void)c;
            scale *= 10;
        }
        p *= scale;
        p += Integer(std::string(frac));
        return Rational(p, scale);
    }
    return Rational(Integer(std::string(text)));
}

/// "p/q", or just "p" when the denominator is 1.
inline std::string to_exact_string(const Rational& r) {
    const Integer num = numerator(r);
    const Integer den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Decimal rendering, round-half-up at the given number of places; trailing
/// zeros in the fraction are trimmed ("3/4" renders as "0.75" at 6 places).
inline std::string to_decimal_string(const Rational& r, int places = 6) {
    if (places < 0) throw input_error("negative decimal precision");
    Integer scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    // round(r * scale): floor plus half-up adjustment (r is nonnegative here).
    Integer scaled_num = numerator(r) * scale * 2 + denominator(r);
    Integer rounded = scaled_num / (denominator(r) * 2);
    std::string digits = rounded.str();
    if (places == 0) return digits;
    if (digits.size() <= static_cast<std::size_t>(places)) {
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    }
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
    return digits;
}

/// base^k for integer k (negative exponents allowed when base != 0).
inline Rational rational_pow(const Rational& base, long k) {
    if (k < 0) {
        if (base == 0) throw input_error("zero base with negative exponent");
        return Rational(1) / rational_pow(base, -k);
    }
    Rational result = 1;
    Rational b = base;
    unsigned long e = static_cast<unsigned long>(k);
    while (e != 0) {
        if (e & 1UL) result *= b;
        b *= b;
        e >>= 1UL;
    }
    return result;
}

/// Largest k with base^k <= v, for v > 0 and base > 1.
inline long floor_log(const Rational& v, const Rational& base) {
    if (v <= 0) throw positivity_error("floor_log requires a positive value");
    if (base <= 1) throw input_error("floor_log requires base > 1");
    long k = 0;
    if (v >= 1) {
        Rational p = 1;
        while (p * base <= v) {
            p *= base;
            ++k;
        }
    } else {
        Rational p = 1;
        while (p > v) {
            p /= base;
            --k;
        }
    }
    return k;
}

} // namespace mog

#endif // MOG_RATIONAL_HPP
