#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "lm/errors.hpp"

namespace lm {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sgn(const Int& x) { return x.sign(); }
inline int sgn(const Rat& x) { return x.sign(); }

/// Quotient n/d as an exact rational; unlike the raw constructor this
/// accepts a negative denominator.
inline Rat make_rat(Int n, Int d) {
    if (d == 0) fail(errc::division_by_zero, "zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rat(n, d);
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_rat(const Rat& r) { return floor_div(num(r), den(r)); }
inline Int ceil_rat(const Rat& r) { return -floor_rat(-r); }

inline Int isqrt(const Int& n) { return boost::multiprecision::sqrt(n); }

inline bool is_square(const Int& n, Int* root = nullptr) {
    if (n < 0) return false;
    Int r = isqrt(n);
    if (root) *root = r;
    return r * r == n;
}

std::string rat_to_string(const Rat& r);
Rat parse_rat(const std::string& text);

inline std::string rat_to_string(const Rat& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

/// Accepts "n" or "n/d" with an optional leading sign.
inline Rat parse_rat(const std::string& raw) {
    std::string text = raw;
    if (!text.empty() && text[0] == '+') text.erase(0, 1); // cpp_int rejects '+'
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int n(text.substr(0, slash));
        Int d(text.substr(slash + 1));
        if (d == 0) fail(errc::division_by_zero, "rational with zero denominator: " + text);
        return Rat(n, d);
    } catch (const std::runtime_error& e) {
        throw;
    } catch (const std::exception&) {
        fail(errc::syntax_error, "bad rational literal: " + text);
    }
}

} // namespace lm
