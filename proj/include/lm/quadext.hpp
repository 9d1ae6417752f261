#pragma once

#include <compare>
#include <string>

#include "lm/rational.hpp"

namespace lm {

/// Exact real number p + q*sqrt(d) with p, q rational and d a squarefree
/// nonnegative integer. Canonical form: q == 0 forces d == 0, and d in {0,1}
/// forces q == 0 (rationals have a unique representation).
struct QuadExt {
    Rat p{0};
    Rat q{0};
    Int d{0};

    QuadExt() = default;
    QuadExt(const Rat& value) : p(value) {}
    QuadExt(int value) : p(value) {}
    QuadExt(const Int& value) : p(Rat(value)) {}

    /// Builds p + q*sqrt(n), extracting square factors of n and reducing to
    /// canonical squarefree form. The represented value is unchanged.
    static QuadExt make(const Rat& p, const Rat& q, const Int& n);

    bool is_rational() const { return q == 0; }
    bool is_zero() const { return p == 0 && q == 0; }

    /// Exact sign of the represented value.
    int sign() const;

    QuadExt operator-() const;
    QuadExt operator+(const QuadExt& o) const;
    QuadExt operator-(const QuadExt& o) const;
    QuadExt operator*(const QuadExt& o) const;
    QuadExt operator/(const QuadExt& o) const;

    bool operator==(const QuadExt& o) const {
        return p == o.p && q == o.q && d == o.d;
    }

    std::string str() const;
};

/// Exact total order on represented values, valid across discriminants.
std::strong_ordering quad_cmp(const QuadExt& a, const QuadExt& b);

inline bool operator<(const QuadExt& a, const QuadExt& b) { return quad_cmp(a, b) < 0; }
inline bool operator>(const QuadExt& a, const QuadExt& b) { return quad_cmp(a, b) > 0; }
inline bool operator<=(const QuadExt& a, const QuadExt& b) { return quad_cmp(a, b) <= 0; }
inline bool operator>=(const QuadExt& a, const QuadExt& b) { return quad_cmp(a, b) >= 0; }

/// Sign of p + q*sqrt(d) where d >= 0 need not be squarefree. Integer
/// squaring only; used internally and by the comparison routines.
int radical_sign(const Rat& p, const Rat& q, const Int& d);

/// Squarefree decomposition n = m^2 * s with s squarefree; returns (m, s).
std::pair<Int, Int> extract_square_part(const Int& n);

/// Some rational strictly between a and b (requires a < b), found by exact
/// bisection; useful for sampling between breakpoints that live in
/// different quadratic fields.
Rat rational_between(const QuadExt& a, const QuadExt& b);

QuadExt parse_quadext(const std::string& text);

/// Point of the extended line. Infinite values carry a sign used by the
/// sequence identification Phi (-1, +1) or 0 when only the projective point
/// is meant.
struct ExtReal {
    bool finite = true;
    int inf_sign = 0;
    QuadExt value;

    ExtReal() = default;
    ExtReal(const QuadExt& v) : finite(true), value(v) {}

    static ExtReal pos_inf() { return infinite(+1); }
    static ExtReal neg_inf() { return infinite(-1); }
    static ExtReal proj_inf() { return infinite(0); }
    static ExtReal infinite(int sign) {
        ExtReal r;
        r.finite = false;
        r.inf_sign = sign;
        return r;
    }

    bool is_infinite() const { return !finite; }

    bool operator==(const ExtReal& o) const {
        if (finite != o.finite) return false;
        if (!finite) return inf_sign == o.inf_sign;
        return value == o.value;
    }

    ExtReal operator-() const {
        if (!finite) return infinite(-inf_sign);
        return ExtReal(-value);
    }

    std::string str() const;
};

/// Order on the extended line; infinite operands must be signed.
std::strong_ordering ext_cmp(const ExtReal& a, const ExtReal& b);

ExtReal parse_extreal(const std::string& text);

} // namespace lm
