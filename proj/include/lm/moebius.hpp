#pragma once

#include <string>
#include <vector>

#include "lm/quadext.hpp"

namespace lm {

enum class MapClass { identity, elliptic, parabolic, hyperbolic };

/// Orientation-preserving Moebius map t -> (a t + b)/(c t + d) stored as an
/// integer matrix up to positive scalar: det > 0, gcd(a,b,c,d) = 1, first
/// nonzero entry positive. Equality is projective equality.
struct ProjMap {
    Int a{1}, b{0}, c{0}, d{1};

    ProjMap() = default;
    ProjMap(Int a_, Int b_, Int c_, Int d_);

    /// Clears denominators of rational coefficients.
    static ProjMap from_rational(const Rat& a_, const Rat& b_, const Rat& c_, const Rat& d_);
    static ProjMap identity_map() { return ProjMap(); }
    static ProjMap translation(const Rat& r) { return from_rational(1, r, 0, 1); }
    static ProjMap scaling(const Rat& s) { return from_rational(s, 0, 0, 1); }

    Int det() const { return a * d - b * c; }
    bool is_identity() const { return b == 0 && c == 0 && a == d; }
    bool is_affine() const { return c == 0; }

    ProjMap inverse() const { return ProjMap(d, -b, -c, a); }

    bool operator==(const ProjMap& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    std::string str() const;        // "(a t + b)/(c t + d)" rendering
    std::string matrix_str() const; // "[[a,b],[c,d]]"
};

/// compose(m1, m2) acts as m1 after m2.
ProjMap compose(const ProjMap& m1, const ProjMap& m2);
inline ProjMap operator*(const ProjMap& m1, const ProjMap& m2) { return compose(m1, m2); }

ExtReal apply(const ProjMap& m, const ExtReal& t);

MapClass classify(const ProjMap& m);

/// Exact fixed points on the extended line: roots of c t^2 + (d-a) t - b = 0,
/// with infinity included iff c == 0. Throws for elliptic maps.
std::vector<ExtReal> fixed_points(const ProjMap& m);

/// (slope, translation) of an affine map; throws NotAffine when c != 0.
std::pair<Rat, Rat> affine_germ(const ProjMap& m);

ProjMap parse_projmap(const std::string& text);

} // namespace lm
