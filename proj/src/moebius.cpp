#include "lm/moebius.hpp"

#include <sstream>

namespace lm {

ProjMap::ProjMap(Int a_, Int b_, Int c_, Int d_) : a(a_), b(b_), c(c_), d(d_) {
    Int g = gcd(gcd(abs(a), abs(b)), gcd(abs(c), abs(d)));
    if (g == 0) fail(errc::invalid_argument, "ProjMap: zero matrix");
    a /= g;
    b /= g;
    c /= g;
    d /= g;
    int lead = 0;
    for (const Int* e : {&a, &b, &c, &d}) {
        if (*e != 0) {
            lead = e->sign();
            break;
        }
    }
    if (lead < 0) {
        a = -a;
        b = -b;
        c = -c;
        d = -d;
    }
    if (det() <= 0)
        fail(errc::not_increasing, "ProjMap: determinant must be positive, got " + det().str());
}

ProjMap ProjMap::from_rational(const Rat& a_, const Rat& b_, const Rat& c_, const Rat& d_) {
    Int l = lcm(lcm(den(a_), den(b_)), lcm(den(c_), den(d_)));
    return ProjMap(num(a_) * (l / den(a_)), num(b_) * (l / den(b_)),
                   num(c_) * (l / den(c_)), num(d_) * (l / den(d_)));
}

ProjMap compose(const ProjMap& m1, const ProjMap& m2) {
    return ProjMap(m1.a * m2.a + m1.b * m2.c, m1.a * m2.b + m1.b * m2.d,
                   m1.c * m2.a + m1.d * m2.c, m1.c * m2.b + m1.d * m2.d);
}

ExtReal apply(const ProjMap& m, const ExtReal& t) {
    if (t.is_infinite()) {
        if (m.c == 0) return t; // affine maps preserve the approach side
        return ExtReal(QuadExt(make_rat(m.a, m.c)));
    }
    const QuadExt& v = t.value;
    QuadExt denom = v * QuadExt(Rat(m.c)) + QuadExt(Rat(m.d));
    if (denom.is_zero()) return ExtReal::proj_inf();
    QuadExt numer = v * QuadExt(Rat(m.a)) + QuadExt(Rat(m.b));
    return ExtReal(numer / denom);
}

MapClass classify(const ProjMap& m) {
    if (m.is_identity()) return MapClass::identity;
    Int t = m.a + m.d;
    Int disc = t * t - 4 * m.det();
    if (disc < 0) return MapClass::elliptic;
    if (disc == 0) return MapClass::parabolic;
    return MapClass::hyperbolic;
}

std::vector<ExtReal> fixed_points(const ProjMap& m) {
    if (m.is_identity()) fail(errc::invalid_argument, "fixed_points of the identity");
    std::vector<ExtReal> out;
    if (m.c == 0) {
        out.push_back(ExtReal::proj_inf());
        if (m.a != m.d) out.push_back(ExtReal(QuadExt(make_rat(m.b, m.d - m.a))));
        return out;
    }
    // c t^2 + (d - a) t - b = 0
    Int A = m.c, B = m.d - m.a, C = -m.b;
    Int disc = B * B - 4 * A * C;
    if (disc < 0) fail(errc::no_real_fixed_point, "elliptic map has no real fixed point");
    if (disc == 0) {
        out.push_back(ExtReal(QuadExt(make_rat(-B, 2 * A))));
        return out;
    }
    QuadExt root1 = QuadExt::make(make_rat(-B, 2 * A), make_rat(1, 2 * A), disc);
    QuadExt root2 = QuadExt::make(make_rat(-B, 2 * A), make_rat(-1, 2 * A), disc);
    if (quad_cmp(root2, root1) < 0) std::swap(root1, root2);
    out.push_back(ExtReal(root1));
    out.push_back(ExtReal(root2));
    return out;
}

std::pair<Rat, Rat> affine_germ(const ProjMap& m) {
    if (m.c != 0) fail(errc::not_affine, "map is not affine: " + m.str());
    return {Rat(m.a, m.d), Rat(m.b, m.d)};
}

std::string ProjMap::str() const {
    std::ostringstream os;
    auto term = [&](const Int& coef, bool with_t) -> std::string {
        std::ostringstream t;
        if (with_t) {
            if (coef == 1)
                t << "t";
            else if (coef == -1)
                t << "-t";
            else
                t << coef.str() << "*t";
        } else {
            t << coef.str();
        }
        return t.str();
    };
    auto linear = [&](const Int& x, const Int& y) -> std::string {
        if (x == 0) return term(y, false);
        std::string s = term(x, true);
        if (y > 0) s += "+" + term(y, false);
        if (y < 0) s += term(y, false);
        return s;
    };
    if (c == 0 && d == 1) return linear(a, b);
    return "(" + linear(a, b) + ")/(" + linear(c, d) + ")";
}

std::string ProjMap::matrix_str() const {
    return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
}

ProjMap parse_projmap(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!isspace(static_cast<unsigned char>(ch))) s += ch;
    // Expected form [[a,b],[c,d]]
    Int v[4];
    size_t pos = 0;
    auto expect = [&](const std::string& tok) {
        if (s.compare(pos, tok.size(), tok) != 0)
            fail(errc::syntax_error, "bad matrix literal at position " + std::to_string(pos) + ": " + text);
        pos += tok.size();
    };
    auto read_int = [&]() {
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail(errc::syntax_error, "expected integer in matrix literal: " + text);
        return Int(s.substr(start, pos - start));
    };
    expect("[[");
    v[0] = read_int();
    expect(",");
    v[1] = read_int();
    expect("],[");
    v[2] = read_int();
    expect(",");
    v[3] = read_int();
    expect("]]");
    if (pos != s.size()) fail(errc::syntax_error, "trailing characters in matrix literal: " + text);
    return ProjMap(v[0], v[1], v[2], v[3]);
}

} // namespace lm
