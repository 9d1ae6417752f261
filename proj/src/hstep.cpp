#include "lm/hstep.hpp"

#include <map>
#include <vector>

namespace lm {

namespace {

// Root of x^2 + r x - r = 0 (gamma) or x^2 + r x + r = 0 (lambda), always
// the larger one: (-r + sqrt(r^2 -+ 4r)) / 2.
QuadExt step_breakpoint(const Rat& r, bool gamma_kind) {
    Int p = num(r), q = den(r);
    Int disc = p * p + (gamma_kind ? 4 : -4) * p * q;
    return QuadExt::make(Rat(-p, 2 * q), Rat(1, 2 * q), disc);
}

} // namespace

StepMap gamma(const Rat& r) {
    if (r <= 0) fail(errc::bad_sign, "gamma step needs r > 0, got " + rat_to_string(r));
    QuadExt x = step_breakpoint(r, true);
    StepMap s;
    s.kind = StepKind::gamma;
    s.r = r;
    s.map = PiecewisePP::make({QuadExt(0), x},
                              {ProjMap(), ProjMap(1, 0, -1, 1), ProjMap::translation(r)});
    return s;
}

StepMap lambda_step(const Rat& r) {
    if (r >= 0) fail(errc::bad_sign, "lambda step needs r < 0, got " + rat_to_string(r));
    QuadExt x = step_breakpoint(r, false);
    StepMap s;
    s.kind = StepKind::lambda;
    s.r = r;
    s.map = PiecewisePP::make({QuadExt(0), x},
                              {ProjMap(), ProjMap(1, 0, 1, 1), ProjMap::translation(r)});
    return s;
}

StepMap gamma_n(const Int& n, const Rat& r) {
    StepMap s = gamma(r);
    s.kind = StepKind::gamma;
    s.n = n;
    s.map = conjugate(s.map, PiecewisePP::translation(Rat(n)));
    return s;
}

StepMap lambda_n(const Int& n, const Rat& r) {
    StepMap s = lambda_step(r);
    s.kind = StepKind::lambda;
    s.n = n;
    s.map = conjugate(s.map, PiecewisePP::translation(Rat(n)));
    return s;
}

PiecewisePP step_right(const Rat& r, const Rat& p) {
    if (r == 0) fail(errc::bad_sign, "step needs a nonzero translation amount");
    // Base point low enough that the whole step sits strictly below p.
    StepMap s = r > 0 ? gamma_n(ceil_rat(p) - 2, r) : lambda_n(ceil_rat(p + r) - 2, r);
    return s.map;
}

PiecewisePP step_left(const Rat& r, const Rat& p) {
    if (r == 0) fail(errc::bad_sign, "step needs a nonzero translation amount");
    // Mirror of step_right by germ algebra: translation composed with an
    // inverted right step whose identity zone reaches past p.
    Rat pp = p + abs(r) + 3;
    return compose(PiecewisePP::translation(r), inverse(step_right(r, pp)));
}

CompactifyResult compactify_commutator(const PiecewisePP& f, const PiecewisePP& g) {
    GermPair gf = germs(f), gg = germs(g);
    if (gf.neg_slope != 1 || gf.pos_slope != 1 || gg.neg_slope != 1 || gg.pos_slope != 1)
        fail(errc::germ_mismatch, "germ slopes must be 1 on both sides");
    if (gf.neg_trans != gf.pos_trans || gg.neg_trans != gg.pos_trans)
        fail(errc::germ_mismatch, "translation germs at the two ends differ");
    Rat c1 = gf.pos_trans, c2 = gg.pos_trans;

    // Step 1: an interval [r, s] outside which f, g and their inverses are
    // translations.
    Rat lo = -1, hi = 1;
    for (const PiecewisePP* m : {&f, &g}) {
        if (m->breakpoints().empty()) continue;
        for (const PiecewisePP& mm : {*m, inverse(*m)}) {
            const auto& b = mm.breakpoints();
            QuadExt first = b.front(), last = b.back();
            Rat fl = Rat(floor_quad(first)) - 1, cl = Rat(floor_quad(last)) + 2;
            if (fl < lo) lo = fl;
            if (cl > hi) hi = cl;
        }
    }
    QuadExt R{lo}, S{hi};

    PiecewisePP fg = commutator(f, g);

    Rat margin = abs(c1) + abs(c2) + 1;
    for (int attempt = 0; attempt < 12; ++attempt, margin *= 2) {
        Rat x1 = lo - margin;  // gluing interval [x1, lo] on the left
        Rat y1 = hi + margin;  // gluing interval [hi, y1] on the right
        PiecewisePP h1 = c1 == 0 ? PiecewisePP::identity() : step_right(c1, x1);
        PiecewisePP h2 = c2 == 0 ? PiecewisePP::identity() : step_right(c2, x1);
        PiecewisePP k1 = c1 == 0 ? PiecewisePP::identity() : step_left(c1, y1);
        PiecewisePP k2 = c2 == 0 ? PiecewisePP::identity() : step_left(c2, y1);

        QuadExt X1{x1}, Y1{y1};
        PiecewisePP j1 = glue(h1, f, X1, R);
        PiecewisePP j2 = glue(h2, g, X1, R);
        PiecewisePP l1 = glue(f, k1, S, Y1);
        PiecewisePP l2 = glue(g, k2, S, Y1);

        PiecewisePP hh = commutator(h1, h2), kk = commutator(k1, k2);
        if (!(commutator(j1, j2) == compose(hh, fg))) continue;
        if (!(commutator(l1, l2) == compose(fg, kk))) continue;

        CompactifyResult out;
        out.h1 = h1;
        out.h2 = h2;
        out.k1 = k1;
        out.k2 = k2;
        out.s1 = glue(j1, l1, R, S);
        out.s2 = glue(j2, l2, R, S);
        out.t1 = glue(h1, k1, R, S);
        out.t2 = glue(h2, k2, R, S);

        PiecewisePP ss = commutator(out.s1, out.s2), tt = commutator(out.t1, out.t2);
        if (!(ss == compose(fg, compose(hh, kk)))) continue;
        if (!(tt == compose(hh, kk))) continue;
        if (!is_compactly_supported(ss) || !is_compactly_supported(tt)) continue;
        return out;
    }
    fail(errc::germ_mismatch, "gluing intervals failed to stabilize the commutator identities");
}

bool in_P_Z(const ExtReal& t) {
    // For A = Z the affine hyperbolic matrices are ruled out (the only units
    // are +-1), so P_Z consists of the real quadratic irrationals.
    return t.finite && t.value.q != 0;
}

Int floor_quad(const QuadExt& t) {
    Int D = lcm(den(t.p), den(t.q));
    Int A = num(t.p) * (D / den(t.p));
    Int E = num(t.q) * (D / den(t.q));
    Int lower; // integer lower bound for E*sqrt(d)
    if (E >= 0)
        lower = isqrt(E * E * t.d);
    else
        lower = -isqrt(E * E * t.d) - 1;
    Int n = floor_div(A + lower, D);
    while (quad_cmp(t, QuadExt(Rat(n))) < 0) --n;
    while (quad_cmp(t, QuadExt(Rat(n + 1))) >= 0) ++n;
    return n;
}

namespace {

struct RawMat {
    Int a{1}, b{0}, c{0}, d{1};
    RawMat mul(const RawMat& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Int det() const { return a * d - b * c; }
};

} // namespace

ProjMap hyperbolic_witness(const QuadExt& t) {
    if (!in_P_Z(ExtReal(t))) fail(errc::not_in_pz, t.str() + " is not a quadratic irrational");

    // Continued fraction expansion; the complete quotients of a quadratic
    // irrational eventually repeat.
    std::vector<Int> digits;
    std::map<std::string, size_t> seen;
    QuadExt v = t;
    size_t period_start = 0;
    for (size_t k = 0;; ++k) {
        if (k > 10000) fail(errc::normalization_overflow, "continued fraction failed to cycle");
        std::string key = v.str();
        auto it = seen.find(key);
        if (it != seen.end()) {
            period_start = it->second;
            break;
        }
        seen[key] = k;
        Int a = floor_quad(v);
        digits.push_back(a);
        v = QuadExt(Rat(1)) / (v - QuadExt(Rat(a)));
    }

    auto digit_matrix = [](const Int& a) { return RawMat{a, 1, 1, 0}; };
    RawMat period;
    for (size_t i = period_start; i < digits.size(); ++i)
        period = period.mul(digit_matrix(digits[i]));
    if (period.det() < 0) period = period.mul(period); // land in SL2
    RawMat head;
    for (size_t i = 0; i < period_start; ++i) head = head.mul(digit_matrix(digits[i]));
    RawMat adj{head.d, -head.b, -head.c, head.a};
    RawMat w = head.mul(period).mul(adj);

    ProjMap witness(w.a, w.b, w.c, w.d);
    if (classify(witness) != MapClass::hyperbolic)
        fail(errc::not_in_pz, "witness for " + t.str() + " is not hyperbolic");
    if (!(apply(witness, ExtReal(t)) == ExtReal(t)))
        fail(errc::not_in_pz, "witness does not fix " + t.str());
    return witness;
}

UnitWitness units_check(const QuadExt& c) {
    if (c.d != 2 || den(c.p) != 1 || den(c.q) != 1)
        fail(errc::not_a_unit, c.str() + " is not an element of Z[sqrt(2)] beyond the rationals");
    Rat norm = c.p * c.p - 2 * c.q * c.q;
    if (!(norm == 1 || norm == -1)) fail(errc::not_a_unit, c.str() + " has norm " + rat_to_string(norm));

    UnitWitness w;
    w.unit = c;
    w.scale = c * c;
    QuadExt conj = QuadExt::make(c.p, -c.q, c.d);
    QuadExt cinv = norm == 1 ? conj : -conj;
    w.trace = c + cinv;
    QuadExt disc = w.trace * w.trace - QuadExt(4); // trace^2 - 4 det with det = 1
    w.hyperbolic = disc.sign() > 0;
    if (!w.hyperbolic) fail(errc::not_a_unit, "scaling by " + w.scale.str() + " is not hyperbolic");
    return w;
}

} // namespace lm
