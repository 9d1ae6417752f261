#include "lm/realize.hpp"

namespace lm {

namespace {

// Local models acting on [0, inf] in the phi coordinate, extended by the
// identity. The x model is the map b transported to the chart origin; the y
// model is multiplication by 2.
PiecewisePP x_model(int sign) {
    if (sign > 0)
        return PiecewisePP::make({QuadExt(0), QuadExt(Rat(1, 2)), QuadExt(1)},
                                 {ProjMap(), ProjMap(1, 0, -1, 1), ProjMap(3, -1, 1, 0),
                                  ProjMap(1, 1, 0, 1)});
    return PiecewisePP::make({QuadExt(0), QuadExt(1), QuadExt(2)},
                             {ProjMap(), ProjMap(1, 0, 1, 1), ProjMap(0, 1, -1, 3),
                              ProjMap(1, -1, 0, 1)});
}

PiecewisePP y_model(int sign) {
    return PiecewisePP::make({QuadExt(0)},
                             {ProjMap(), sign > 0 ? ProjMap(2, 0, 0, 1) : ProjMap(1, 0, 0, 2)});
}

// x with empty subscript realizes as translation by 1; y with empty
// subscript splits over the cylinders 00, 01, 1.
PiecewisePP x_empty(int sign) { return PiecewisePP::translation(sign); }

PiecewisePP y_empty(int sign) {
    PiecewisePP y = PiecewisePP::make(
        {QuadExt(-1), QuadExt(0)},
        {ProjMap(1, 1, 0, 2), ProjMap(1, 1, -1, 1), ProjMap(2, 1, 0, 1)});
    return sign > 0 ? y : inverse(y);
}

struct Chart {
    Int a{1}, b{0}, c{0}, d{1};
    bool twist = false;
};

// Chart carrying the phi coordinate onto the cylinder interval of s. For
// s = 1 s' it is the product of the letter matrices of s'; for s = 0 s' the
// product over the complemented s' followed by negation, which mirrors the
// local dynamics (the tilde conjugation swaps each map with its inverse).
Chart chart_for(const FinWord& s) {
    Chart ch;
    ch.twist = s[0] == '0';
    FinWord rest = s.substr(1);
    if (ch.twist) rest = tilde(rest);
    for (char letter : rest) {
        // multiply by M0 = [[1,0],[1,1]] or M1 = [[1,1],[0,1]] on the right
        if (letter == '0') {
            ch.a += ch.b;
            ch.c += ch.d;
        } else {
            ch.b += ch.a;
            ch.d += ch.c;
        }
    }
    if (ch.twist) {
        ch.a = -ch.a;
        ch.b = -ch.b;
    }
    return ch;
}

} // namespace

PiecewisePP realize_letter(const GenLetter& l) {
    int sign = l.exp > 0 ? 1 : -1;
    PiecewisePP base;
    if (l.sub.empty()) {
        base = l.kind == GenKind::x ? x_empty(sign) : y_empty(sign);
    } else {
        Chart ch = chart_for(l.sub);
        int local_sign = ch.twist ? -sign : sign;
        PiecewisePP model = l.kind == GenKind::x ? x_model(local_sign) : y_model(local_sign);
        base = moebius_conjugate(model, ch.a, ch.b, ch.c, ch.d);
    }
    PiecewisePP out = base;
    for (Int k = 1; k < abs(l.exp); ++k) out = compose(out, base);
    return out;
}

PiecewisePP realize(const GroupWord& w) {
    // Letters apply to sequences left to right, so the leftmost letter is
    // the innermost map.
    PiecewisePP acc;
    for (const GenLetter& l : w.letters) acc = compose(realize_letter(l), acc);
    return acc;
}

bool equal_words(const GroupWord& a, const GroupWord& b) { return realize(a) == realize(b); }

StandardForm standardize(const GroupWord& w, size_t budget) {
    StandardForm sf = standardize_unchecked(w, budget);
    // A subscript may be a prefix of an earlier one, never of a later one.
    for (size_t i = 0; i < sf.tail.size(); ++i)
        for (size_t j = i + 1; j < sf.tail.size(); ++j)
            if (sf.tail[i].first.size() <= sf.tail[j].first.size() &&
                sf.tail[j].first.compare(0, sf.tail[i].first.size(), sf.tail[i].first) == 0 &&
                sf.tail[i].first != sf.tail[j].first)
                fail(errc::normalization_overflow,
                     "standard form violates the prefix order: y[" + sf.tail[i].first +
                         "] before y[" + sf.tail[j].first + "]");
    if (!(realize(sf.to_word()) == realize(w)))
        fail(errc::normalization_overflow,
             "standardization changed the element: " + w.str() + " vs " + sf.str());
    return sf;
}

namespace {

bool abel_zero(const GroupWord& w) {
    AbelImage im = abelianize(w);
    return im[0] == 0 && im[1] == 0 && im[2] == 0;
}

} // namespace

bool member(const GroupWord& w, Subgroup subgroup) {
    switch (subgroup) {
    case Subgroup::F:
        return standardize(w).tail.empty();
    case Subgroup::Fprime: {
        StandardForm sf = standardize(w);
        return sf.tail.empty() && is_compactly_supported(realize(w));
    }
    case Subgroup::G0: {
        if (w.marker == Marker::G0) return true;
        StandardForm sf = standardize(w);
        for (const auto& [sub, e] : sf.tail)
            if (is_constant_word(sub)) return false;
        return true;
    }
    case Subgroup::G0prime: {
        if (w.marker != Marker::G0)
            return member(w, Subgroup::Gsecond); // the two subgroups coincide
        return abel_zero(w) && is_compactly_supported(realize(w));
    }
    case Subgroup::Gprime: {
        if (w.marker != Marker::G)
            fail(errc::marker_violation, "G' membership needs the G abelianization table");
        return abel_zero(w);
    }
    case Subgroup::Gsecond: {
        if (w.marker != Marker::G)
            fail(errc::marker_violation, "G'' membership needs the G abelianization table");
        return abel_zero(w) && is_compactly_supported(realize(w));
    }
    }
    fail(errc::invalid_argument, "unknown subgroup");
}

std::pair<Rat, Rat> germ_pair_image(const GroupWord& w) {
    GermPair g = germs(realize(w));
    if (g.neg_slope != 1 || g.pos_slope != 1)
        fail(errc::non_unit_germ_slope,
             "germ slopes " + rat_to_string(g.neg_slope) + ", " + rat_to_string(g.pos_slope) +
                 " are not 1; the element is not in the commutator subgroup");
    return {g.neg_trans, g.pos_trans - g.neg_trans};
}

} // namespace lm
