#include "lm/piecewise.hpp"

#include <algorithm>
#include <sstream>

namespace lm {

namespace {

// Value of an integer Moebius map (no orientation requirement) at a circle point.
ExtReal raw_apply(const Int& a, const Int& b, const Int& c, const Int& d, const ExtReal& t) {
    if (t.is_infinite()) {
        if (c == 0) return ExtReal::proj_inf();
        return ExtReal(QuadExt(Rat(a, c)));
    }
    QuadExt denom = t.value * QuadExt(Rat(c)) + QuadExt(Rat(d));
    if (denom.is_zero()) return ExtReal::proj_inf();
    return ExtReal((t.value * QuadExt(Rat(a)) + QuadExt(Rat(b))) / denom);
}

} // namespace

PiecewisePP PiecewisePP::make(std::vector<QuadExt> breakpoints, std::vector<ProjMap> pieces) {
    if (pieces.size() != breakpoints.size() + 1)
        fail(errc::invalid_argument, "piece count must be breakpoint count + 1");
    for (size_t i = 0; i + 1 < breakpoints.size(); ++i)
        if (quad_cmp(breakpoints[i], breakpoints[i + 1]) >= 0)
            fail(errc::invalid_argument,
                 "breakpoints not strictly increasing at " + breakpoints[i].str());

    // Canonical form: merge adjacent equal pieces, dropping the breakpoint.
    std::vector<QuadExt> bps;
    std::vector<ProjMap> ps;
    ps.push_back(pieces[0]);
    for (size_t i = 0; i < breakpoints.size(); ++i) {
        if (pieces[i + 1] == ps.back()) continue;
        bps.push_back(breakpoints[i]);
        ps.push_back(pieces[i + 1]);
    }

    if (ps.front().c != 0 || ps.back().c != 0)
        fail(errc::germ_not_affine, "unbounded piece is not affine: " +
                                        (ps.front().c != 0 ? ps.front() : ps.back()).str());

    for (size_t i = 0; i < ps.size(); ++i) {
        const ProjMap& m = ps[i];
        if (m.c == 0) continue;
        QuadExt pole{make_rat(-m.d, m.c)};
        bool pole_above_lo = i == 0 || quad_cmp(bps[i - 1], pole) <= 0;
        bool pole_below_hi = i == bps.size() || quad_cmp(pole, bps[i]) <= 0;
        if (pole_above_lo && pole_below_hi)
            fail(errc::not_increasing,
                 "piece " + m.str() + " has pole " + pole.str() + " on its interval");
    }

    for (size_t i = 0; i < bps.size(); ++i) {
        ExtReal left = apply(ps[i], ExtReal(bps[i]));
        ExtReal right = apply(ps[i + 1], ExtReal(bps[i]));
        if (!(left == right))
            fail(errc::discontinuous, "pieces disagree at breakpoint " + bps[i].str() + ": " +
                                          left.str() + " vs " + right.str());
    }

    PiecewisePP f;
    f.breakpoints_ = std::move(bps);
    f.pieces_ = std::move(ps);
    return f;
}

size_t PiecewisePP::piece_index(const QuadExt& t) const {
    // First breakpoint strictly greater than t gives the covering piece.
    size_t lo = 0, hi = breakpoints_.size();
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (quad_cmp(breakpoints_[mid], t) < 0)
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

ExtReal PiecewisePP::operator()(const ExtReal& t) const {
    if (t.is_infinite()) return t; // affine germs with positive slope fix both ends
    return apply(pieces_[piece_index(t.value)], t);
}

QuadExt PiecewisePP::operator()(const QuadExt& t) const {
    ExtReal r = (*this)(ExtReal(t));
    return r.value;
}

PiecewisePP compose(const PiecewisePP& f, const PiecewisePP& g) {
    PiecewisePP ginv = inverse(g);
    struct Cut {
        QuadExt at;
        bool adv_g = false, adv_f = false;
    };
    std::vector<Cut> cuts;
    const auto& gb = g.breakpoints();
    std::vector<QuadExt> fb;
    fb.reserve(f.breakpoints().size());
    for (const auto& b : f.breakpoints()) fb.push_back(ginv(b));

    size_t i = 0, j = 0;
    while (i < gb.size() || j < fb.size()) {
        if (j == fb.size() || (i < gb.size() && quad_cmp(gb[i], fb[j]) < 0)) {
            cuts.push_back({gb[i++], true, false});
        } else if (i == gb.size() || quad_cmp(fb[j], gb[i]) < 0) {
            cuts.push_back({fb[j++], false, true});
        } else {
            cuts.push_back({gb[i++], true, true});
            ++j;
        }
    }

    std::vector<QuadExt> bps;
    std::vector<ProjMap> ps;
    size_t gi = 0, fi = 0;
    ps.push_back(compose(f.pieces()[0], g.pieces()[0]));
    for (const Cut& cut : cuts) {
        if (cut.adv_g) ++gi;
        if (cut.adv_f) ++fi;
        bps.push_back(cut.at);
        ps.push_back(compose(f.pieces()[fi], g.pieces()[gi]));
    }
    return PiecewisePP::make(std::move(bps), std::move(ps));
}

PiecewisePP inverse(const PiecewisePP& f) {
    std::vector<QuadExt> bps;
    std::vector<ProjMap> ps;
    bps.reserve(f.breakpoints().size());
    for (size_t i = 0; i < f.breakpoints().size(); ++i)
        bps.push_back(apply(f.pieces()[i], ExtReal(f.breakpoints()[i])).value);
    for (const auto& m : f.pieces()) ps.push_back(m.inverse());
    return PiecewisePP::make(std::move(bps), std::move(ps));
}

GermPair germs(const PiecewisePP& f) {
    GermPair g;
    auto [ns, nt] = affine_germ(f.pieces().front());
    auto [pslope, pt] = affine_germ(f.pieces().back());
    g.neg_slope = ns;
    g.neg_trans = nt;
    g.pos_slope = pslope;
    g.pos_trans = pt;
    return g;
}

std::vector<OpenInterval> moved_set(const PiecewisePP& f) {
    // Fixed regions (closed intervals, possibly degenerate), in order.
    struct Region {
        ExtReal lo, hi;
    };
    std::vector<Region> fixed;
    auto push_region = [&](const ExtReal& lo, const ExtReal& hi) {
        if (!fixed.empty() && ext_cmp(lo, fixed.back().hi) <= 0) {
            if (ext_cmp(hi, fixed.back().hi) > 0) fixed.back().hi = hi;
            return;
        }
        fixed.push_back({lo, hi});
    };

    const auto& bps = f.breakpoints();
    for (size_t i = 0; i < f.pieces().size(); ++i) {
        ExtReal lo = i == 0 ? ExtReal::neg_inf() : ExtReal(bps[i - 1]);
        ExtReal hi = i == bps.size() ? ExtReal::pos_inf() : ExtReal(bps[i]);
        const ProjMap& m = f.pieces()[i];
        if (m.is_identity()) {
            push_region(lo, hi);
            continue;
        }
        std::vector<ExtReal> roots;
        try {
            roots = fixed_points(m);
        } catch (const calc_error& e) {
            if (e.code() != errc::no_real_fixed_point) throw;
        }
        for (const ExtReal& r : roots) {
            if (r.is_infinite()) continue;
            if (ext_cmp(lo, r) <= 0 && ext_cmp(r, hi) <= 0) push_region(r, r);
        }
    }

    std::vector<OpenInterval> moved;
    ExtReal prev = ExtReal::neg_inf();
    for (const Region& r : fixed) {
        if (ext_cmp(prev, r.lo) < 0) moved.push_back({prev, r.lo});
        prev = r.hi;
    }
    if (!(prev == ExtReal::pos_inf())) moved.push_back({prev, ExtReal::pos_inf()});
    return moved;
}

bool is_compactly_supported(const PiecewisePP& f) {
    // A non-identity affine piece on an unbounded interval moves a
    // neighborhood of the corresponding end.
    return f.pieces().front().is_identity() && f.pieces().back().is_identity();
}

namespace {

// Piece of f covering the closed subinterval [u, v] (no breakpoint inside).
const ProjMap& piece_on(const PiecewisePP& f, const QuadExt& u, const QuadExt& v) {
    size_t idx = f.piece_index(u);
    // When u is itself a breakpoint, the piece to its right is wanted.
    if (idx < f.breakpoints().size() && quad_cmp(f.breakpoints()[idx], u) == 0) ++idx;
    (void)v;
    return f.pieces()[idx];
}

} // namespace

PiecewisePP glue(const PiecewisePP& f, const PiecewisePP& g, const QuadExt& lo, const QuadExt& hi) {
    if (quad_cmp(lo, hi) >= 0)
        fail(errc::invalid_argument, "gluing interval is empty: [" + lo.str() + ", " + hi.str() + "]");

    // Restrictions to [lo, hi] must be equal piece by piece.
    std::vector<QuadExt> cuts{lo};
    for (const auto& b : f.breakpoints())
        if (quad_cmp(lo, b) < 0 && quad_cmp(b, hi) < 0) cuts.push_back(b);
    for (const auto& b : g.breakpoints())
        if (quad_cmp(lo, b) < 0 && quad_cmp(b, hi) < 0) cuts.push_back(b);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end(), [](const QuadExt& a, const QuadExt& b) {
        return quad_cmp(a, b) < 0;
    });
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
        const ProjMap& mf = piece_on(f, cuts[k], cuts[k + 1]);
        const ProjMap& mg = piece_on(g, cuts[k], cuts[k + 1]);
        if (!(mf == mg))
            fail(errc::gluing_mismatch, "maps differ on [" + cuts[k].str() + ", " +
                                            cuts[k + 1].str() + "]: " + mf.str() + " vs " + mg.str());
    }

    // h = f up to hi, g beyond hi.
    std::vector<QuadExt> bps;
    std::vector<ProjMap> ps;
    size_t k = 0;
    while (k < f.breakpoints().size() && quad_cmp(f.breakpoints()[k], hi) < 0) {
        bps.push_back(f.breakpoints()[k]);
        ps.push_back(f.pieces()[k]);
        ++k;
    }
    ps.push_back(f.pieces()[k]);
    bps.push_back(hi);
    size_t l = 0;
    while (l < g.breakpoints().size() && quad_cmp(g.breakpoints()[l], hi) <= 0) ++l;
    ps.push_back(g.pieces()[l]);
    while (l < g.breakpoints().size()) {
        bps.push_back(g.breakpoints()[l]);
        ps.push_back(g.pieces()[l + 1]);
        ++l;
    }
    return PiecewisePP::make(std::move(bps), std::move(ps));
}

PiecewisePP moebius_conjugate(const PiecewisePP& f, const Int& a, const Int& b, const Int& c,
                              const Int& d) {
    Int det = a * d - b * c;
    if (det == 0) fail(errc::invalid_argument, "conjugating matrix is singular");

    struct Arc {
        ExtReal u, v;
        ProjMap m;
    };
    std::vector<Arc> arcs;
    const auto& bps = f.breakpoints();
    if (bps.empty()) {
        if (!f.pieces()[0].is_identity())
            fail(errc::invalid_argument, "cannot conjugate a breakpoint-free non-identity map");
        return PiecewisePP::identity();
    }
    arcs.push_back({ExtReal::proj_inf(), ExtReal(bps.front()), f.pieces().front()});
    for (size_t i = 0; i + 1 < bps.size(); ++i)
        arcs.push_back({ExtReal(bps[i]), ExtReal(bps[i + 1]), f.pieces()[i + 1]});
    arcs.push_back({ExtReal(bps.back()), ExtReal::proj_inf(), f.pieces().back()});

    // If the matrix has a pole, split the arc containing it so that infinity
    // becomes an endpoint of the image chain.
    if (c != 0) {
        QuadExt pole{Rat(-d, c)};
        auto strictly_inside = [&](const Arc& arc) {
            bool above = arc.u.is_infinite() || quad_cmp(arc.u.value, pole) < 0;
            bool below = arc.v.is_infinite() || quad_cmp(pole, arc.v.value) < 0;
            return above && below;
        };
        for (size_t i = 0; i < arcs.size(); ++i) {
            if (!arcs[i].u.is_infinite() && quad_cmp(arcs[i].u.value, pole) == 0) break;
            if (!arcs[i].v.is_infinite() && quad_cmp(arcs[i].v.value, pole) == 0) break;
            if (strictly_inside(arcs[i])) {
                Arc right{ExtReal(pole), arcs[i].v, arcs[i].m};
                arcs[i].v = ExtReal(pole);
                arcs.insert(arcs.begin() + static_cast<long>(i) + 1, right);
                break;
            }
        }
    }

    // Map arcs through the matrix; adjugate gives the inverse projectively.
    std::vector<Arc> mapped;
    for (const Arc& arc : arcs) {
        ProjMap conj(
            // C * m * adj(C); the determinant-squared scalar is positive.
            (a * arc.m.a + b * arc.m.c) * d - (a * arc.m.b + b * arc.m.d) * c,
            -(a * arc.m.a + b * arc.m.c) * b + (a * arc.m.b + b * arc.m.d) * a,
            (c * arc.m.a + d * arc.m.c) * d - (c * arc.m.b + d * arc.m.d) * c,
            -(c * arc.m.a + d * arc.m.c) * b + (c * arc.m.b + d * arc.m.d) * a);
        ExtReal u2 = raw_apply(a, b, c, d, arc.u);
        ExtReal v2 = raw_apply(a, b, c, d, arc.v);
        if (det > 0)
            mapped.push_back({u2, v2, conj});
        else
            mapped.push_back({v2, u2, conj});
    }
    if (det < 0) std::reverse(mapped.begin(), mapped.end());

    // Rotate so the chain starts at infinity.
    size_t start = mapped.size();
    for (size_t i = 0; i < mapped.size(); ++i)
        if (mapped[i].u.is_infinite()) {
            start = i;
            break;
        }
    if (start == mapped.size())
        fail(errc::invalid_argument, "conjugated chain does not touch infinity");
    std::rotate(mapped.begin(), mapped.begin() + static_cast<long>(start), mapped.end());

    std::vector<QuadExt> nbps;
    std::vector<ProjMap> nps;
    for (size_t i = 0; i < mapped.size(); ++i) {
        nps.push_back(mapped[i].m);
        if (i + 1 < mapped.size()) {
            if (mapped[i].v.is_infinite())
                fail(errc::invalid_argument, "interior arc endpoint at infinity");
            nbps.push_back(mapped[i].v.value);
        }
    }
    return PiecewisePP::make(std::move(nbps), std::move(nps));
}

std::string PiecewisePP::str() const { return to_text(*this); }

std::string to_text(const PiecewisePP& f) {
    std::ostringstream os;
    const auto& bps = f.breakpoints();
    for (size_t i = 0; i < f.pieces().size(); ++i) {
        std::string lo = i == 0 ? "(-inf" : "[" + bps[i - 1].str();
        std::string hi = i == bps.size() ? "+inf)" : bps[i].str() + "]";
        os << lo << ", " << hi << " := " << f.pieces()[i].matrix_str() << "\n";
    }
    return os.str();
}

PiecewisePP parse_piecewise(const std::string& text) {
    std::vector<QuadExt> bps;
    std::vector<ProjMap> ps;
    std::istringstream is(text);
    std::string line;
    bool first = true;
    std::string prev_hi;
    while (std::getline(is, line)) {
        // Strip comments and blank lines.
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = std::all_of(line.begin(), line.end(),
                                 [](char ch) { return isspace(static_cast<unsigned char>(ch)); });
        if (blank) continue;
        auto sep = line.find(":=");
        if (sep == std::string::npos)
            fail(errc::syntax_error, "piecewise line missing ':=': " + line);
        std::string interval = line.substr(0, sep);
        std::string matrix = line.substr(sep + 2);
        auto comma = interval.find(',');
        if (comma == std::string::npos)
            fail(errc::syntax_error, "piecewise interval missing ',': " + line);
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t");
            size_t e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        std::string lo = trim(interval.substr(0, comma));
        std::string hi = trim(interval.substr(comma + 1));
        if (lo.empty() || hi.empty())
            fail(errc::syntax_error, "bad interval in: " + line);
        bool lo_inf = lo.front() == '(' && lo.find("inf") != std::string::npos;
        bool hi_inf = hi.back() == ')' && hi.find("inf") != std::string::npos;
        std::string lo_val = lo_inf ? "" : lo.substr(1);
        std::string hi_val = hi_inf ? "" : hi.substr(0, hi.size() - 1);
        if (first) {
            if (!lo_inf) fail(errc::syntax_error, "first interval must start at -inf");
        } else {
            if (lo_inf || lo_val != prev_hi)
                fail(errc::syntax_error, "intervals do not chain at: " + line);
            bps.push_back(parse_quadext(lo_val));
        }
        ps.push_back(parse_projmap(matrix));
        prev_hi = hi_val;
        first = false;
        if (hi_inf) prev_hi = "";
    }
    if (ps.empty()) fail(errc::syntax_error, "empty piecewise description");
    if (!prev_hi.empty()) fail(errc::syntax_error, "last interval must end at +inf");
    return PiecewisePP::make(std::move(bps), std::move(ps));
}

} // namespace lm
