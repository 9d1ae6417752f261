#pragma once

#include <string>
#include <vector>

#include "lm/moebius.hpp"

namespace lm {

/// Affine germ data at both ends of the line.
struct GermPair {
    Rat neg_slope{1}, neg_trans{0};
    Rat pos_slope{1}, pos_trans{0};

    bool operator==(const GermPair& o) const = default;
    bool is_trivial() const {
        return neg_slope == 1 && neg_trans == 0 && pos_slope == 1 && pos_trans == 0;
    }
};

/// Open interval of the extended line, used for moved sets.
struct OpenInterval {
    ExtReal lo, hi;
    bool operator==(const OpenInterval& o) const { return lo == o.lo && hi == o.hi; }
};

/// Finitely-piecewise projective homeomorphism of R fixing infinity.
///
/// Invariants (checked on construction): breakpoints strictly increasing,
/// adjacent pieces distinct, pieces agree at shared breakpoints, no piece has
/// a pole on its closed interval, first and last pieces affine.
class PiecewisePP {
public:
    PiecewisePP() : pieces_{ProjMap::identity_map()} {}

    static PiecewisePP make(std::vector<QuadExt> breakpoints, std::vector<ProjMap> pieces);
    static PiecewisePP identity() { return PiecewisePP(); }
    static PiecewisePP translation(const Rat& r) {
        return make({}, {ProjMap::translation(r)});
    }

    const std::vector<QuadExt>& breakpoints() const { return breakpoints_; }
    const std::vector<ProjMap>& pieces() const { return pieces_; }
    bool is_identity() const { return breakpoints_.empty() && pieces_[0].is_identity(); }

    /// Index of the piece acting on a neighborhood of t (left piece when t is
    /// a breakpoint; the continuity invariant makes the choice immaterial).
    size_t piece_index(const QuadExt& t) const;

    ExtReal operator()(const ExtReal& t) const;
    QuadExt operator()(const QuadExt& t) const;

    bool operator==(const PiecewisePP& o) const {
        return breakpoints_ == o.breakpoints_ && pieces_ == o.pieces_;
    }

    std::string str() const;

private:
    std::vector<QuadExt> breakpoints_;
    std::vector<ProjMap> pieces_; // size = breakpoints_.size() + 1
};

/// compose(f, g) acts as f after g.
PiecewisePP compose(const PiecewisePP& f, const PiecewisePP& g);
PiecewisePP inverse(const PiecewisePP& f);
inline PiecewisePP commutator(const PiecewisePP& f, const PiecewisePP& g) {
    return compose(compose(f, g), compose(inverse(f), inverse(g)));
}
inline PiecewisePP conjugate(const PiecewisePP& f, const PiecewisePP& g) {
    return compose(compose(g, f), inverse(g));
}

GermPair germs(const PiecewisePP& f);

/// The set of moved points as a sorted list of disjoint open intervals:
/// each non-identity piece contributes its interval minus interior fixed
/// points.
std::vector<OpenInterval> moved_set(const PiecewisePP& f);

bool is_compactly_supported(const PiecewisePP& f);

/// Hybrid of an ordered pair agreeing on [lo, hi]: equals f on (-inf, lo],
/// g on [hi, inf), both on [lo, hi]. Throws GluingMismatch otherwise.
PiecewisePP glue(const PiecewisePP& f, const PiecewisePP& g, const QuadExt& lo, const QuadExt& hi);

/// Conjugates f by the integer Moebius map [[a,b],[c,d]] (determinant of
/// either sign; a negative determinant mirrors the picture). The piece of f
/// covering the preimage of infinity must fix infinity, otherwise the result
/// is not a homeomorphism of R and construction fails.
PiecewisePP moebius_conjugate(const PiecewisePP& f, const Int& a, const Int& b, const Int& c, const Int& d);

std::string to_text(const PiecewisePP& f);
PiecewisePP parse_piecewise(const std::string& text);

} // namespace lm
