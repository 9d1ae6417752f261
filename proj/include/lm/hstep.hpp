#pragma once

#include "lm/piecewise.hpp"

namespace lm {

enum class StepKind { gamma, lambda, composite };

/// Step map interpolating between the identity on one side and translation
/// by r on the other, together with its construction parameters.
struct StepMap {
    PiecewisePP map;
    StepKind kind = StepKind::composite;
    Int n{0};
    Rat r{0};
};

/// gamma_r: identity below 0, t/(1-t) up to the solution of x/(1-x) = x+r in
/// (0,1), then translation by r. Requires r > 0.
StepMap gamma(const Rat& r);

/// lambda_r: identity below 0, t/(1+t) up to the solution of x/(1+x) = x+r
/// in [-r, -r+1], then translation by r. Requires r < 0.
StepMap lambda_step(const Rat& r);

/// Conjugates of the above by translation by n.
StepMap gamma_n(const Int& n, const Rat& r);
StepMap lambda_n(const Int& n, const Rat& r);

/// Supported on [y, infinity) for some y < p and equal to addition by r on
/// (p, infinity). Requires r != 0.
PiecewisePP step_right(const Rat& r, const Rat& p);

/// Supported on (-infinity, z] for some z > p and equal to addition by r on
/// (-infinity, p). Requires r != 0.
PiecewisePP step_left(const Rat& r, const Rat& p);

struct CompactifyResult {
    PiecewisePP h1, h2, k1, k2, s1, s2, t1, t2;
};

/// Given f, g whose germs at both ends are translations (by c1 and c2), glue
/// step maps onto both sides so that, exactly:
///   [s1,s2] = [f,g] [h1,h2] [k1,k2],   [t1,t2] = [h1,h2] [k1,k2],
/// with every commutator above compactly supported and the supports of
/// [h1,h2] and [f,g] disjoint. Gluing intervals are widened automatically
/// until the identities verify.
CompactifyResult compactify_commutator(const PiecewisePP& f, const PiecewisePP& g);

/// Membership in P_Z, the fixed points of hyperbolic integer Moebius maps:
/// exactly the real quadratic irrationals.
bool in_P_Z(const ExtReal& t);

/// A hyperbolic integer matrix fixing t, obtained from the period of the
/// continued fraction expansion of t. Throws NotInPZ for non-members.
ProjMap hyperbolic_witness(const QuadExt& t);

/// Exact floor of a quadratic irrational (used by the continued fraction
/// expansion; exposed for tests).
Int floor_quad(const QuadExt& t);

struct UnitWitness {
    QuadExt unit;   // the chosen unit c of Z[sqrt(2)]
    QuadExt scale;  // c^2: the witness map is t -> scale * t
    QuadExt trace;  // c + c^{-1}, the trace of diag(c, c^{-1})
    bool hyperbolic = false;
};

/// For a unit c != +-1 of Z[sqrt(2)], the scaling map t -> c^2 t fixing 0
/// and infinity, verified hyperbolic through its trace. The matrix has
/// irrational entries, so the result is reported in quadratic coordinates
/// rather than as a ProjMap.
UnitWitness units_check(const QuadExt& c);

} // namespace lm
