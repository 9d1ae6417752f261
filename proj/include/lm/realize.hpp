#pragma once

#include "lm/group.hpp"
#include "lm/piecewise.hpp"

namespace lm {

/// The piecewise projective map h with h(Phi(xi)) = Phi(w(xi)) for all xi,
/// where w acts on sequences letter by letter, leftmost letter first.
PiecewisePP realize(const GroupWord& w);

PiecewisePP realize_letter(const GenLetter& l);

/// Semantic equality of group elements, decided through realize.
bool equal_words(const GroupWord& a, const GroupWord& b);

/// standardize_unchecked plus a semantic check of the output against the
/// input; a mismatch reports a normalization bug.
StandardForm standardize(const GroupWord& w, size_t budget = 1000000);

enum class Subgroup { F, Fprime, G0, G0prime, Gprime, Gsecond };

bool member(const GroupWord& w, Subgroup subgroup);

/// Image of a commutator-subgroup element in the germ quotient: with germ
/// translations (t-, t+) at unit slopes, returns (t-, t+ - t-), the
/// coordinates matching x -> (1,0) and x[1] -> (0,1). Throws
/// NonUnitGermSlope when a germ slope differs from 1.
std::pair<Rat, Rat> germ_pair_image(const GroupWord& w);

} // namespace lm
