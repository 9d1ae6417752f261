#pragma once

#include "lm/group.hpp"
#include "lm/sequences.hpp"

namespace lm {

/// Image of an eventually periodic sequence under one generator letter,
/// computed by the recursive sequence machine with cycle detection.
EvpSeq run_letter(const GenLetter& g, const EvpSeq& xi);

/// Image under a word, leftmost letter applied first. The letters run as a
/// lazy pipeline of transducers pulling digits from a shared source; the
/// eventually periodic shape of the output is recovered by detecting a
/// repeated machine configuration.
EvpSeq run_word(const GroupWord& w, const EvpSeq& xi);

} // namespace lm
