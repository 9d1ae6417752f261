#pragma once

#include <compare>
#include <string>

#include "lm/quadext.hpp"

namespace lm {

/// Finite binary word over {0,1}; the empty word is allowed.
using FinWord = std::string;

bool is_binary_word(const FinWord& w);
void check_binary_word(const FinWord& w);

/// Letterwise 0 <-> 1 swap.
FinWord tilde(const FinWord& w);

/// Eventually periodic infinite binary sequence pre * per^infinity in
/// canonical form: the period is primitive and the preperiod is minimal
/// (its last letter differs from the period's last letter).
struct EvpSeq {
    FinWord pre;
    FinWord per{"0"};

    static EvpSeq make(FinWord pre, FinWord per);

    char at(size_t i) const {
        return i < pre.size() ? pre[i] : per[(i - pre.size()) % per.size()];
    }
    bool is_constant() const { return pre.empty() && per.size() == 1; }

    EvpSeq drop_first() const;
    EvpSeq prepend(const FinWord& w) const;

    bool operator==(const EvpSeq& o) const { return pre == o.pre && per == o.per; }

    std::string str() const { return pre + "(" + per + ")"; }
};

EvpSeq tilde(const EvpSeq& s);

/// Literal syntax "pre(per)"; empty preperiod allowed, e.g. "(10)".
EvpSeq parse_seq(const std::string& text);

/// Lexicographic order on the underlying infinite sequences.
std::strong_ordering seq_cmp(const EvpSeq& a, const EvpSeq& b);

/// The continued-fraction identification of 2^N with [0, infinity]:
/// phi(0 xi) = phi(xi)/(1 + phi(xi)), phi(1 xi) = 1 + phi(xi).
ExtReal phi(const EvpSeq& xi);

/// Identification of 2^N with the extended reals: Phi(1 xi) = phi(xi),
/// Phi(0 xi) = -phi(tilde xi). The constant sequences map to signed
/// infinities.
ExtReal big_phi(const EvpSeq& xi);

} // namespace lm
