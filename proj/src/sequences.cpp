#include "lm/sequences.hpp"

#include <numeric>

#include "lm/moebius.hpp"

namespace lm {

bool is_binary_word(const FinWord& w) {
    for (char c : w)
        if (c != '0' && c != '1') return false;
    return true;
}

void check_binary_word(const FinWord& w) {
    if (!is_binary_word(w)) fail(errc::syntax_error, "not a binary word: " + w);
}

FinWord tilde(const FinWord& w) {
    FinWord out = w;
    for (char& c : out) c = (c == '0') ? '1' : '0';
    return out;
}

EvpSeq EvpSeq::make(FinWord pre, FinWord per) {
    check_binary_word(pre);
    check_binary_word(per);
    if (per.empty()) fail(errc::invalid_argument, "period must be nonempty");

    // Reduce the period to its primitive root.
    for (size_t len = 1; len <= per.size() / 2; ++len) {
        if (per.size() % len != 0) continue;
        bool power = true;
        for (size_t i = len; i < per.size() && power; ++i)
            if (per[i] != per[i - len]) power = false;
        if (power) {
            per.resize(len);
            break;
        }
    }
    // Absorb preperiod letters that merely rotate the period.
    while (!pre.empty() && pre.back() == per.back()) {
        per = per.back() + per.substr(0, per.size() - 1);
        pre.pop_back();
    }
    EvpSeq s;
    s.pre = std::move(pre);
    s.per = std::move(per);
    return s;
}

EvpSeq EvpSeq::drop_first() const {
    if (!pre.empty()) return make(pre.substr(1), per);
    return make("", per.substr(1) + per[0]);
}

EvpSeq EvpSeq::prepend(const FinWord& w) const { return make(w + pre, per); }

EvpSeq tilde(const EvpSeq& s) {
    EvpSeq t;
    t.pre = tilde(s.pre);
    t.per = tilde(s.per);
    return t; // canonical form is preserved by the letter swap
}

EvpSeq parse_seq(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    auto open = s.find('(');
    if (open == std::string::npos || s.back() != ')')
        fail(errc::syntax_error, "sequence literal must look like pre(per): " + text);
    FinWord pre = s.substr(0, open);
    FinWord per = s.substr(open + 1, s.size() - open - 2);
    if (per.empty()) fail(errc::syntax_error, "empty period in sequence literal: " + text);
    return EvpSeq::make(pre, per);
}

std::strong_ordering seq_cmp(const EvpSeq& a, const EvpSeq& b) {
    if (a == b) return std::strong_ordering::equal;
    size_t bound = std::max(a.pre.size(), b.pre.size()) +
                   std::lcm(a.per.size(), b.per.size()) + 1;
    for (size_t i = 0; i < bound; ++i) {
        if (a.at(i) != b.at(i))
            return a.at(i) < b.at(i) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

namespace {

const ProjMap& letter_matrix(char c) {
    static const ProjMap m0(1, 0, 1, 1); // phi(0 xi) = phi(xi)/(1+phi(xi))
    static const ProjMap m1(1, 1, 0, 1); // phi(1 xi) = 1 + phi(xi)
    return c == '0' ? m0 : m1;
}

} // namespace

ExtReal phi(const EvpSeq& xi) {
    ExtReal tail_value;
    bool all0 = true, all1 = true;
    for (char c : xi.per) (c == '0' ? all1 : all0) = false;
    if (all1) {
        tail_value = ExtReal::pos_inf();
    } else if (all0) {
        tail_value = ExtReal(QuadExt(Rat(0)));
    } else {
        ProjMap prod;
        for (char c : xi.per) prod = prod * letter_matrix(c);
        // The period matrix has nonnegative entries with b, c >= 1; its two
        // fixed points have product -b/c < 0, so exactly one lies in (0, inf).
        Int A = prod.c, B = prod.d - prod.a, C = -prod.b;
        Int disc = B * B - 4 * A * C;
        QuadExt root = QuadExt::make(Rat(-B, 2 * A), Rat(1, 2 * A), disc);
        QuadExt other = QuadExt::make(Rat(-B, 2 * A), Rat(-1, 2 * A), disc);
        if (!(root.sign() > 0 && other.sign() < 0))
            fail(errc::invalid_argument,
                 "period matrix lost its contracting fixed point: " + prod.matrix_str());
        tail_value = ExtReal(root);
    }
    ProjMap head;
    for (char c : xi.pre) head = head * letter_matrix(c);
    ExtReal v = apply(head, tail_value);
    if (v.is_infinite()) return ExtReal::pos_inf(); // phi takes values in [0, inf]
    return v;
}

ExtReal big_phi(const EvpSeq& xi) {
    if (xi.at(0) == '1') return phi(xi.drop_first());
    return -phi(tilde(xi.drop_first()));
}

} // namespace lm
