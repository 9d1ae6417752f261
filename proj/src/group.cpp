#include "lm/group.hpp"

#include <algorithm>
#include <sstream>

namespace lm {

bool is_constant_word(const FinWord& s) {
    for (char c : s)
        if (c != s[0]) return false;
    return true;
}

std::string GenLetter::str() const {
    std::string out = kind == GenKind::x ? "x" : "y";
    if (!sub.empty()) out += "[" + sub + "]";
    if (exp != 1) out += "^" + exp.str();
    return out;
}

GroupWord GroupWord::make(std::vector<GenLetter> letters, Marker marker) {
    GroupWord w;
    w.marker = marker;
    for (GenLetter& l : letters) {
        check_binary_word(l.sub);
        if (l.exp == 0) continue;
        if (marker == Marker::G0 && l.kind == GenKind::y && is_constant_word(l.sub))
            fail(errc::marker_violation,
                 "y[" + l.sub + "] has a constant subscript, not a G0 generator");
        if (!w.letters.empty() && w.letters.back().kind == l.kind &&
            w.letters.back().sub == l.sub) {
            w.letters.back().exp += l.exp;
            if (w.letters.back().exp == 0) w.letters.pop_back();
        } else {
            w.letters.push_back(std::move(l));
        }
    }
    return w;
}

size_t GroupWord::length() const {
    size_t n = 0;
    for (const auto& l : letters) n += static_cast<size_t>(abs(l.exp));
    return n;
}

GroupWord GroupWord::inverse() const {
    std::vector<GenLetter> rev;
    rev.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) rev.push_back(it->inverse());
    return make(std::move(rev), marker);
}

GroupWord GroupWord::operator*(const GroupWord& o) const {
    if (marker != o.marker) fail(errc::marker_violation, "cannot concatenate words with different markers");
    std::vector<GenLetter> all = letters;
    all.insert(all.end(), o.letters.begin(), o.letters.end());
    return make(std::move(all), marker);
}

std::string GroupWord::str() const {
    if (letters.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < letters.size(); ++i) {
        if (i) out += " ";
        out += letters[i].str();
    }
    return out;
}

GroupWord word_from_letter(GenKind kind, const FinWord& sub, const Int& exp, Marker marker) {
    return GroupWord::make({GenLetter{kind, sub, exp}}, marker);
}

GroupWord parse_word(const std::string& text, Marker marker) {
    std::vector<GenLetter> letters;
    size_t i = 0;
    auto syntax = [&](const std::string& msg) {
        fail(errc::syntax_error, msg + " at position " + std::to_string(i) + " in \"" + text + "\"");
    };
    while (i < text.size()) {
        if (isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        GenLetter l;
        if (text[i] == 'x')
            l.kind = GenKind::x;
        else if (text[i] == 'y')
            l.kind = GenKind::y;
        else
            syntax("expected generator 'x' or 'y'");
        ++i;
        if (i < text.size() && text[i] == '[') {
            ++i;
            size_t start = i;
            while (i < text.size() && (text[i] == '0' || text[i] == '1')) ++i;
            if (i == text.size() || text[i] != ']') syntax("unterminated subscript");
            l.sub = text.substr(start, i - start);
            ++i;
        }
        if (i < text.size() && text[i] == '^') {
            ++i;
            size_t start = i;
            if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
            while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start || (i == start + 1 && !isdigit(static_cast<unsigned char>(text[start]))))
                syntax("expected integer exponent");
            l.exp = Int(text.substr(start, i - start));
        }
        if (i < text.size() && !isspace(static_cast<unsigned char>(text[i]))) syntax("unexpected character");
        letters.push_back(std::move(l));
    }
    return GroupWord::make(std::move(letters), marker);
}

std::optional<FinWord> partial_action(const FinWord& t, const FinWord& s, int dir) {
    check_binary_word(t);
    check_binary_word(s);
    bool s_prefix_of_t = t.size() >= s.size() && t.compare(0, s.size(), s) == 0;
    bool t_proper_prefix_of_s = t.size() < s.size() && s.compare(0, t.size(), t) == 0;
    if (!s_prefix_of_t && !t_proper_prefix_of_s) return t; // incomparable cylinders
    if (!s_prefix_of_t) return std::nullopt;               // t strictly above s
    FinWord u = t.substr(s.size());
    if (dir > 0) {
        if (u.compare(0, 2, "00") == 0) return s + "0" + u.substr(2);
        if (u.compare(0, 2, "01") == 0) return s + "10" + u.substr(2);
        if (u.compare(0, 1, "1") == 0) return s + "11" + u.substr(1);
        return std::nullopt; // u empty or the ambiguous "0"
    }
    if (u.compare(0, 2, "10") == 0) return s + "01" + u.substr(2);
    if (u.compare(0, 2, "11") == 0) return s + "1" + u.substr(2);
    if (u.compare(0, 1, "0") == 0) return s + "00" + u.substr(1);
    return std::nullopt; // u empty or the ambiguous "1"
}

std::optional<std::pair<GroupWord, GroupWord>> relation_instance(int id, const FinWord& s,
                                                                 const FinWord& t) {
    const Marker m = Marker::G;
    auto X = [&](const FinWord& sub, int e = 1) { return GenLetter{GenKind::x, sub, e}; };
    auto Y = [&](const FinWord& sub, int e = 1) { return GenLetter{GenKind::y, sub, e}; };
    switch (id) {
    case 1:
        return std::make_pair(GroupWord::make({X(s, 2)}, m),
                              GroupWord::make({X(s + "0"), X(s), X(s + "1")}, m));
    case 2: {
        auto ts = partial_action(t, s);
        if (!ts) return std::nullopt;
        return std::make_pair(GroupWord::make({X(t), X(s)}, m),
                              GroupWord::make({X(s), X(*ts)}, m));
    }
    case 3: {
        auto ts = partial_action(t, s);
        if (!ts) return std::nullopt;
        return std::make_pair(GroupWord::make({Y(t), X(s)}, m),
                              GroupWord::make({X(s), Y(*ts)}, m));
    }
    case 4: {
        bool s_pref = t.size() >= s.size() && t.compare(0, s.size(), s) == 0;
        bool t_pref = s.size() >= t.size() && s.compare(0, t.size(), t) == 0;
        if (s_pref || t_pref) return std::nullopt; // compatible subscripts commute only per (4)
        return std::make_pair(GroupWord::make({Y(s), Y(t)}, m),
                              GroupWord::make({Y(t), Y(s)}, m));
    }
    case 5:
        return std::make_pair(GroupWord::make({Y(s)}, m),
                              GroupWord::make({X(s), Y(s + "0"), Y(s + "10", -1), Y(s + "11")}, m));
    default:
        fail(errc::invalid_argument, "relation id must be 1..5");
    }
}

AbelImage abelianize(const GroupWord& w) {
    AbelImage sum{0, 0, 0};
    auto add = [&](const AbelImage& v, const Int& e) {
        for (int i = 0; i < 3; ++i) sum[i] += v[i] * e;
    };
    for (const GenLetter& l : w.letters) {
        const FinWord& s = l.sub;
        bool constant = is_constant_word(s);
        if (w.marker == Marker::G0) {
            if (l.kind == GenKind::y) {
                add({0, 0, 1}, l.exp);
            } else if (s.empty()) {
                add({1, 0, 0}, l.exp);
            } else if (constant && s[0] == '0') {
                add({1, -1, 0}, l.exp);
            } else if (constant) {
                add({0, 1, 0}, l.exp);
            }
        } else {
            if (l.kind == GenKind::x) continue;
            if (s.empty()) {
                add({-1, 1, 1}, l.exp);
            } else if (constant && s[0] == '0') {
                add({0, 1, 0}, l.exp);
            } else if (constant) {
                add({0, 0, 1}, l.exp);
            } else {
                add({1, 0, 0}, l.exp);
            }
        }
    }
    return sum;
}

GroupWord StandardForm::to_word() const {
    std::vector<GenLetter> letters = head.letters;
    for (const auto& [sub, e] : tail) letters.push_back(GenLetter{GenKind::y, sub, e});
    return GroupWord::make(std::move(letters), marker);
}

ExponentSums exponent_sums(const StandardForm& sf) {
    ExponentSums sums;
    for (const auto& [sub, e] : sf.tail) {
        if (sub.empty()) continue;
        if (!is_constant_word(sub))
            sums.central += e;
        else if (sub[0] == '0')
            sums.left += e;
        else
            sums.right += e;
    }
    return sums;
}

namespace {

struct Atom {
    GenKind kind;
    FinWord sub;
    int exp; // +1 or -1
};

// Order for the sorted y-tail: descendants before ancestors, incomparable
// subscripts lexicographically. Realized as lex order with an end-marker
// that sorts above both letters.
bool tail_before(const FinWord& a, const FinWord& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return a.size() > b.size();
}

bool is_prefix(const FinWord& p, const FinWord& w) {
    return w.size() >= p.size() && w.compare(0, p.size(), p) == 0;
}

void expand_rel5(std::vector<Atom>& atoms, size_t i) {
    Atom a = atoms[i];
    std::vector<Atom> repl;
    if (a.exp > 0) {
        repl = {{GenKind::x, a.sub, 1},
                {GenKind::y, a.sub + "0", 1},
                {GenKind::y, a.sub + "10", -1},
                {GenKind::y, a.sub + "11", 1}};
    } else {
        repl = {{GenKind::y, a.sub + "11", -1},
                {GenKind::y, a.sub + "10", 1},
                {GenKind::y, a.sub + "0", -1},
                {GenKind::x, a.sub, -1}};
    }
    atoms.erase(atoms.begin() + static_cast<long>(i));
    atoms.insert(atoms.begin() + static_cast<long>(i), repl.begin(), repl.end());
}

} // namespace

StandardForm standardize_unchecked(const GroupWord& w, size_t budget) {
    std::vector<Atom> atoms;
    for (const GenLetter& l : w.letters) {
        int sign = l.exp > 0 ? 1 : -1;
        for (Int k = 0; k < abs(l.exp); ++k) atoms.push_back({l.kind, l.sub, sign});
    }

    size_t steps = 0;
    auto spend = [&](const char* stage) {
        if (++steps > budget)
            fail(errc::normalization_overflow,
                 std::string("standardization budget exhausted during ") + stage);
    };

    auto free_reduce = [&]() {
        std::vector<Atom> out;
        for (const Atom& a : atoms) {
            if (!out.empty() && out.back().kind == a.kind && out.back().sub == a.sub &&
                out.back().exp == -a.exp)
                out.pop_back();
            else
                out.push_back(a);
        }
        atoms.swap(out);
    };

    // One action per iteration. First every x-atom is pushed left of every
    // y-atom via the conjugation relation (3), expanding a blocking y-letter
    // by relation (5) when the partial action is undefined. Once the word is
    // split as x-head + y-tail, the tail is sorted: incomparable neighbors
    // commute by relation (4); an ancestor sitting left of a descendant is
    // expanded by relation (5), which reintroduces an x-atom and sends the
    // loop back to the pushing stage. Subscripts lengthen under expansion,
    // which resolves every blocked configuration; the budget is a safety
    // net, not part of the argument.
    while (true) {
        free_reduce();

        size_t yx = atoms.size();
        for (size_t i = 0; i + 1 < atoms.size(); ++i) {
            if (atoms[i].kind == GenKind::y && atoms[i + 1].kind == GenKind::x) {
                yx = i;
                break;
            }
        }
        if (yx != atoms.size()) {
            spend("x-push");
            auto moved = partial_action(atoms[yx].sub, atoms[yx + 1].sub, atoms[yx + 1].exp);
            if (moved) {
                Atom xa = atoms[yx + 1];
                atoms[yx + 1] = Atom{GenKind::y, *moved, atoms[yx].exp};
                atoms[yx] = xa;
            } else {
                expand_rel5(atoms, yx);
            }
            continue;
        }

        size_t head_len = 0;
        while (head_len < atoms.size() && atoms[head_len].kind == GenKind::x) ++head_len;

        bool acted = false;
        for (size_t i = head_len; i + 1 < atoms.size(); ++i) {
            const FinWord& u = atoms[i].sub;
            const FinWord& v = atoms[i + 1].sub;
            if (u == v) {
                if (atoms[i].exp == -atoms[i + 1].exp) {
                    spend("tail-cancel");
                    atoms.erase(atoms.begin() + static_cast<long>(i),
                                atoms.begin() + static_cast<long>(i) + 2);
                    acted = true;
                    break;
                }
                continue;
            }
            if (is_prefix(u, v)) {
                spend("tail-expand");
                expand_rel5(atoms, i);
                acted = true;
                break;
            }
            if (is_prefix(v, u)) continue; // descendant first: already in order
            if (!tail_before(u, v)) {
                spend("tail-swap");
                std::swap(atoms[i], atoms[i + 1]);
                acted = true;
                break;
            }
        }
        if (!acted) break;
    }

    size_t head_len = 0;
    while (head_len < atoms.size() && atoms[head_len].kind == GenKind::x) ++head_len;

    StandardForm sf;
    sf.marker = w.marker;
    std::vector<GenLetter> head;
    for (size_t i = 0; i < head_len; ++i)
        head.push_back(GenLetter{GenKind::x, atoms[i].sub, atoms[i].exp});
    sf.head = GroupWord::make(std::move(head), w.marker);
    for (size_t i = head_len; i < atoms.size(); ++i) {
        if (!sf.tail.empty() && sf.tail.back().first == atoms[i].sub) {
            sf.tail.back().second += atoms[i].exp;
            if (sf.tail.back().second == 0) sf.tail.pop_back();
        } else {
            sf.tail.emplace_back(atoms[i].sub, Int(atoms[i].exp));
        }
    }
    return sf;
}

} // namespace lm
