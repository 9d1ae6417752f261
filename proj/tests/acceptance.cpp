// Acceptance suite: each criterion prints a single PASS/FAIL line with its
// runtime. Every check is exact; there are no numeric tolerances anywhere.

#include <chrono>
#include <functional>
#include <iostream>
#include <vector>

#include "testutil.hpp"

using namespace lm;
using namespace lm::testutil;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, double time_limit_s,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > time_limit_s) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("exceeded time limit");
    }
    std::printf("criterion %d [%-24s] %s  (%.2fs)%s\n", number, name.c_str(),
                ok ? "PASS" : "FAIL", secs, detail.empty() ? "" : ("  " + detail).c_str());
    if (!ok) ++failures;
}

std::vector<FinWord> words_up_to(int max_len) {
    std::vector<FinWord> words{""};
    for (int len = 1; len <= max_len; ++len) {
        size_t start = words.size() - (static_cast<size_t>(1) << (len - 1));
        size_t end = words.size();
        for (size_t i = start; i < end; ++i) {
            words.push_back(words[i] + "0");
            words.push_back(words[i] + "1");
        }
    }
    return words;
}

bool correspondence_suite(std::string& detail) {
    Rng rng(1001);
    for (int i = 0; i < 1000; ++i) {
        GroupWord w = random_g0_generator_word(rng, 12);
        EvpSeq xi = random_seq(rng, 6, 6);
        if (!(big_phi(run_word(w, xi)) == realize(w)(big_phi(xi)))) {
            detail = "mismatch for " + w.str() + " at " + xi.str();
            return false;
        }
    }
    return true;
}

bool relation_suite(std::string& detail) {
    auto words = words_up_to(4);
    size_t count = 0;
    auto check = [&](int id, const FinWord& s, const FinWord& t) {
        auto inst = relation_instance(id, s, t);
        if (!inst) return true;
        ++count;
        if (equal_words(inst->first, inst->second)) return true;
        detail = "relation (" + std::to_string(id) + ") fails at s=" + s + " t=" + t;
        return false;
    };
    for (const auto& s : words) {
        if (!check(1, s, "")) return false;
        if (!check(5, s, "")) return false;
        for (const auto& t : words) {
            if (!check(2, s, t)) return false;
            if (!check(3, s, t)) return false;
            if (!check(4, s, t)) return false;
        }
    }
    detail = std::to_string(count) + " instances";
    return true;
}

bool abelianization_suite(std::string& detail) {
    // pinned basis values
    auto w = [&](const std::string& s, Marker m) { return parse_word(s, m); };
    if (abelianize(w("x", Marker::G0)) != AbelImage{1, 0, 0}) return false;
    if (abelianize(w("x[1]", Marker::G0)) != AbelImage{0, 1, 0}) return false;
    if (abelianize(w("y[10]", Marker::G0)) != AbelImage{0, 0, 1}) return false;
    if (abelianize(w("y", Marker::G)) != AbelImage{-1, 1, 1}) return false;

    auto words = words_up_to(4);
    size_t count = 0;
    auto check = [&](int id, const FinWord& s, const FinWord& t) {
        auto inst = relation_instance(id, s, t);
        if (!inst) return true;
        ++count;
        if (abelianize(inst->first) != abelianize(inst->second)) {
            detail = "G table not invariant on relation (" + std::to_string(id) + ") s=" + s +
                     " t=" + t;
            return false;
        }
        try {
            GroupWord l0 = GroupWord::make(inst->first.letters, Marker::G0);
            GroupWord r0 = GroupWord::make(inst->second.letters, Marker::G0);
            if (abelianize(l0) != abelianize(r0)) {
                detail = "G0 table not invariant on relation (" + std::to_string(id) + ")";
                return false;
            }
        } catch (const calc_error& e) {
            if (e.code() != errc::marker_violation) throw;
        }
        return true;
    };
    for (const auto& s : words) {
        if (!check(1, s, "")) return false;
        if (!check(5, s, "")) return false;
        for (const auto& t : words)
            for (int id : {2, 3, 4})
                if (!check(id, s, t)) return false;
    }
    detail = std::to_string(count) + " instances, both tables";
    return true;
}

bool commutator_membership(std::string& detail) {
    Rng rng(4001);
    for (int i = 0; i < 200; ++i) {
        GroupWord u = random_g0_word(rng, 8), v = random_g0_word(rng, 8);
        GroupWord c = u * v * u.inverse() * v.inverse();
        if (!member(c, Subgroup::G0prime)) {
            detail = "commutator escaped G0': [" + u.str() + ", " + v.str() + "]";
            return false;
        }
    }
    int rejected = 0;
    while (rejected < 200) {
        GroupWord w = random_g0_word(rng, 8);
        AbelImage im = abelianize(w);
        if (im == AbelImage{0, 0, 0}) continue;
        ++rejected;
        if (member(w, Subgroup::G0prime)) {
            detail = "nonzero image accepted: " + w.str();
            return false;
        }
    }
    return true;
}

bool case_identity(std::string& detail) {
    GroupWord lhs = parse_word("y[100] y[10011]^-1", Marker::G0);
    GroupWord rhs = parse_word("x[100] y[1000] y[10010]^-1", Marker::G0);
    if (equal_words(lhs, rhs)) return true;
    detail = "identity fails";
    return false;
}

bool germ_quotient(std::string& detail) {
    if (germ_pair_image(parse_word("x", Marker::G)) != std::pair<Rat, Rat>{1, 0}) {
        detail = "x image wrong";
        return false;
    }
    if (germ_pair_image(parse_word("x[1]", Marker::G)) != std::pair<Rat, Rat>{0, 1}) {
        detail = "x[1] image wrong";
        return false;
    }
    Rng rng(6001);
    for (int i = 0; i < 100; ++i) {
        GroupWord w = random_gprime_word(rng);
        if (!member(w, Subgroup::Gprime)) {
            detail = "generator produced a word outside G'";
            return false;
        }
        auto img = germ_pair_image(w);
        bool zero = img.first == 0 && img.second == 0;
        if (zero != member(w, Subgroup::Gsecond)) {
            detail = "(0,0) <-> G'' equivalence fails for " + w.str();
            return false;
        }
    }
    return true;
}

bool step_suite(std::string& detail) {
    for (int r = 1; r <= 20; ++r) {
        StepMap g = gamma(Rat(r));
        QuadExt x = g.map.breakpoints()[1];
        if (!(x / (QuadExt(1) - x) == x + QuadExt(r))) {
            detail = "gamma equation fails at r=" + std::to_string(r);
            return false;
        }
        if (!(x.sign() > 0 && quad_cmp(x, QuadExt(1)) < 0)) {
            detail = "gamma breakpoint outside (0,1)";
            return false;
        }
        StepMap l = lambda_step(Rat(-r));
        QuadExt z = l.map.breakpoints()[1];
        if (!(quad_cmp(QuadExt(r), z) <= 0 && quad_cmp(z, QuadExt(r + 1)) <= 0)) {
            detail = "lambda breakpoint outside [-r, -r+1]";
            return false;
        }
        for (const QuadExt& bp : {x, z}) {
            if (!in_P_Z(ExtReal(bp))) {
                detail = "breakpoint not in P_Z";
                return false;
            }
            ProjMap wit = hyperbolic_witness(bp);
            if (classify(wit) != MapClass::hyperbolic || !(apply(wit, ExtReal(bp)) == ExtReal(bp))) {
                detail = "witness failed at r=" + std::to_string(r);
                return false;
            }
        }
        for (int n = -5; n <= 5; ++n) {
            PiecewisePP gn = gamma_n(n, Rat(r)).map;
            PiecewisePP ln = lambda_n(n, Rat(-r)).map;
            if (!(gn.breakpoints().front() == QuadExt(n)) ||
                !(ln.breakpoints().front() == QuadExt(n))) {
                detail = "conjugated step misplaced";
                return false;
            }
        }
    }
    return true;
}

bool compactification_suite(std::string& detail) {
    Rng rng(8001);
    for (int i = 0; i < 50; ++i) {
        PiecewisePP f = random_germ_matched(rng);
        PiecewisePP g = random_germ_matched(rng);
        CompactifyResult r = compactify_commutator(f, g);
        PiecewisePP fg = commutator(f, g);
        PiecewisePP hh = commutator(r.h1, r.h2), kk = commutator(r.k1, r.k2);
        if (!(commutator(r.s1, r.s2) == compose(fg, compose(hh, kk)))) {
            detail = "s-identity fails at pair " + std::to_string(i);
            return false;
        }
        if (!(commutator(r.t1, r.t2) == compose(hh, kk))) {
            detail = "t-identity fails at pair " + std::to_string(i);
            return false;
        }
        if (!is_compactly_supported(commutator(r.s1, r.s2)) ||
            !is_compactly_supported(commutator(r.t1, r.t2)) ||
            !is_compactly_supported(compose(commutator(r.s1, r.s2),
                                            inverse(commutator(r.t1, r.t2))))) {
            detail = "output not compactly supported at pair " + std::to_string(i);
            return false;
        }
        for (const auto& u : moved_set(hh))
            for (const auto& v : moved_set(fg))
                if (!(ext_cmp(u.hi, v.lo) <= 0 || ext_cmp(v.hi, u.lo) <= 0)) {
                    detail = "moved sets overlap at pair " + std::to_string(i);
                    return false;
                }
    }
    return true;
}

bool center_spot_check(std::string& detail) {
    PiecewisePP a = realize(parse_word("x", Marker::G0));
    PiecewisePP b = realize(parse_word("x[1]", Marker::G0));
    std::vector<GenLetter> gens;
    for (int e : {1, -1}) {
        gens.push_back({GenKind::x, "", e});
        gens.push_back({GenKind::x, "1", e});
        gens.push_back({GenKind::y, "10", e});
    }
    std::vector<GroupWord> candidates;
    for (const GenLetter& l : gens) candidates.push_back(GroupWord::make({l}, Marker::G0));
    for (const GenLetter& l1 : gens)
        for (const GenLetter& l2 : gens) {
            GroupWord w = GroupWord::make({l1, l2}, Marker::G0);
            if (w.length() == 2) candidates.push_back(w);
        }
    for (const GroupWord& w : candidates) {
        PiecewisePP m = realize(w);
        bool com_a = commutator(m, a).is_identity();
        bool com_b = commutator(m, b).is_identity();
        if (com_a && com_b) {
            detail = "central word found: " + w.str();
            return false;
        }
    }
    detail = std::to_string(candidates.size()) + " words checked";
    return true;
}

} // namespace

int main() {
    criterion(1, "correspondence", 30, correspondence_suite);
    criterion(2, "relations", 60, relation_suite);
    criterion(3, "abelianization", 60, abelianization_suite);
    criterion(4, "commutator membership", 60, commutator_membership);
    criterion(5, "case identity", 10, case_identity);
    criterion(6, "germ quotient", 30, germ_quotient);
    criterion(7, "gamma/lambda steps", 30, step_suite);
    criterion(8, "compactification", 120, compactification_suite);
    criterion(9, "center spot check", 10, center_spot_check);
    if (failures == 0) {
        std::printf("all acceptance criteria pass\n");
        return 0;
    }
    std::printf("%d criteria FAILED\n", failures);
    return 1;
}
