#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace lm;
using namespace lm::testutil;

namespace {

GenLetter X(const FinWord& s, int e = 1) { return {GenKind::x, s, e}; }
GenLetter Y(const FinWord& s, int e = 1) { return {GenKind::y, s, e}; }

GroupWord W(std::vector<GenLetter> ls) { return GroupWord::make(std::move(ls), Marker::G); }

} // namespace

TEST_CASE("sequence canonical form") {
    CHECK(EvpSeq::make("10", "0") == EvpSeq::make("1", "0"));
    CHECK(EvpSeq::make("", "1010") == EvpSeq::make("", "10"));
    CHECK(EvpSeq::make("1", "01") == EvpSeq::make("", "10")); // rotation absorbed
    CHECK(parse_seq("10(01)").str() == "10(01)");
    CHECK(parse_seq("(10)").pre.empty());
    CHECK_THROWS_AS(parse_seq("10()"), calc_error);
    CHECK_THROWS_AS(parse_seq("2(01)"), calc_error);
}

TEST_CASE("tilde") {
    CHECK(tilde(parse_seq("10(0)")) == parse_seq("01(1)"));
    CHECK(tilde(parse_seq("(10)")) == parse_seq("(01)"));
    Rng rng(1);
    for (int i = 0; i < 200; ++i) {
        EvpSeq s = random_seq(rng);
        CHECK(tilde(tilde(s)) == s);
    }
}

TEST_CASE("single letter actions") {
    CHECK(run_letter(X(""), parse_seq("001(1)")) == parse_seq("01(1)"));
    CHECK(run_letter(Y(""), parse_seq("01(1)")) == parse_seq("10(1)"));
    CHECK(run_letter(Y("10"), parse_seq("10(0)")) == parse_seq("10(0)"));
    // y((10)^inf) = (11100001)^inf, the fixed point of doubling under phi
    CHECK(run_letter(Y(""), parse_seq("(10)")) == parse_seq("(11100001)"));
    // identity outside the cylinder
    CHECK(run_letter(X("1"), parse_seq("0(0)")) == parse_seq("0(0)"));
    CHECK(run_letter(Y("11"), parse_seq("10(1)")) == parse_seq("10(1)"));
}

TEST_CASE("words compose left to right") {
    Rng rng(2);
    CHECK(run_word(W({}), parse_seq("01(10)")) == parse_seq("01(10)"));
    for (int i = 0; i < 200; ++i) {
        GroupWord w = random_g_word(rng, 5);
        EvpSeq xi = random_seq(rng);
        CHECK(run_word(w.inverse(), run_word(w, xi)) == xi);
        // pipeline equals sequential application
        EvpSeq stepwise = xi;
        for (const GenLetter& l : w.letters) {
            int sign = l.exp > 0 ? 1 : -1;
            for (Int k = 0; k < abs(l.exp); ++k)
                stepwise = run_letter({l.kind, l.sub, sign}, stepwise);
        }
        EvpSeq piped = run_word(w, xi);
        CHECK(piped == stepwise);
    }
    // digitwise agreement to depth 64 for a fixed pair
    GroupWord w = W({X(""), X("1")});
    EvpSeq xi = parse_seq("1(101)");
    EvpSeq lhs = run_word(w, xi);
    EvpSeq rhs = run_letter(X("1"), run_letter(X(""), xi));
    for (size_t i = 0; i < 64; ++i) CHECK(lhs.at(i) == rhs.at(i));
}

TEST_CASE("partial action") {
    CHECK(partial_action("100", "1") == FinWord("10"));
    CHECK(!partial_action("10", "1").has_value());
    CHECK(partial_action("01", "1") == FinWord("01"));
    CHECK(!partial_action("1", "10").has_value());  // proper prefix below s
    CHECK(!partial_action("1", "1").has_value());   // equal subscripts
    CHECK(partial_action("101", "1") == FinWord("110"));
    CHECK(partial_action("1011", "1") == FinWord("1101"));
    CHECK(partial_action("11", "1") == FinWord("111"));

    // inverse direction
    CHECK(partial_action("10", "1", -1) == FinWord("100"));
    CHECK(!partial_action("11", "1", -1).has_value());
    CHECK(partial_action("110", "1", -1) == FinWord("101"));
    CHECK(partial_action("111", "1", -1) == FinWord("11"));

    // the two directions invert each other where defined
    Rng rng(4);
    for (int i = 0; i < 500; ++i) {
        FinWord t = random_bin_word(rng, 6);
        FinWord s = random_bin_word(rng, 4);
        auto fwd = partial_action(t, s);
        if (fwd) {
            auto back = partial_action(*fwd, s, -1);
            REQUIRE(back.has_value());
            CHECK(*back == t);
        }
    }
}

TEST_CASE("partial action matches the cylinder action of the transducer") {
    Rng rng(6);
    for (int i = 0; i < 300; ++i) {
        FinWord t = random_bin_word(rng, 5);
        FinWord s = random_bin_word(rng, 3);
        auto img = partial_action(t, s);
        if (!img) continue;
        for (int k = 0; k < 5; ++k) {
            EvpSeq tail = random_seq(rng, 3, 3);
            EvpSeq point = tail.prepend(t);
            EvpSeq expect = tail.prepend(*img);
            CHECK(run_letter(X(s), point) == expect);
        }
    }
}

TEST_CASE("phi values") {
    CHECK(phi(parse_seq("(10)")) == ExtReal(QuadExt::make(Rat(1, 2), Rat(1, 2), 5)));
    CHECK(phi(parse_seq("(0)")) == ExtReal(QuadExt(0)));
    CHECK(phi(parse_seq("(1)")) == ExtReal::pos_inf());
    CHECK(big_phi(parse_seq("1(0)")) == ExtReal(QuadExt(0)));
    CHECK(big_phi(parse_seq("0(0)")) == ExtReal::neg_inf());
    CHECK(big_phi(parse_seq("(1)")) == ExtReal::pos_inf());
    // Phi(10 xi) = phi(0 xi) lands in [0,1]
    CHECK(big_phi(parse_seq("10(1)")) == ExtReal(QuadExt(1)));
}

TEST_CASE("phi recursions hold exactly") {
    Rng rng(8);
    for (int i = 0; i < 300; ++i) {
        EvpSeq xi = random_seq(rng);
        ExtReal v = phi(xi);
        ExtReal v0 = phi(xi.prepend("0"));
        ExtReal v1 = phi(xi.prepend("1"));
        if (v.is_infinite()) {
            CHECK(v0 == ExtReal(QuadExt(1)));
            CHECK(v1.is_infinite());
        } else {
            CHECK(v0 == ExtReal(v.value / (QuadExt(1) + v.value)));
            CHECK(v1 == ExtReal(QuadExt(1) + v.value));
        }
    }
}

TEST_CASE("phi is increasing, strictly except on expansion boundary pairs") {
    // phi identifies u 0 1^inf with u 1 0^inf, exactly like the two binary
    // expansions of a dyadic rational; away from those pairs the order is
    // strict.
    auto boundary_pair = [](const EvpSeq& lo, const EvpSeq& hi) {
        size_t n = 0;
        while (lo.at(n) == hi.at(n)) ++n;
        if (lo.at(n) != '0' || hi.at(n) != '1') return false;
        EvpSeq ones = EvpSeq::make("", "1"), zeros = EvpSeq::make("", "0");
        FinWord lo_prefix, hi_prefix;
        for (size_t k = 0; k <= n; ++k) lo_prefix += lo.at(k);
        for (size_t k = 0; k <= n; ++k) hi_prefix += hi.at(k);
        EvpSeq lo_tail = lo;
        for (size_t k = 0; k <= n; ++k) lo_tail = lo_tail.drop_first();
        EvpSeq hi_tail = hi;
        for (size_t k = 0; k <= n; ++k) hi_tail = hi_tail.drop_first();
        return lo_tail == ones && hi_tail == zeros;
    };
    Rng rng(9);
    for (int i = 0; i < 400; ++i) {
        EvpSeq a = random_seq(rng), b = random_seq(rng);
        auto ord = seq_cmp(a, b);
        auto vord = ext_cmp(phi(a), phi(b));
        if (ord == std::strong_ordering::equal) {
            CHECK(vord == std::strong_ordering::equal);
        } else {
            const EvpSeq& lo = ord < 0 ? a : b;
            const EvpSeq& hi = ord < 0 ? b : a;
            auto expect = ext_cmp(phi(lo), phi(hi));
            CHECK(expect <= 0);
            if (expect == 0) CHECK(boundary_pair(lo, hi));
        }
    }
    // the identified pair, pinned
    CHECK(phi(parse_seq("0(1)")) == phi(parse_seq("1(0)")));
    CHECK(phi(parse_seq("0(1)")) == ExtReal(QuadExt(1)));
}

TEST_CASE("tilde conjugates y to its inverse") {
    Rng rng(10);
    for (int i = 0; i < 200; ++i) {
        EvpSeq xi = random_seq(rng);
        CHECK(tilde(run_letter(Y(""), xi)) == run_letter(Y("", -1), tilde(xi)));
    }
}

TEST_CASE("productivity and canonical outputs") {
    Rng rng(12);
    for (int i = 0; i < 300; ++i) {
        GroupWord w = random_g_word(rng, 4);
        EvpSeq xi = random_seq(rng);
        EvpSeq out = run_word(w, xi);
        CHECK(out == EvpSeq::make(out.pre, out.per)); // already canonical
        CHECK(!out.per.empty());
    }
}
