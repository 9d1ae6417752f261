#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace lm;
using namespace lm::testutil;

TEST_CASE("normalization extracts square factors") {
    QuadExt a = QuadExt::make(0, 1, 8);
    CHECK(a.p == 0);
    CHECK(a.q == 2);
    CHECK(a.d == 2);

    QuadExt b = QuadExt::make(3, 0, 7);
    CHECK(b.q == 0);
    CHECK(b.d == 0);

    QuadExt c = QuadExt::make(Rat(-1, 2), Rat(1, 2), 5);
    CHECK(c.p == Rat(-1, 2));
    CHECK(c.q == Rat(1, 2));
    CHECK(c.d == 5);
    // c is the positive solution of x^2 + x - 1 = 0
    QuadExt eq = c * c + c - QuadExt(1);
    CHECK(eq.is_zero());

    CHECK(QuadExt::make(2, 3, 49) == QuadExt(Rat(23))); // perfect square folds in
    CHECK(QuadExt::make(0, 1, 12).d == 3);
    CHECK(QuadExt::make(0, 1, 12).q == 2);
}

TEST_CASE("cross-discriminant comparison") {
    QuadExt sqrt2 = QuadExt::make(0, 1, 2);
    CHECK(quad_cmp(sqrt2, QuadExt(Rat(3, 2))) < 0);

    QuadExt golden = QuadExt::make(Rat(1, 2), Rat(1, 2), 5);
    CHECK(quad_cmp(golden, golden) == std::strong_ordering::equal);

    QuadExt a = QuadExt::make(1, 1, 2);
    QuadExt b = QuadExt::make(0, 1, 5);
    CHECK(quad_cmp(a, b) > 0); // 1 + sqrt(2) > sqrt(5)
}

TEST_CASE("arithmetic in a quadratic field") {
    QuadExt a = QuadExt::make(1, 1, 5);
    QuadExt b = QuadExt::make(1, -1, 5);
    CHECK(a * b == QuadExt(Rat(-4)));

    QuadExt c = QuadExt::make(Rat(2, 3), Rat(5, 7), 13);
    CHECK(c + QuadExt(0) == c);

    QuadExt e = QuadExt::make(-1, 1, 3) / QuadExt(2);
    CHECK(e == QuadExt::make(Rat(-1, 2), Rat(1, 2), 3));

    CHECK((a / a) == QuadExt(1));
    CHECK_THROWS_AS(a / QuadExt(0), calc_error);
    QuadExt s2 = QuadExt::make(0, 1, 2);
    CHECK_THROWS_AS(a + s2, calc_error);
    CHECK_THROWS_WITH_AS(a * s2, doctest::Contains("different quadratic fields"), calc_error);
}

TEST_CASE("comparison agrees with interval refinement and is an order") {
    Rng rng(42);
    std::vector<QuadExt> vals;
    for (int i = 0; i < 40; ++i) vals.push_back(random_quad(rng));

    int checked = 0;
    for (int iter = 0; iter < 10000; ++iter) {
        const QuadExt& a = vals[static_cast<size_t>(uniform(rng, 0, 39))];
        const QuadExt& b = vals[static_cast<size_t>(uniform(rng, 0, 39))];
        const QuadExt& c = vals[static_cast<size_t>(uniform(rng, 0, 39))];
        auto ab = quad_cmp(a, b);
        auto ba = quad_cmp(b, a);
        CHECK(ab == (0 <=> ba)); // antisymmetry
        if (quad_cmp(a, b) <= 0 && quad_cmp(b, c) <= 0) CHECK(quad_cmp(a, c) <= 0);

        int oracle = interval_compare(a, b);
        if (oracle == 2) {
            CHECK(ab == std::strong_ordering::equal);
        } else {
            CHECK((ab < 0 ? -1 : ab > 0 ? 1 : 0) == oracle);
            ++checked;
        }
    }
    CHECK(checked > 5000);
}

TEST_CASE("arithmetic results stay canonical") {
    Rng rng(7);
    for (int i = 0; i < 2000; ++i) {
        QuadExt a = random_quad(rng), b = random_quad(rng);
        if (a.d != b.d && a.d != 0 && b.d != 0) continue;
        for (QuadExt v : {a + b, a - b, a * b}) {
            if (v.q == 0) {
                CHECK(v.d == 0);
            } else {
                CHECK(v.d > 1);
                CHECK(QuadExt::make(v.p, v.q, v.d) == v);
            }
            CHECK((quad_cmp(v, v) == std::strong_ordering::equal));
        }
        // equality iff identical canonical fields
        QuadExt sum = a + b;
        QuadExt sum2 = b + a;
        CHECK(sum == sum2);
        CHECK(quad_cmp(sum, sum2) == std::strong_ordering::equal);
    }
}

TEST_CASE("signs") {
    CHECK(QuadExt::make(-3, 2, 2).sign() < 0);  // 2 sqrt2 = 2.83 < 3
    CHECK(QuadExt::make(-2, 2, 2).sign() > 0);
    CHECK(QuadExt::make(0, 0, 0).sign() == 0);
    CHECK(QuadExt::make(5, -3, 3).sign() < 0);  // 3 sqrt3 = 5.196
}

TEST_CASE("rendering and parsing round trip") {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        QuadExt v = random_quad(rng);
        CHECK(parse_quadext(v.str()) == v);
    }
    CHECK(parse_quadext("-1/2+1/2*sqrt(5)") == QuadExt::make(Rat(-1, 2), Rat(1, 2), 5));
    CHECK(parse_quadext("sqrt(8)") == QuadExt::make(0, 2, 2));
    CHECK(parse_quadext("7/3") == QuadExt(Rat(7, 3)));
    CHECK(parse_quadext("-sqrt(2)") == QuadExt::make(0, -1, 2));
    CHECK_THROWS_AS(parse_quadext("sqrt(-1)"), calc_error);
    CHECK_THROWS_AS(parse_quadext("1+2"), calc_error);
    CHECK(parse_extreal("-inf") == ExtReal::neg_inf());
    CHECK(parse_extreal("inf").is_infinite());
}

TEST_CASE("extended reals order") {
    CHECK(ext_cmp(ExtReal::neg_inf(), ExtReal(QuadExt(0))) < 0);
    CHECK(ext_cmp(ExtReal(QuadExt(0)), ExtReal::pos_inf()) < 0);
    CHECK(ext_cmp(ExtReal::pos_inf(), ExtReal::pos_inf()) == std::strong_ordering::equal);
    CHECK(-ExtReal::pos_inf() == ExtReal::neg_inf());
}

TEST_CASE("square part extraction handles large composites") {
    // 2^4 * 3^2 * 101^2 * 103
    Int n = Int(16) * 9 * 101 * 101 * 103;
    auto [m, s] = extract_square_part(n);
    CHECK(m == 4 * 3 * 101);
    CHECK(s == 103);
    auto [m2, s2] = extract_square_part(Int("1000003") * Int("1000033"));
    CHECK(m2 == 1);
    CHECK(s2 == Int("1000003") * Int("1000033"));
}
