#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polarsamp/realroots.hpp"

using namespace polarsamp;

namespace {

Rat Q(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

const UPoly X = UPoly::variable();

UPoly operator-(const UPoly& a, long c) { return a - UPoly::constant(Q(c)); }
UPoly operator+(const UPoly& a, long c) { return a + UPoly::constant(Q(c)); }
UPoly operator-(const UPoly& a, const Rat& c) { return a - UPoly::constant(c); }

bool contains(const RatInterval& iv, const Rat& x) { return iv.lo <= x && x <= iv.hi; }

}  // namespace

TEST_CASE("sturm counts over the whole line") {
    CHECK(sturm_count(X * X - 1, std::nullopt, std::nullopt) == 2);
    CHECK(sturm_count(X * X + 1, std::nullopt, std::nullopt) == 0);
    CHECK(sturm_count(X * X * X - X, std::nullopt, std::nullopt) == 3);
    CHECK(sturm_count(X - 5, std::nullopt, std::nullopt) == 1);
}

TEST_CASE("sturm counts on half-open intervals (lo, hi]") {
    UPoly q = X * X - 1;  // roots -1, 1
    CHECK(sturm_count(q, Q(0), Q(2)) == 1);
    CHECK(sturm_count(q, Q(-2), Q(0)) == 1);
    CHECK(sturm_count(q, Q(-1), Q(1)) == 1);  // -1 excluded, 1 included
    CHECK(sturm_count(q, Q(1), Q(2)) == 0);
    CHECK(sturm_count(q, std::nullopt, Q(-1)) == 1);
    CHECK(sturm_count(q, Q(-1), std::nullopt) == 1);
}

TEST_CASE("sturm sequence of x^2 - 1") {
    auto seq = sturm_sequence(X * X - 1);
    REQUIRE(seq.size() == 3);
    CHECK(seq[0] == X * X - 1);
    CHECK(seq[1] == X * Q(2));
    CHECK(seq[2] == UPoly::constant(Q(1)));
}

TEST_CASE("root isolation") {
    auto roots = isolate_real_roots(X * X - 1);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].interval.hi <= roots[1].interval.lo);
    CHECK(contains(roots[0].interval, Q(-1)));
    CHECK(contains(roots[1].interval, Q(1)));
    CHECK(roots[0].index == 0);
    CHECK(roots[1].index == 1);

    CHECK(isolate_real_roots(X * X + 1).empty());

    auto r3 = isolate_real_roots(X * X - Q(1, 3));
    REQUIRE(r3.size() == 2);
    // 1/sqrt(3) = 0.57735...
    CHECK(r3[1].interval.lo <= Q(57736, 100000));
    CHECK(r3[1].interval.hi >= Q(57735, 100000));

    CHECK_THROWS(isolate_real_roots((X - 1) * (X - 1)));
}

TEST_CASE("isolating intervals have non-root endpoints") {
    auto roots = isolate_real_roots(X * X * X - X);
    REQUIRE(roots.size() == 3);
    UPoly q = X * X * X - X;
    for (const auto& r : roots) {
        CHECK(q.eval(r.interval.lo) != 0);
        CHECK(q.eval(r.interval.hi) != 0);
        CHECK(sturm_count(q, r.interval.lo, r.interval.hi) == 1);
    }
    CHECK(contains(roots[1].interval, Q(0)));
}

TEST_CASE("isolation count matches the sturm count") {
    std::vector<UPoly> cases = {
        X * X * X * X - X * X * Q(5) + 4,        // roots +-1, +-2
        (X * X - 2) * (X * X + 1),               // roots +-sqrt(2)
        X * X * X * X * X - X * Q(7) + 2,        // generic quintic
        X * X * Q(3) + X * Q(2) - 1,             // non-monic
    };
    for (const auto& q : cases) {
        int count = sturm_count(q, std::nullopt, std::nullopt);
        CHECK(static_cast<int>(isolate_real_roots(q).size()) == count);
        CHECK(tarski_query(UPoly::constant(Q(1)), q) == count);
    }
}

TEST_CASE("tarski queries on x^2 - 1") {
    UPoly q = X * X - 1;
    CHECK(tarski_query(UPoly::constant(Q(1)), q) == 2);
    CHECK(tarski_query(X, q) == 0);           // sign(-1) + sign(1)
    CHECK(tarski_query(X + 2, q) == 2);       // both roots above -2
    CHECK(tarski_query(X - 2, q) == -2);
    CHECK(tarski_query(q, q) == 0);           // g vanishes at every root
}

TEST_CASE("tarski queries solve for per-sign root counts") {
    // roots of q: -2, -1, 1, 2; g = x - 3/2 is negative at three of them
    UPoly q = X * X * X * X - X * X * Q(5) + 4;
    UPoly g = X - UPoly::constant(Q(3, 2));
    int t1 = tarski_query(UPoly::constant(Q(1)), q);
    int tg = tarski_query(g, q);
    int tg2 = tarski_query(g * g, q);
    int pos = (tg2 + tg) / 2, neg = (tg2 - tg) / 2, zero = t1 - tg2;
    CHECK(pos == 1);
    CHECK(neg == 3);
    CHECK(zero == 0);
}

TEST_CASE("interval-restricted tarski query") {
    UPoly q = X * X - 1;
    CHECK(tarski_query(UPoly::constant(Q(1)), q, Q(0), Q(2)) == 1);
    CHECK(tarski_query(X, q, Q(0), Q(2)) == 1);
    CHECK(tarski_query(X, q, std::nullopt, Q(0)) == -1);
}

TEST_CASE("thom encoding of x^2 - 1") {
    auto roots = thom_encode_roots(X * X - 1);
    REQUIRE(roots.size() == 2);
    REQUIRE(roots[0].thom.size() == 1);  // sign of q' only
    CHECK(roots[0].thom[0] == -1);
    CHECK(roots[1].thom[0] == 1);
}

TEST_CASE("thom encoding of x^3 - x") {
    auto roots = thom_encode_roots(X * X * X - X);
    REQUIRE(roots.size() == 3);
    // q' = 3x^2 - 1, q'' = 6x at -1, 0, 1
    CHECK(roots[0].thom == std::vector<int>{1, -1});
    CHECK(roots[1].thom == std::vector<int>{-1, 0});
    CHECK(roots[2].thom == std::vector<int>{1, 1});
}

TEST_CASE("thom vectors are distinct and ordered") {
    std::vector<UPoly> cases = {
        X * X - Q(1, 3),
        X * X * X * X - X * X * Q(5) + 4,
        X * X * X * X * X - X * Q(7) + 2,
    };
    for (const auto& q : cases) {
        auto roots = thom_encode_roots(q.monic());
        for (size_t a = 0; a < roots.size(); ++a)
            for (size_t b = a + 1; b < roots.size(); ++b) {
                CHECK(roots[a].thom != roots[b].thom);
                CHECK(thom_compare(roots[a].thom, roots[b].thom) < 0);
                CHECK(thom_compare(roots[b].thom, roots[a].thom) > 0);
            }
        for (const auto& r : roots) CHECK(thom_compare(r.thom, r.thom) == 0);
    }
}

TEST_CASE("refinement keeps the root and shrinks the interval") {
    UPoly q = X * X - Q(1, 3);
    auto roots = isolate_real_roots(q);
    RatInterval iv = roots[1].interval;
    refine_root(q, iv, Q(1, 1000000));
    CHECK(iv.width() < Q(1, 1000000));
    CHECK(sturm_count(q, iv.lo, iv.hi) == 1);
    // 1/sqrt(3) is inside
    CHECK(iv.lo * iv.lo < Q(1, 3));
    CHECK(iv.hi * iv.hi > Q(1, 3));
}

TEST_CASE("refinement lands exactly on rational roots") {
    UPoly q = (X - UPoly::constant(Q(1, 2))) * (X + 3);
    auto roots = isolate_real_roots(q);
    REQUIRE(roots.size() == 2);
    RatInterval iv = roots[1].interval;
    refine_root(q, iv, Q(1, 1L << 40));
    CHECK(contains(iv, Q(1, 2)));
    CHECK(iv.width() < Q(1, 1L << 40));
}

TEST_CASE("cauchy bound encloses every real root") {
    UPoly q = X * X * X * X - X * X * Q(5) + 4;
    Rat bound = cauchy_root_bound(q);
    CHECK(sturm_count(q, -bound, bound) == 4);
    CHECK(bound > 2);
}
