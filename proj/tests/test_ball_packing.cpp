#include "doctest.h"

#include "generators.hpp"
#include "tde/ball_packing.hpp"

using namespace tde;

namespace {
std::vector<Rational> R(std::initializer_list<Rational> xs) { return xs; }

PackingInstance example() {
    return {5, R({3, 2, 2, 1, Rational(2, 3), Rational(2, 3), Rational(1, 3), Rational(1, 3)})};
}
}  // namespace

TEST_CASE("Cremona hand traces") {
    auto r = cremona_reduce(1, R({1}));
    CHECK(r.trace.empty());
    CHECK(r.reduced);
    CHECK(r.terminal.a == R({1, 0, 0}));

    auto s = cremona_reduce(2, R({1, 1, 1, 1}));
    REQUIRE(s.trace.size() == 1);
    CHECK(s.trace[0].delta == 1);
    CHECK(s.terminal.b == 1);
    CHECK(s.terminal.a == R({1, 0, 0, 0}));
    CHECK(s.reduced);

    auto t = cremona_reduce(1, R({1, Rational(1, 2)}));
    REQUIRE(t.trace.size() == 1);
    CHECK(t.trace[0].delta == Rational(1, 2));
    CHECK(t.terminal.has_negative());
    CHECK_FALSE(t.reduced);
    CHECK(t.terminal.a.back() == Rational(-1, 2));
}

TEST_CASE("decide_packing") {
    auto v = decide_packing(example());
    CHECK(v.feasible);
    CHECK(replay(v.certificate) == v.certificate.terminal);
    CHECK(decide_packing({1, R({1})}).feasible);
    CHECK(decide_packing({2, R({1, 1, 1, 1})}).feasible);
    auto bad = decide_packing({1, R({1, Rational(1, 2)})});
    CHECK_FALSE(bad.feasible);
    CHECK(bad.failure == PackingFailure::NegativeEntry);
    // Already reduced, but ten unit balls have more volume than B(3).
    auto vol = decide_packing({3, std::vector<Rational>(10, Rational(1))});
    CHECK_FALSE(vol.feasible);
    CHECK(vol.failure == PackingFailure::Volume);
    CHECK_THROWS(decide_packing({0, R({1})}));
    CHECK_THROWS(decide_packing({1, R({0})}));
}

TEST_CASE("the example instance fails just above scale one") {
    auto p = example();
    for (int i = 4; i < 8; ++i) p.balls[i] *= Rational(101, 100);
    p.balls[2] *= Rational(101, 100);
    CHECK_FALSE(decide_packing(p).feasible);
}

TEST_CASE("replay rejects a tampered trace") {
    auto v = decide_packing(example());
    REQUIRE_FALSE(v.certificate.trace.empty());
    auto forged = v.certificate;
    forged.trace[0].delta += Rational(1, 7);
    CHECK_THROWS(replay(forged));
}

TEST_CASE("optimal scale") {
    auto p = example();
    auto br = optimal_scale(p, {2, 4, 5, 6, 7}, Rational(1, 100));
    CHECK(br.lo == 1);
    CHECK(br.hi == Rational(101, 100));
    auto one = optimal_scale({1, R({1})}, {0}, Rational(1, 1000));
    CHECK(one.lo == 1);
    auto four = optimal_scale({2, R({1, 1, 1, 1})}, {0, 1, 2, 3}, Rational(1, 64));
    CHECK(four.lo == 1);
    CHECK(four.hi == Rational(65, 64));
    auto stuck = optimal_scale({1, R({2, 1})}, {1}, Rational(1, 10));
    CHECK_FALSE(stuck.lo_feasible);
    CHECK_THROWS(optimal_scale(p, {}, Rational(1, 10)));
    CHECK_THROWS(optimal_scale(p, {0}, Rational(0)));
}

TEST_CASE("capacity obstruction") {
    CHECK_FALSE(capacity_obstruction({2, R({1, 1, 1, 1})}, 50).has_value());
    CHECK(capacity_obstruction({1, R({1, Rational(1, 2)})}, 10) == 2);
    CHECK_FALSE(capacity_obstruction({Rational(7, 3), R({Rational(7, 3)})}, 40).has_value());
}

TEST_CASE("random: invariant, replay, capacity agreement, monotonicity") {
    testing::Rng rng(61);
    for (int i = 0; i < 200; ++i) {
        int n = static_cast<int>(testing::uniform_int(rng, 1, 8));
        PackingInstance p{testing::positive_rational(rng, 10, 3), {}};
        for (int j = 0; j < n; ++j) p.balls.push_back(testing::positive_rational(rng, 6, 4));
        auto v = decide_packing(p);
        CHECK(replay(v.certificate) == v.certificate.terminal);
        for (const auto& m : v.certificate.trace) CHECK(m.after.invariant() == v.certificate.start.invariant());
        auto obstruction = capacity_obstruction(p, 40);
        if (v.feasible) CHECK_FALSE(obstruction.has_value());
        if (obstruction) CHECK_FALSE(v.feasible);
        // permutation invariance and monotone shrinking
        auto q = p;
        std::shuffle(q.balls.begin(), q.balls.end(), rng);
        CHECK(decide_packing(q).feasible == v.feasible);
        if (v.feasible) {
            q.balls[0] *= Rational(1, 2);
            CHECK(decide_packing(q).feasible);
        }
    }
}
