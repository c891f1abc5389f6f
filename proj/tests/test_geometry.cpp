#include "doctest.h"

#include "generators.hpp"
#include "tde/geometry.hpp"

using namespace tde;

namespace {
Point2 P(Rational x, Rational y) { return {std::move(x), std::move(y)}; }
}  // namespace

TEST_CASE("cross") {
    CHECK(cross(P(1, 0), P(0, 1)) == 1);
    CHECK(cross(P(1, -1), P(1, 1)) == 2);
    CHECK(cross(P(Rational(3, 7), 5), P(Rational(3, 7), 5)) == 0);
}

TEST_CASE("cross is bilinear and antisymmetric") {
    testing::Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Vec2 u{testing::any_rational(rng), testing::any_rational(rng)};
        Vec2 v{testing::any_rational(rng), testing::any_rational(rng)};
        Vec2 w{testing::any_rational(rng), testing::any_rational(rng)};
        Rational s = testing::any_rational(rng);
        CHECK(cross(u, v) == -cross(v, u));
        CHECK(cross(u + w, v) == cross(u, v) + cross(w, v));
        CHECK(cross(s * u, v) == s * cross(u, v));
    }
}

TEST_CASE("polygon area") {
    std::vector<Point2> square{P(0, 0), P(1, 0), P(1, 1), P(0, 1)};
    CHECK(polygon_area(square) == 1);
    std::vector<Point2> tri{P(0, 0), P(2, 0), P(0, 2)};
    CHECK(polygon_area(tri) == 2);
    std::vector<Point2> omega{P(0, 0), P(Rational(7, 3), 0), P(Rational(4, 3), Rational(2, 3)),
                              P(Rational(2, 3), Rational(4, 3)), P(0, Rational(10, 3))};
    CHECK(polygon_area(omega) == Rational(23, 9));
    // clockwise accepted, bow-tie rejected
    std::vector<Point2> cw(square.rbegin(), square.rend());
    CHECK(polygon_area(cw) == 1);
    std::vector<Point2> bowtie{P(0, 0), P(1, 1), P(1, 0), P(0, 1)};
    CHECK_THROWS_AS(polygon_area(bowtie), GeometryError);
    std::vector<Point2> flat{P(0, 0), P(1, 0), P(2, 0)};
    CHECK_THROWS_AS(polygon_area(flat), GeometryError);
}

TEST_CASE("support_max") {
    std::vector<Point2> square{P(0, 0), P(1, 0), P(1, 1), P(0, 1)};
    CHECK(support_max(square, P(1, -1)) == 2);
    std::vector<Point2> tri{P(0, 0), P(1, 0), P(0, 1)};
    CHECK(support_max(tri, P(1, -1)) == 1);
    CHECK(support_max(tri, P(0, 0)) == 0);
    CHECK_THROWS_AS(support_max(std::vector<Point2>{}, P(1, 0)), GeometryError);
}

TEST_CASE("support_max homogeneity and translation") {
    testing::Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        std::vector<Point2> pts;
        for (int k = 0; k < 5; ++k) pts.push_back({testing::any_rational(rng), testing::any_rational(rng)});
        Vec2 v{testing::any_rational(rng), testing::any_rational(rng)};
        Vec2 t{testing::any_rational(rng), testing::any_rational(rng)};
        Rational s = testing::positive_rational(rng);
        CHECK(support_max(pts, s * v) == s * support_max(pts, v));
        std::vector<Point2> moved;
        for (const auto& p : pts) moved.push_back(p + t);
        CHECK(support_max(moved, v) == support_max(pts, v) + cross(v, t));
    }
}

TEST_CASE("apply_map") {
    AffineUnimodularMap id;
    CHECK(apply_map(id, P(3, 4)) == P(3, 4));
    AffineUnimodularMap m = AffineUnimodularMap::linear({{{-1, -1}, {1, 0}}});
    CHECK(apply_map(m, P(1, -3)) == P(2, 1));
    AffineUnimodularMap shear = AffineUnimodularMap::linear({{{1, 0}, {1, 1}}});
    CHECK(apply_map(shear, P(2, -2)) == P(2, 0));
    CHECK_THROWS_AS(AffineUnimodularMap({{{2, 0}, {0, 1}}}, P(0, 0)), GeometryError);
}

TEST_CASE("affine maps compose and invert") {
    testing::Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        auto f = testing::random_unimodular(rng);
        auto g = testing::random_unimodular(rng);
        Point2 p{testing::any_rational(rng), testing::any_rational(rng)};
        CHECK(f.inverse().apply(f.apply(p)) == p);
        CHECK(f.then(g).apply(p) == g.apply(f.apply(p)));
    }
}

TEST_CASE("area is invariant under unimodular maps") {
    testing::Rng rng(14);
    for (int i = 0; i < 100; ++i) {
        auto dom = i % 2 ? testing::random_concave(rng) : testing::random_convex(rng);
        auto poly = dom.closed_vertices();
        auto f = testing::random_unimodular(rng);
        std::vector<Point2> image;
        for (const auto& p : poly) image.push_back(f.apply(p));
        CHECK(polygon_area(image) == polygon_area(poly));
    }
}

TEST_CASE("polygon canonical form") {
    Polygon a({P(1, 1), P(0, 1), P(0, 0), P(Rational(1, 2), 0), P(1, 0)});
    CHECK(a.vertices() == std::vector<Point2>{P(0, 0), P(1, 0), P(1, 1), P(0, 1)});
    CHECK(a.area() == 1);
    Polygon b({P(0, 1), P(1, 1), P(1, 0), P(0, 0)});
    CHECK(a == b);
}

TEST_CASE("polygon containment") {
    Polygon square({P(0, 0), P(1, 0), P(1, 1), P(0, 1)});
    Polygon tri({P(0, 0), P(1, 0), P(0, 1)});
    Polygon big({P(0, 0), P(2, 0), P(0, 2)});
    CHECK(square.contains(tri));
    CHECK_FALSE(tri.contains(square));
    CHECK(big.contains(square));
    CHECK(square.contains(square));
    CHECK(square.contains(P(1, Rational(1, 2))));
    CHECK_FALSE(square.contains(P(Rational(3, 2), Rational(1, 2))));
    // non-convex outer: inner vertices inside but an edge crosses the notch
    Polygon notch({P(0, 0), P(4, 0), P(4, 4), P(2, 1), P(0, 4)});
    Polygon bar({P(1, 2), P(3, 2), P(3, 3), P(1, 3)});
    CHECK_FALSE(notch.contains(bar));
}
