#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "tde/toric_domain.hpp"

namespace tde::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

// p/q with 1 <= p <= max_num, 1 <= q <= max_den
inline Rational positive_rational(Rng& rng, std::int64_t max_num = 12, std::int64_t max_den = 6) {
    return Rational(uniform_int(rng, 1, max_num), uniform_int(rng, 1, max_den));
}

inline Rational any_rational(Rng& rng, std::int64_t max_num = 12, std::int64_t max_den = 6) {
    return Rational(uniform_int(rng, -max_num, max_num), uniform_int(rng, 1, max_den));
}

inline Vec2 primitive_direction(Rng& rng, std::int64_t box) {
    for (;;) {
        std::int64_t x = uniform_int(rng, -box, box), y = uniform_int(rng, -box, box);
        if ((x != 0 || y != 0) && std::gcd(x, y) == 1) return {Rational(x), Rational(y)};
    }
}

// Region under a convex decreasing graph: steepness strictly decreasing along the boundary.
inline ToricDomainSpec random_concave(Rng& rng, int max_edges = 5) {
    int n = static_cast<int>(uniform_int(rng, 1, max_edges));
    std::vector<Rational> steep;
    while (static_cast<int>(steep.size()) < n) {
        Rational s = positive_rational(rng, 8, 4);
        if (std::find(steep.begin(), steep.end(), s) == steep.end()) steep.push_back(s);
    }
    std::sort(steep.begin(), steep.end(), [](const Rational& a, const Rational& b) { return b < a; });
    std::vector<Vec2> edges;
    Rational drop(0);
    for (const auto& s : steep) {
        Rational dx = positive_rational(rng, 6, 3);
        edges.push_back({dx, -(s * dx)});
        drop += s * dx;
    }
    std::vector<Point2> b{{Rational(0), drop}};
    for (const auto& e : edges) b.push_back(b.back() + e);
    return ToricDomainSpec::concave(std::move(b));
}

// Convex region: edge directions sorted by angle in (0, 3pi/2), rejection-sampled
// until the endpoint and axis constraints hold.
inline ToricDomainSpec random_convex(Rng& rng, int max_edges = 5) {
    for (;;) {
        int n = static_cast<int>(uniform_int(rng, 1, max_edges));
        std::vector<Vec2> dirs;
        while (static_cast<int>(dirs.size()) < n) {
            Vec2 d = primitive_direction(rng, 3);
            bool admissible = !(d.x.is_zero() && d.y.sign() > 0) && angle_class(d) != 3;
            if (!admissible) continue;
            bool dup = std::any_of(dirs.begin(), dirs.end(), [&](const Vec2& e) { return same_angle(d, e); });
            if (!dup) dirs.push_back(d);
        }
        std::sort(dirs.begin(), dirs.end(), angle_less);
        std::vector<Vec2> edges;
        Vec2 total{Rational(0), Rational(0)};
        for (const auto& d : dirs) {
            edges.push_back(positive_rational(rng, 4, 3) * d);
            total = total + edges.back();
        }
        if (total.x.sign() <= 0 || total.y.sign() >= 0) continue;
        std::vector<Point2> b{{Rational(0), -total.y}};
        for (const auto& e : edges) b.push_back(b.back() + e);
        if (validate(DomainKind::Convex, b)) return ToricDomainSpec::convex(std::move(b));
    }
}

inline AffineUnimodularMap random_unimodular(Rng& rng) {
    AffineUnimodularMap m;
    int steps = static_cast<int>(uniform_int(rng, 1, 4));
    for (int i = 0; i < steps; ++i) {
        std::int64_t k = uniform_int(rng, -2, 2);
        AffineUnimodularMap::Matrix g = uniform_int(rng, 0, 1) ? AffineUnimodularMap::Matrix{{{1, k}, {0, 1}}}
                                                               : AffineUnimodularMap::Matrix{{{1, 0}, {k, 1}}};
        if (uniform_int(rng, 0, 3) == 0) g = {{{0, 1}, {1, 0}}};
        m = m.then(AffineUnimodularMap(g, {any_rational(rng), any_rational(rng)}));
    }
    return m;
}

}  // namespace tde::testing

#include "tde/lattice_paths.hpp"

namespace tde::testing {

// Random convex lattice path: sorted primitive directions with multiplicity,
// started at the height that brings it back to the x-axis.
inline LatticePath random_convex_path(Rng& rng, int max_edges = 5, std::int64_t box = 3) {
    for (;;) {
        int roll = static_cast<int>(uniform_int(rng, 0, 9));
        if (roll == 0) return LatticePath::empty(PathKind::Convex);
        if (roll == 1) return LatticePath::convex({{Rational(0), Rational(0)}, {Rational(uniform_int(rng, 1, 4)), Rational(0)}});
        if (roll == 2) return LatticePath::convex({{Rational(0), Rational(uniform_int(rng, 1, 4))}, {Rational(0), Rational(0)}});
        int n = static_cast<int>(uniform_int(rng, 1, max_edges));
        std::vector<Vec2> dirs;
        while (static_cast<int>(dirs.size()) < n) {
            Vec2 d = primitive_direction(rng, box);
            if ((d.x.is_zero() && d.y.sign() > 0) || angle_class(d) == 3) continue;
            if (std::none_of(dirs.begin(), dirs.end(), [&](const Vec2& e) { return same_angle(d, e); }))
                dirs.push_back(d);
        }
        std::sort(dirs.begin(), dirs.end(), angle_less);
        Vec2 total{Rational(0), Rational(0)};
        std::vector<Vec2> edges;
        for (const auto& d : dirs) {
            edges.push_back(Rational(uniform_int(rng, 1, 2)) * d);
            total = total + edges.back();
        }
        if (total.y.sign() > 0) continue;
        std::vector<Point2> v{{Rational(0), -total.y}};
        for (const auto& e : edges) v.push_back(v.back() + e);
        if (path_violation(PathKind::Convex, v).empty()) return LatticePath::convex(std::move(v));
    }
}

}  // namespace tde::testing
