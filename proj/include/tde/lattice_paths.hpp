#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tde/errors.hpp"
#include "tde/toric_domain.hpp"

namespace tde {

enum class PathKind { Convex, Concave };

class InvalidPath : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Lattice path from (0, y) to (x, 0). Convex: edge angles nondecreasing in
// (0, 3pi/2). Concave: nonincreasing in (pi/2, pi). The single vertex (0, 0)
// is the empty path of either kind. Consecutive collinear edges are allowed.
class LatticePath {
public:
    // Throws InvalidPath.
    LatticePath(PathKind kind, std::vector<Point2> vertices);

    static LatticePath convex(std::vector<Point2> v) { return {PathKind::Convex, std::move(v)}; }
    static LatticePath concave(std::vector<Point2> v) { return {PathKind::Concave, std::move(v)}; }
    static LatticePath empty(PathKind kind) { return {kind, {{Rational(0), Rational(0)}}}; }

    PathKind kind() const { return kind_; }
    const std::vector<Point2>& vertices() const { return v_; }
    std::vector<Vec2> edges() const;
    bool is_empty() const { return v_.size() == 1; }
    const Rational& x_extent() const { return v_.back().x; }
    const Rational& y_extent() const { return v_.front().y; }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

private:
    PathKind kind_;
    std::vector<Point2> v_;
};

// Empty string when valid, otherwise the reason.
std::string path_violation(PathKind kind, const std::vector<Point2>& vertices);

// Sum over edges of the max of nu x p over the domain (convex path, convex domain).
Rational ell_convex(const ToricDomainSpec& omega, const LatticePath& path);
// Sum over edges of the min of nu x p over the upper boundary (concave path, concave domain).
Rational ell_concave(const ToricDomainSpec& omega, const LatticePath& path);

// Lattice points of the closed region bounded by a convex path and the axes.
std::int64_t count_convex(const LatticePath& path);
// Lattice points of that region for a concave path, excluding points on the path.
std::int64_t count_concave(const LatticePath& path);

// Convex path cut into edges with angle below, equal to, and above 3pi/4.
// The outer parts are carried to concave paths by p -> (a - x - y, x) and
// p -> (y, a - x - y) followed by reversal, where a = x + y along the
// diagonal part; the middle is extended to the full diagonal (0,a)-(a,0).
struct PathSplit {
    std::int64_t a = 0;
    LatticePath left = LatticePath::empty(PathKind::Concave);
    LatticePath middle = LatticePath::empty(PathKind::Convex);
    LatticePath right = LatticePath::empty(PathKind::Concave);
};

PathSplit split_path(const LatticePath& path);

struct OracleResult {
    Rational value;
    LatticePath witness = LatticePath::empty(PathKind::Convex);
    std::uint64_t nodes = 0;
};

constexpr std::uint64_t kDefaultOracleBudget = 200'000'000;

// min of ell_convex(omega, path) over convex lattice paths with
// count_convex(path) = k + 1, by exhaustive search. Ties go to the
// lexicographically smallest vertex list. Throws ResourceLimit when more
// than `budget` search nodes are visited.
OracleResult oracle_convex_cap(const ToricDomainSpec& omega, int k, std::uint64_t budget = kDefaultOracleBudget);

}  // namespace tde
