#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "tde/rational.hpp"

namespace tde {

// Coordinates are in symplectic-area units (moment map image).
struct Vec2 {
    Rational x;
    Rational y;

    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(const Rational& s, const Vec2& v) { return {s * v.x, s * v.y}; }
};

using Point2 = Vec2;

// v.x * w.y - v.y * w.x
Rational cross(const Vec2& v, const Vec2& w);

// Exact comparison of the clockwise angle from the positive y-axis: theta(v)
// is the unique angle in [0, 2pi) with v a positive multiple of
// (sin theta, cos theta). Both vectors must be nonzero.
int angle_class(const Vec2& v);
bool angle_less(const Vec2& u, const Vec2& w);
bool same_angle(const Vec2& u, const Vec2& w);

// Integer 2x2 matrix with determinant +-1 together with a rational translation.
// Acts by p -> matrix * p + translation.
class AffineUnimodularMap {
public:
    using Matrix = std::array<std::array<std::int64_t, 2>, 2>;

    AffineUnimodularMap();  // identity
    AffineUnimodularMap(Matrix m, Vec2 translation);

    static AffineUnimodularMap linear(Matrix m) { return {m, {Rational(0), Rational(0)}}; }

    const Matrix& matrix() const { return m_; }
    const Vec2& translation() const { return t_; }
    std::int64_t det() const { return m_[0][0] * m_[1][1] - m_[0][1] * m_[1][0]; }

    Point2 apply(const Point2& p) const;
    Vec2 apply_linear(const Vec2& v) const;
    AffineUnimodularMap inverse() const;
    // (a.then(b))(p) == b(a(p))
    AffineUnimodularMap then(const AffineUnimodularMap& next) const;

    friend bool operator==(const AffineUnimodularMap&, const AffineUnimodularMap&) = default;

private:
    Matrix m_;
    Vec2 t_;
};

inline Point2 apply_map(const AffineUnimodularMap& m, const Point2& p) { return m.apply(p); }

class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Signed shoelace area (positive for counterclockwise order). No validation.
Rational signed_area(std::span<const Point2> vertices);

// Exact area of a simple polygon. Either orientation is accepted; repeated
// consecutive vertices are ignored. Throws GeometryError on a self-intersecting
// or degenerate polygon.
Rational polygon_area(std::span<const Point2> vertices);

bool is_simple_polygon(std::span<const Point2> vertices);

// max over vertices of cross(v, p). Throws GeometryError on an empty list.
Rational support_max(std::span<const Point2> vertices, const Vec2& v);
// min over vertices of cross(v, p). Throws GeometryError on an empty list.
Rational support_min(std::span<const Point2> vertices, const Vec2& v);

// Removes repeated consecutive points and middle points of collinear runs in
// an open polyline. Endpoints are kept.
std::vector<Point2> collapse_polyline(std::vector<Point2> pts);

// Closed polygon, counterclockwise, collinear and repeated vertices collapsed.
class Polygon {
public:
    // Throws GeometryError if fewer than three non-collinear vertices remain
    // or if the polygon is not simple.
    explicit Polygon(std::vector<Point2> vertices);

    const std::vector<Point2>& vertices() const { return v_; }
    Rational area() const { return signed_area(v_); }

    // Closed-set membership (boundary included).
    bool contains(const Point2& p) const;
    bool on_boundary(const Point2& p) const;
    // True iff every point of `inner` lies in this closed polygon.
    bool contains(const Polygon& inner) const;

    friend bool operator==(const Polygon&, const Polygon&) = default;

private:
    std::vector<Point2> v_;
};

bool on_segment(const Point2& a, const Point2& b, const Point2& p);

}  // namespace tde
