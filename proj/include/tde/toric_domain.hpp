#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tde/geometry.hpp"

namespace tde {

enum class DomainKind { Concave, Convex };

std::string to_string(DomainKind kind);

enum class DomainViolation {
    TooFewVertices,
    NegativeCoordinate,
    AxisEndpoint,     // first vertex not on the y-axis above 0, or last not on the x-axis right of 0
    AxisInterior,     // an intermediate vertex lies on a coordinate axis
    NonConcave,       // concave boundary whose slopes decrease somewhere
    NonConvex,        // convex boundary turning the wrong way
    EdgeDirection,    // an edge points outside the admissible direction range
    NonPositiveScale,
};

std::string to_string(DomainViolation v);

struct ValidationReport {
    bool ok = true;
    DomainViolation violation = DomainViolation::TooFewVertices;
    std::string message;

    explicit operator bool() const { return ok; }
};

class InvalidDomain : public std::invalid_argument {
public:
    InvalidDomain(DomainViolation v, const std::string& what) : std::invalid_argument(what), violation_(v) {}
    DomainViolation violation() const { return violation_; }

private:
    DomainViolation violation_;
};

// Checks a raw upper boundary, listed from (0, y0) to (xn, 0), against the
// invariants of the given kind. Repeated and collinear vertices are tolerated.
ValidationReport validate(DomainKind kind, std::span<const Point2> boundary);

// Rational piecewise-linear concave or convex toric domain, stored by its
// upper boundary in canonical form (no repeated or collinear vertices).
//
// Concave: region under the graph of a convex decreasing function.
// Convex: convex region bounded by the axes and the boundary curve.
class ToricDomainSpec {
public:
    // Throws InvalidDomain.
    ToricDomainSpec(DomainKind kind, std::vector<Point2> boundary);

    static ToricDomainSpec concave(std::vector<Point2> boundary) { return {DomainKind::Concave, std::move(boundary)}; }
    static ToricDomainSpec convex(std::vector<Point2> boundary) { return {DomainKind::Convex, std::move(boundary)}; }
    // Triangle with vertices (0,0), (b,0), (0,b), as the given kind.
    static ToricDomainSpec ball(const Rational& b, DomainKind kind = DomainKind::Convex);
    // Triangle with vertices (0,0), (a,0), (0,b).
    static ToricDomainSpec ellipsoid(const Rational& a, const Rational& b, DomainKind kind = DomainKind::Concave);
    // Rectangle [0,a] x [0,b] (convex only).
    static ToricDomainSpec polydisk(const Rational& a, const Rational& b);

    DomainKind kind() const { return kind_; }
    const std::vector<Point2>& boundary() const { return boundary_; }
    // (0,0) followed by the boundary reversed: counterclockwise closed polygon.
    std::vector<Point2> closed_vertices() const;
    Polygon polygon() const { return Polygon(closed_vertices()); }

    Rational x_extent() const { return boundary_.back().x; }
    Rational y_extent() const { return boundary_.front().y; }

    friend bool operator==(const ToricDomainSpec&, const ToricDomainSpec&) = default;

private:
    DomainKind kind_;
    std::vector<Point2> boundary_;
};

inline ValidationReport validate(const ToricDomainSpec& spec) { return validate(spec.kind(), spec.boundary()); }

// Every vertex multiplied by lambda > 0. Throws InvalidDomain otherwise.
ToricDomainSpec scale(const ToricDomainSpec& spec, const Rational& lambda);

// True iff the closed region of inner is a subset of the closed region of outer.
bool contains(const ToricDomainSpec& outer, const ToricDomainSpec& inner);

Rational area(const ToricDomainSpec& spec);

// Same upper boundary reinterpreted as the other kind, if valid as such
// (triangles are both concave and convex).
std::optional<ToricDomainSpec> reinterpret(const ToricDomainSpec& spec, DomainKind kind);

}  // namespace tde
