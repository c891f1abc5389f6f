#include "tde/toric_domain.hpp"

namespace tde {

std::string to_string(DomainKind kind) { return kind == DomainKind::Concave ? "concave" : "convex"; }

std::string to_string(DomainViolation v) {
    switch (v) {
        case DomainViolation::TooFewVertices: return "too-few-vertices";
        case DomainViolation::NegativeCoordinate: return "negative-coordinate";
        case DomainViolation::AxisEndpoint: return "axis-endpoint";
        case DomainViolation::AxisInterior: return "axis-interior";
        case DomainViolation::NonConcave: return "non-concave";
        case DomainViolation::NonConvex: return "non-convex";
        case DomainViolation::EdgeDirection: return "edge-direction";
        case DomainViolation::NonPositiveScale: return "non-positive-scale";
    }
    return "unknown";
}

namespace {

ValidationReport fail(DomainViolation v, std::string msg) { return {false, v, std::move(msg)}; }

std::string pt(const Point2& p) { return "(" + p.x.str() + ", " + p.y.str() + ")"; }

// theta strictly inside (0, 3pi/2)
bool convex_direction(const Vec2& v) {
    if (v.x.is_zero() && v.y.sign() > 0) return false;
    return angle_class(v) != 3;
}

// theta strictly inside (pi/2, pi)
bool concave_direction(const Vec2& v) { return v.x.sign() > 0 && v.y.sign() < 0; }

}  // namespace

ValidationReport validate(DomainKind kind, std::span<const Point2> raw) {
    for (const auto& p : raw)
        if (p.x.sign() < 0 || p.y.sign() < 0) return fail(DomainViolation::NegativeCoordinate, "negative coordinate at " + pt(p));
    auto b = collapse_polyline(std::vector<Point2>(raw.begin(), raw.end()));
    if (b.size() < 2) return fail(DomainViolation::TooFewVertices, "boundary needs at least two distinct vertices");
    const Point2& first = b.front();
    const Point2& last = b.back();
    if (!first.x.is_zero() || first.y.sign() <= 0)
        return fail(DomainViolation::AxisEndpoint, "first vertex " + pt(first) + " must be (0, y) with y > 0");
    if (!last.y.is_zero() || last.x.sign() <= 0)
        return fail(DomainViolation::AxisEndpoint, "last vertex " + pt(last) + " must be (x, 0) with x > 0");
    for (std::size_t i = 1; i + 1 < b.size(); ++i)
        if (b[i].x.is_zero() || b[i].y.is_zero())
            return fail(DomainViolation::AxisInterior, "intermediate vertex " + pt(b[i]) + " lies on an axis");

    for (std::size_t i = 1; i + 1 < b.size(); ++i) {
        Rational turn = cross(b[i] - b[i - 1], b[i + 1] - b[i]);
        if (kind == DomainKind::Concave && turn.sign() < 0)
            return fail(DomainViolation::NonConcave, "boundary turns right at " + pt(b[i]));
        if (kind == DomainKind::Convex && turn.sign() > 0)
            return fail(DomainViolation::NonConvex, "boundary turns left at " + pt(b[i]));
    }
    for (std::size_t i = 0; i + 1 < b.size(); ++i) {
        Vec2 e = b[i + 1] - b[i];
        bool ok = kind == DomainKind::Concave ? concave_direction(e) : convex_direction(e);
        if (!ok) return fail(DomainViolation::EdgeDirection, "edge from " + pt(b[i]) + " has an inadmissible direction");
        if (kind == DomainKind::Convex && i > 0 && !angle_less(b[i] - b[i - 1], e))
            return fail(DomainViolation::NonConvex, "edge angles do not increase at " + pt(b[i]));
    }
    return {};
}

ToricDomainSpec::ToricDomainSpec(DomainKind kind, std::vector<Point2> boundary) : kind_(kind) {
    auto report = validate(kind, boundary);
    if (!report) throw InvalidDomain(report.violation, to_string(kind) + " domain: " + report.message);
    boundary_ = collapse_polyline(std::move(boundary));
}

ToricDomainSpec ToricDomainSpec::ball(const Rational& b, DomainKind kind) { return ellipsoid(b, b, kind); }

ToricDomainSpec ToricDomainSpec::ellipsoid(const Rational& a, const Rational& b, DomainKind kind) {
    return {kind, {{Rational(0), b}, {a, Rational(0)}}};
}

ToricDomainSpec ToricDomainSpec::polydisk(const Rational& a, const Rational& b) {
    return convex({{Rational(0), b}, {a, b}, {a, Rational(0)}});
}

std::vector<Point2> ToricDomainSpec::closed_vertices() const {
    std::vector<Point2> out{{Rational(0), Rational(0)}};
    out.insert(out.end(), boundary_.rbegin(), boundary_.rend());
    return out;
}

ToricDomainSpec scale(const ToricDomainSpec& spec, const Rational& lambda) {
    if (lambda.sign() <= 0) throw InvalidDomain(DomainViolation::NonPositiveScale, "scale factor must be positive, got " + lambda.str());
    std::vector<Point2> b;
    b.reserve(spec.boundary().size());
    for (const auto& p : spec.boundary()) b.push_back(lambda * p);
    return {spec.kind(), std::move(b)};
}

bool contains(const ToricDomainSpec& outer, const ToricDomainSpec& inner) {
    return outer.polygon().contains(inner.polygon());
}

Rational area(const ToricDomainSpec& spec) { return spec.polygon().area(); }

std::optional<ToricDomainSpec> reinterpret(const ToricDomainSpec& spec, DomainKind kind) {
    if (!validate(kind, spec.boundary())) return std::nullopt;
    return ToricDomainSpec(kind, spec.boundary());
}

}  // namespace tde
