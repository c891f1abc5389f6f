#include "tde/geometry.hpp"

#include <algorithm>

namespace tde {

Rational cross(const Vec2& v, const Vec2& w) { return v.x * w.y - v.y * w.x; }

// 0: theta in [0, pi/2), 1: [pi/2, pi), 2: [pi, 3pi/2), 3: [3pi/2, 2pi)
int angle_class(const Vec2& v) {
    int sx = v.x.sign();
    int sy = v.y.sign();
    if (sx == 0 && sy == 0) throw GeometryError("angle of the zero vector");
    if (sx >= 0 && sy > 0) return 0;
    if (sx > 0 && sy <= 0) return 1;
    if (sx <= 0 && sy < 0) return 2;
    return 3;
}

bool angle_less(const Vec2& u, const Vec2& w) {
    int cu = angle_class(u);
    int cw = angle_class(w);
    if (cu != cw) return cu < cw;
    return cross(u, w).sign() < 0;
}

bool same_angle(const Vec2& u, const Vec2& w) {
    return angle_class(u) == angle_class(w) && cross(u, w).is_zero();
}

AffineUnimodularMap::AffineUnimodularMap()
    : m_{{{1, 0}, {0, 1}}}, t_{Rational(0), Rational(0)} {}

AffineUnimodularMap::AffineUnimodularMap(Matrix m, Vec2 translation) : m_(m), t_(std::move(translation)) {
    std::int64_t d = det();
    if (d != 1 && d != -1) throw GeometryError("affine map is not unimodular");
}

Vec2 AffineUnimodularMap::apply_linear(const Vec2& v) const {
    return {Rational(m_[0][0]) * v.x + Rational(m_[0][1]) * v.y,
            Rational(m_[1][0]) * v.x + Rational(m_[1][1]) * v.y};
}

Point2 AffineUnimodularMap::apply(const Point2& p) const { return apply_linear(p) + t_; }

AffineUnimodularMap AffineUnimodularMap::inverse() const {
    std::int64_t d = det();
    Matrix inv{{{m_[1][1] * d, -m_[0][1] * d}, {-m_[1][0] * d, m_[0][0] * d}}};
    AffineUnimodularMap lin = linear(inv);
    Vec2 t = lin.apply_linear(t_);
    return {inv, {-t.x, -t.y}};
}

AffineUnimodularMap AffineUnimodularMap::then(const AffineUnimodularMap& next) const {
    const Matrix& a = next.m_;
    const Matrix& b = m_;
    Matrix m{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return {m, next.apply(t_)};
}

Rational signed_area(std::span<const Point2> vertices) {
    Rational twice(0);
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) twice += cross(vertices[i], vertices[(i + 1) % n]);
    return twice / Rational(2);
}

bool on_segment(const Point2& a, const Point2& b, const Point2& p) {
    if (!cross(b - a, p - a).is_zero()) return false;
    return min(a.x, b.x) <= p.x && p.x <= max(a.x, b.x) && min(a.y, b.y) <= p.y && p.y <= max(a.y, b.y);
}

namespace {

int orient(const Point2& a, const Point2& b, const Point2& c) { return cross(b - a, c - a).sign(); }

bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

std::vector<Point2> drop_repeats(std::span<const Point2> in) {
    std::vector<Point2> out;
    for (const auto& p : in)
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

}  // namespace

bool is_simple_polygon(std::span<const Point2> raw) {
    auto v = drop_repeats(raw);
    const std::size_t n = v.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Point2& c = v[j];
            const Point2& d = v[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (!adjacent) {
                if (segments_intersect(a, b, c, d)) return false;
                continue;
            }
            // Adjacent edges share one endpoint; they must not fold back onto each other.
            const Point2& shared = (j == i + 1) ? b : a;
            const Point2& p = (j == i + 1) ? a : b;
            const Point2& q = (j == i + 1) ? d : c;
            if (cross(p - shared, q - shared).is_zero() && ((p - shared).x * (q - shared).x + (p - shared).y * (q - shared).y).sign() > 0)
                return false;
        }
    }
    return !signed_area(v).is_zero();
}

Rational polygon_area(std::span<const Point2> vertices) {
    if (!is_simple_polygon(vertices)) throw GeometryError("polygon is self-intersecting or degenerate");
    return signed_area(drop_repeats(vertices)).abs();
}

Rational support_max(std::span<const Point2> vertices, const Vec2& v) {
    if (vertices.empty()) throw GeometryError("support of an empty vertex list");
    Rational best = cross(v, vertices.front());
    for (const auto& p : vertices.subspan(1)) best = max(best, cross(v, p));
    return best;
}

Rational support_min(std::span<const Point2> vertices, const Vec2& v) {
    if (vertices.empty()) throw GeometryError("support of an empty vertex list");
    Rational best = cross(v, vertices.front());
    for (const auto& p : vertices.subspan(1)) best = min(best, cross(v, p));
    return best;
}

std::vector<Point2> collapse_polyline(std::vector<Point2> pts) {
    std::vector<Point2> out;
    for (auto& p : pts) {
        if (!out.empty() && out.back() == p) continue;
        while (out.size() >= 2) {
            const Point2& a = out[out.size() - 2];
            const Point2& b = out.back();
            Vec2 ab = b - a, bp = p - b;
            // Drop b only when it lies strictly between a and p on a straight run.
            if (cross(ab, bp).is_zero() && (ab.x * bp.x + ab.y * bp.y).sign() > 0)
                out.pop_back();
            else
                break;
        }
        out.push_back(std::move(p));
    }
    return out;
}

Polygon::Polygon(std::vector<Point2> vertices) {
    auto v = drop_repeats(vertices);
    if (!is_simple_polygon(v)) throw GeometryError("polygon is self-intersecting or degenerate");
    if (signed_area(v).sign() < 0) std::reverse(v.begin(), v.end());
    // Collapse collinear vertices cyclically.
    bool changed = true;
    while (changed && v.size() > 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Point2& a = v[(i + v.size() - 1) % v.size()];
            const Point2& b = v[i];
            const Point2& c = v[(i + 1) % v.size()];
            if (cross(b - a, c - b).is_zero()) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    auto lowest = std::min_element(v.begin(), v.end(), [](const Point2& a, const Point2& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    std::rotate(v.begin(), lowest, v.end());
    v_ = std::move(v);
}

bool Polygon::on_boundary(const Point2& p) const {
    for (std::size_t i = 0; i < v_.size(); ++i)
        if (on_segment(v_[i], v_[(i + 1) % v_.size()], p)) return true;
    return false;
}

bool Polygon::contains(const Point2& p) const {
    if (on_boundary(p)) return true;
    bool inside = false;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        const Point2& a = v_[i];
        const Point2& b = v_[(i + 1) % v_.size()];
        if ((a.y > p.y) != (b.y > p.y)) {
            Rational xi = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < xi) inside = !inside;
        }
    }
    return inside;
}

bool Polygon::contains(const Polygon& inner) const {
    const auto& w = inner.vertices();
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Point2& a = w[i];
        const Point2& b = w[(i + 1) % w.size()];
        Vec2 ab = b - a;
        std::vector<Rational> params{Rational(0), Rational(1)};
        for (std::size_t j = 0; j < v_.size(); ++j) {
            const Point2& c = v_[j];
            const Point2& d = v_[(j + 1) % v_.size()];
            Vec2 cd = d - c;
            Rational denom = cross(ab, cd);
            if (!denom.is_zero()) {
                Rational t = cross(c - a, cd) / denom;
                Rational u = cross(c - a, ab) / denom;
                if (t.sign() >= 0 && t <= Rational(1) && u.sign() >= 0 && u <= Rational(1)) params.push_back(t);
            } else if (cross(c - a, ab).is_zero()) {
                Rational len2 = ab.x * ab.x + ab.y * ab.y;
                for (const Point2* q : {&c, &d}) {
                    Vec2 aq = *q - a;
                    Rational t = (aq.x * ab.x + aq.y * ab.y) / len2;
                    if (t.sign() >= 0 && t <= Rational(1)) params.push_back(t);
                }
            }
        }
        std::sort(params.begin(), params.end());
        params.erase(std::unique(params.begin(), params.end()), params.end());
        for (std::size_t k = 0; k < params.size(); ++k) {
            if (!contains(a + params[k] * ab)) return false;
            if (k + 1 < params.size()) {
                Rational mid = (params[k] + params[k + 1]) / Rational(2);
                if (!contains(a + mid * ab)) return false;
            }
        }
    }
    // The whole boundary of inner lies in this simply connected region.
    return true;
}

}  // namespace tde
