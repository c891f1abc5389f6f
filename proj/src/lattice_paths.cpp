#include "tde/lattice_paths.hpp"

#include <algorithm>
#include <numeric>

namespace tde {

namespace {

const Vec2 kDiagonal{Rational(1), Rational(-1)};  // theta = 3pi/4

std::int64_t as_int(const Rational& r) { return r.numerator().get_si(); }

bool convex_direction(const Vec2& v) { return !(v.x.is_zero() && v.y.sign() > 0) && angle_class(v) != 3; }

std::int64_t lattice_length(const Vec2& e) { return std::gcd(as_int(e.x), as_int(e.y)); }

// Twice the area and the boundary lattice count of the polygon formed by the
// origin and the path.
std::pair<Rational, std::int64_t> region_data(const LatticePath& p) {
    const auto& v = p.vertices();
    Rational twice(0);
    std::int64_t boundary = as_int(p.y_extent()) + as_int(p.x_extent());
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        twice += cross(v[i], v[i + 1]);
        boundary += lattice_length(v[i + 1] - v[i]);
    }
    return {twice.abs(), boundary};
}

std::int64_t closed_count(const LatticePath& p) {
    auto [twice, boundary] = region_data(p);
    return (as_int(twice) + boundary) / 2 + 1;  // Pick
}

}  // namespace

std::string path_violation(PathKind kind, const std::vector<Point2>& v) {
    if (v.empty()) return "a path needs at least one vertex";
    for (const auto& p : v) {
        if (!p.x.is_integer() || !p.y.is_integer()) return "vertices must be lattice points";
        if (p.x.sign() < 0 || p.y.sign() < 0) return "vertices must lie in the first quadrant";
    }
    if (!v.front().x.is_zero()) return "a path starts on the y-axis";
    if (!v.back().y.is_zero()) return "a path ends on the x-axis";
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        Vec2 e = v[i + 1] - v[i];
        if (e.x.is_zero() && e.y.is_zero()) return "repeated vertex";
        if (kind == PathKind::Convex) {
            if (!convex_direction(e)) return "convex path edge outside (0, 3pi/2)";
            if (i > 0 && angle_less(e, v[i] - v[i - 1])) return "convex path edge angles decrease";
        } else {
            if (e.x.sign() <= 0 || e.y.sign() >= 0) return "concave path edge outside (pi/2, pi)";
            if (i > 0 && cross(v[i] - v[i - 1], e).sign() < 0) return "concave path edge angles increase";
        }
    }
    return {};
}

LatticePath::LatticePath(PathKind kind, std::vector<Point2> vertices) : kind_(kind), v_(std::move(vertices)) {
    if (auto why = path_violation(kind_, v_); !why.empty()) throw InvalidPath(why);
}

std::vector<Vec2> LatticePath::edges() const {
    std::vector<Vec2> out;
    for (std::size_t i = 0; i + 1 < v_.size(); ++i) out.push_back(v_[i + 1] - v_[i]);
    return out;
}

Rational ell_convex(const ToricDomainSpec& omega, const LatticePath& path) {
    if (omega.kind() != DomainKind::Convex || path.kind() != PathKind::Convex)
        throw std::invalid_argument("ell_convex needs a convex domain and a convex path");
    auto poly = omega.closed_vertices();
    Rational total(0);
    for (const auto& e : path.edges()) total += support_max(poly, e);
    return total;
}

Rational ell_concave(const ToricDomainSpec& omega, const LatticePath& path) {
    if (omega.kind() != DomainKind::Concave || path.kind() != PathKind::Concave)
        throw std::invalid_argument("ell_concave needs a concave domain and a concave path");
    Rational total(0);
    for (const auto& e : path.edges()) total += support_min(omega.boundary(), e);
    return total;
}

std::int64_t count_convex(const LatticePath& path) {
    if (path.kind() != PathKind::Convex) throw std::invalid_argument("count_convex needs a convex path");
    return closed_count(path);
}

std::int64_t count_concave(const LatticePath& path) {
    if (path.kind() != PathKind::Concave) throw std::invalid_argument("count_concave needs a concave path");
    std::int64_t on_path = 1;
    for (const auto& e : path.edges()) on_path += lattice_length(e);
    return closed_count(path) - on_path;
}

PathSplit split_path(const LatticePath& path) {
    if (path.kind() != PathKind::Convex) throw std::invalid_argument("split_path needs a convex path");
    const auto& v = path.vertices();
    std::size_t j1 = 0;  // end of the part below 3pi/4
    while (j1 + 1 < v.size() && angle_less(v[j1 + 1] - v[j1], kDiagonal)) ++j1;
    std::size_t j2 = j1;  // end of the diagonal part
    while (j2 + 1 < v.size() && same_angle(v[j2 + 1] - v[j2], kDiagonal)) ++j2;
    const Rational a = v[j1].x + v[j1].y;

    using Matrix = AffineUnimodularMap::Matrix;
    AffineUnimodularMap to_left(Matrix{{{-1, -1}, {1, 0}}}, {a, Rational(0)});
    AffineUnimodularMap to_right(Matrix{{{0, 1}, {-1, -1}}}, {Rational(0), a});
    std::vector<Point2> left, right;
    for (std::size_t i = 0; i <= j1; ++i) left.push_back(to_left.apply(v[i]));
    for (std::size_t i = j2; i < v.size(); ++i) right.push_back(to_right.apply(v[i]));
    std::reverse(left.begin(), left.end());
    std::reverse(right.begin(), right.end());

    PathSplit out;
    out.a = as_int(a);
    out.left = LatticePath::concave(std::move(left));
    out.right = LatticePath::concave(std::move(right));
    if (a.sign() > 0) out.middle = LatticePath::convex({{Rational(0), a}, {a, Rational(0)}});
    return out;
}

namespace {

struct Direction {
    std::int64_t dx, dy;
    std::int64_t support;  // scaled by the common denominator
};

class Search {
public:
    Search(std::vector<Direction> dirs, std::int64_t k, std::int64_t x_max, std::int64_t y_max,
           std::int64_t down_cost, std::int64_t best, std::uint64_t budget)
        : dirs_(std::move(dirs)), target_(k + 1), x_max_(x_max), y_max_(y_max), down_cost_(down_cost),
          best_(best), budget_(budget) {}

    void run() {
        for (std::int64_t y0 = 0; y0 <= y_max_ && y0 + 1 <= target_; ++y0) {
            verts_ = {{0, y0}};
            visit(0, y0, 0, 0, y0, 0);
        }
    }

    bool found() const { return found_; }
    std::int64_t best() const { return best_; }
    const std::vector<std::pair<std::int64_t, std::int64_t>>& witness() const { return witness_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    // twice_area: |shoelace| of origin, (0, y0), prefix; lattice: y0 plus the
    // lattice lengths of the prefix edges.
    void visit(std::int64_t x, std::int64_t y, std::int64_t ell, std::int64_t twice_area, std::int64_t lattice,
               std::size_t next) {
        if (++nodes_ > budget_) throw ResourceLimit("lattice path search exceeded its node budget");
        if (y == 0 && count(x, y, twice_area, lattice) == target_) consider(ell);
        for (std::size_t j = next; j < dirs_.size(); ++j) {
            const Direction& d = dirs_[j];
            for (std::int64_t m = 1;; ++m) {
                std::int64_t nx = x + m * d.dx, ny = y + m * d.dy;
                if (nx < 0 || ny < 0 || nx > x_max_ || ny > y_max_) break;
                std::int64_t nell = ell + m * d.support;
                if (nell > best_ || nell + ny * down_cost_ > best_) break;
                // Path runs clockwise around the region, so each step adds -cross.
                std::int64_t ntwice = twice_area - (x * ny - y * nx);
                std::int64_t nlat = lattice + m;
                if (count(nx, ny, ntwice, nlat) > target_) break;
                verts_.push_back({nx, ny});
                visit(nx, ny, nell, ntwice, nlat, j + 1);
                verts_.pop_back();
            }
        }
    }

    static std::int64_t count(std::int64_t x, std::int64_t y, std::int64_t twice_area, std::int64_t lattice) {
        std::int64_t b = lattice + std::gcd(x, y);
        return (twice_area + b) / 2 + 1;
    }

    void consider(std::int64_t ell) {
        if (!found_ || ell < best_ || (ell == best_ && verts_ < witness_)) {
            found_ = true;
            best_ = ell;
            witness_ = verts_;
        }
    }

    std::vector<Direction> dirs_;
    std::int64_t target_, x_max_, y_max_, down_cost_;
    std::int64_t best_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool found_ = false;
    std::vector<std::pair<std::int64_t, std::int64_t>> verts_, witness_;
};

}  // namespace

OracleResult oracle_convex_cap(const ToricDomainSpec& omega, int k, std::uint64_t budget) {
    if (omega.kind() != DomainKind::Convex) throw std::invalid_argument("the path oracle needs a convex domain");
    if (k < 0) throw std::invalid_argument("capacity index must be nonnegative");
    if (k == 0) return {Rational(0), LatticePath::empty(PathKind::Convex), 0};

    const auto poly = omega.closed_vertices();
    mpz_class den = 1;
    for (const auto& p : poly) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.x.raw().get_den_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), p.y.raw().get_den_mpz_t());
    }
    const Rational D{mpq_class(den)};
    const Rational H = omega.y_extent(), W = omega.x_extent();
    Rational top(0), right(0);
    for (const auto& p : poly) {
        top = max(top, p.y);
        right = max(right, p.x);
    }
    // The axis paths (0,0)-(k,0) and (0,k)-(0,0) cost k top and k right.
    // Since (0,H) and (W,0) lie in the domain, every edge costs at least
    // dx H and -dy W, which confines paths within this bound to
    // [0, U/H] x [0, U/W].
    const Rational U = Rational(k) * min(top, right);
    const std::int64_t x_max = as_int((U / H).floor()), y_max = as_int((U / W).floor());

    const mpz_class limit = mpz_class(1) << 40;
    auto scaled = [&](const Rational& r) {
        Rational s = r * D;
        if (abs(s.numerator()) >= limit) throw ResourceLimit("domain coordinates too large for the path search");
        return as_int(s);
    };

    std::vector<Direction> dirs;
    for (std::int64_t dx = -x_max; dx <= x_max; ++dx)
        for (std::int64_t dy = -y_max; dy <= y_max; ++dy) {
            if (std::gcd(dx, dy) != 1) continue;
            Vec2 v{Rational(dx), Rational(dy)};
            if (!convex_direction(v)) continue;
            dirs.push_back({dx, dy, scaled(support_max(poly, v))});
        }
    std::sort(dirs.begin(), dirs.end(), [](const Direction& a, const Direction& b) {
        return angle_less({Rational(a.dx), Rational(a.dy)}, {Rational(b.dx), Rational(b.dy)});
    });

    Search search(std::move(dirs), k, x_max, y_max, scaled(W), scaled(U), budget);
    search.run();
    if (!search.found()) throw std::logic_error("path search found no path within the axis-path bound");
    std::vector<Point2> verts;
    for (auto [x, y] : search.witness()) verts.push_back({Rational(x), Rational(y)});
    return {Rational(search.best()) / D, LatticePath::convex(std::move(verts)), search.nodes()};
}

}  // namespace tde
