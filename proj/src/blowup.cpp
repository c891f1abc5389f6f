#include "tde/blowup.hpp"

#include <algorithm>
#include <functional>

namespace tde {

namespace {

constexpr int kNone = -1;
constexpr int kLine = -2;

std::int64_t at(const std::vector<std::int64_t>& v, std::size_t i) { return i < v.size() ? v[i] : 0; }

void term(std::string& out, std::int64_t c, const std::string& name) {
    if (c == 0) return;
    if (out.empty())
        out += c < 0 ? "-" : "";
    else
        out += c < 0 ? " - " : " + ";
    std::int64_t m = c < 0 ? -c : c;
    if (m != 1) out += std::to_string(m) + " ";
    out += name;
}

void rterm(std::string& out, const Rational& c, const std::string& name) {
    if (c.is_zero()) return;
    if (out.empty())
        out += c.sign() < 0 ? "-" : "";
    else
        out += c.sign() < 0 ? " - " : " + ";
    Rational m = c.abs();
    if (m != Rational(1)) out += m.str() + " ";
    out += name;
}

struct Axes {
    int y = kNone;
    int x = kNone;
};

// Whose triangle corner lies on which sphere.
std::vector<std::vector<int>> cutters(const DecompositionTree& tree, std::vector<int>& line_cutters) {
    const int n = static_cast<int>(tree.nodes.size());
    std::vector<Axes> axes(n);
    std::vector<std::vector<int>> cuts(n);
    std::function<void(int)> walk = [&](int i) {
        const auto& node = tree.nodes[i];
        if (!tree.is_convex_root(i)) {
            for (int a : {axes[i].y, axes[i].x}) {
                if (a == kLine)
                    line_cutters.push_back(i);
                else if (a != kNone)
                    cuts[a].push_back(i);
            }
        }
        if (tree.is_convex_root(i)) {
            if (node.left >= 0) axes[node.left] = {kLine, kNone};
            if (node.right >= 0) axes[node.right] = {kNone, kLine};
        } else {
            if (node.left >= 0) axes[node.left] = {axes[i].y, i};
            if (node.right >= 0) axes[node.right] = {i, axes[i].x};
        }
        if (node.left >= 0) walk(node.left);
        if (node.right >= 0) walk(node.right);
    };
    if (n > 0) walk(0);
    return cuts;
}

void inorder(const DecompositionTree& tree, int i, std::vector<int>& out) {
    if (i < 0) return;
    inorder(tree, tree.nodes[i].left, out);
    out.push_back(i);
    inorder(tree, tree.nodes[i].right, out);
}

SphereChain assemble(const DecompositionTree& tree, const std::vector<int>& order, bool hat) {
    std::vector<int> line_cuts;
    auto cuts = cutters(tree, line_cuts);
    std::vector<int> label(tree.nodes.size(), -1);
    std::size_t count = 0;
    for (int i : order)
        if (i >= 0) label[i] = static_cast<int>(count++);
    auto blank = [&] {
        HomologyClass c;
        (hat ? c.Ehat : c.E).assign(count, 0);
        return c;
    };
    SphereChain chain;
    for (int i : order) {
        HomologyClass c = blank();
        auto& v = hat ? c.Ehat : c.E;
        if (i < 0) {
            c.L = 1;
            for (int j : line_cuts) v[label[j]] -= 1;
        } else {
            v[label[i]] += 1;
            for (int j : cuts[i]) v[label[j]] -= 1;
        }
        chain.classes.push_back(std::move(c));
        chain.node.push_back(i < 0 ? -1 : i);
    }
    return chain;
}

}  // namespace

std::string HomologyClass::str() const {
    std::string out;
    term(out, L, "L");
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < E.size(); ++i)
            if ((E[i] > 0) == (pass == 0)) term(out, E[i], "E_" + std::to_string(i + 1));
        for (std::size_t i = 0; i < Ehat.size(); ++i)
            if ((Ehat[i] > 0) == (pass == 0)) term(out, Ehat[i], "Ehat_" + std::to_string(i + 1));
    }
    return out.empty() ? "0" : out;
}

bool operator==(const HomologyClass& a, const HomologyClass& b) {
    if (a.L != b.L) return false;
    for (std::size_t i = 0; i < std::max(a.E.size(), b.E.size()); ++i)
        if (at(a.E, i) != at(b.E, i)) return false;
    for (std::size_t i = 0; i < std::max(a.Ehat.size(), b.Ehat.size()); ++i)
        if (at(a.Ehat, i) != at(b.Ehat, i)) return false;
    return true;
}

std::int64_t intersection(const HomologyClass& a, const HomologyClass& b) {
    std::int64_t s = a.L * b.L;
    for (std::size_t i = 0; i < std::min(a.E.size(), b.E.size()); ++i) s -= a.E[i] * b.E[i];
    for (std::size_t i = 0; i < std::min(a.Ehat.size(), b.Ehat.size()); ++i) s -= a.Ehat[i] * b.Ehat[i];
    return s;
}

std::int64_t chern(const HomologyClass& a) {
    std::int64_t s = 3 * a.L;
    for (auto c : a.E) s += c;
    for (auto c : a.Ehat) s += c;
    return s;
}

int SphereChain::node_of_label(int label) const {
    int seen = 0;
    for (int i : node)
        if (i >= 0 && ++seen == label) return i;
    throw std::out_of_range("no sphere with label " + std::to_string(label));
}

SphereChain chain_classes_concave(const DecompositionTree& tree) {
    if (tree.kind != DomainKind::Concave) throw std::invalid_argument("chain_classes_concave: convex tree");
    std::vector<int> order;
    inorder(tree, 0, order);
    return assemble(tree, order, false);
}

SphereChain chain_classes_convex(const DecompositionTree& tree) {
    if (tree.kind != DomainKind::Convex) throw std::invalid_argument("chain_classes_convex: concave tree");
    std::vector<int> left, right, order;
    inorder(tree, tree.nodes[0].left, left);
    inorder(tree, tree.nodes[0].right, right);
    order.assign(left.rbegin(), left.rend());
    order.push_back(-1);
    order.insert(order.end(), right.rbegin(), right.rend());
    return assemble(tree, order, true);
}

ChainCheck check_chain(const SphereChain& chain) {
    const auto& c = chain.classes;
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::int64_t self = intersection(c[i], c[i]);
        if (chain.node[i] >= 0 && self > -1) return {false, c[i].str() + " has self-intersection " + std::to_string(self)};
        if (chern(c[i]) != self + 2) return {false, c[i].str() + " violates adjunction"};
        for (std::size_t j = i + 1; j < c.size(); ++j) {
            std::int64_t want = j == i + 1 ? 1 : 0;
            std::int64_t got = intersection(c[i], c[j]);
            if (got != want)
                return {false, c[i].str() + " . " + c[j].str() + " = " + std::to_string(got) + ", expected " + std::to_string(want)};
        }
    }
    return {};
}

std::string SymplecticClass::str() const {
    std::string out;
    rterm(out, l, "l");
    for (std::size_t i = 0; i < e.size(); ++i) rterm(out, e[i], "e_" + std::to_string(i + 1));
    for (std::size_t i = 0; i < ehat.size(); ++i) rterm(out, ehat[i], "ehat_" + std::to_string(i + 1));
    return out.empty() ? "0" : out;
}

SymplecticClass symplectic_class(const EmbeddingProblem& p, const Rational& r, std::size_t max_nodes) {
    Expansion src = concave_weights(p.source, max_nodes);
    Expansion dst = convex_weights(p.target, max_nodes);
    SphereChain cs = chain_classes_concave(src.tree);
    SphereChain ct = chain_classes_convex(dst.tree);
    SymplecticClass w;
    w.l = *dst.weights.head;
    for (std::size_t i = 1; i <= src.tree.nodes.size(); ++i)
        w.e.push_back(-(r * src.tree.nodes[cs.node_of_label(static_cast<int>(i))].value));
    for (std::size_t i = 1; i < dst.tree.nodes.size(); ++i)
        w.ehat.push_back(-dst.tree.nodes[ct.node_of_label(static_cast<int>(i))].value);
    return w;
}

Rational pairing(const SymplecticClass& w, const HomologyClass& a) {
    Rational s = w.l * Rational(a.L);
    for (std::size_t i = 0; i < std::min(w.e.size(), a.E.size()); ++i) s -= w.e[i] * Rational(a.E[i]);
    for (std::size_t i = 0; i < std::min(w.ehat.size(), a.Ehat.size()); ++i) s -= w.ehat[i] * Rational(a.Ehat[i]);
    return s;
}

Rational lattice_length(const Vec2& v) {
    mpz_class den = lcm(v.x.denominator(), v.y.denominator());
    mpz_class wx = v.x.numerator() * (den / v.x.denominator());
    mpz_class wy = v.y.numerator() * (den / v.y.denominator());
    mpz_class g = gcd(wx, wy);
    if (g == 0) return Rational(0);
    return Rational(mpq_class(g, den));
}

namespace {

Rational sum(const Point2& p) { return p.x + p.y; }

struct LevelSplit {
    std::vector<Point2> left;
    std::vector<Point2> right;
};

// Parts of the polyline before it enters and after it leaves the set where
// x + y <= level (below) or x + y >= level (above). That set meets the
// polyline in one interval for the boundaries used here.
LevelSplit split_at_level(const std::vector<Point2>& b, const Rational& level, bool below) {
    auto inside = [&](const Point2& p) { return below ? sum(p) <= level : sum(p) >= level; };
    auto cross_at = [&](const Point2& p, const Point2& q) {
        Rational t = (level - sum(p)) / (sum(q) - sum(p));
        return p + t * (q - p);
    };
    const std::size_t n = b.size();
    std::size_t first = n;
    for (std::size_t i = 0; i < n && first == n; ++i)
        if (inside(b[i])) first = i;
    if (first == n) throw ApproximationError("level " + level.str() + " misses the boundary");
    std::size_t last = first;
    for (std::size_t i = n; i-- > first;)
        if (inside(b[i])) {
            last = i;
            break;
        }
    LevelSplit s;
    s.left.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(first));
    s.left.push_back(first == 0 ? b[0] : cross_at(b[first - 1], b[first]));
    s.right.push_back(last + 1 == n ? b[n - 1] : cross_at(b[last], b[last + 1]));
    s.right.insert(s.right.end(), b.begin() + static_cast<std::ptrdiff_t>(last + 1), b.end());
    return s;
}

std::vector<Point2> mapped(const AffineUnimodularMap& m, const std::vector<Point2>& pts, bool reverse) {
    std::vector<Point2> out;
    for (const auto& p : pts) out.push_back(m.apply(p));
    if (reverse) std::reverse(out.begin(), out.end());
    return out;
}

ToricDomainSpec piece(const std::vector<Point2>& pts) {
    try {
        return ToricDomainSpec::concave(pts);
    } catch (const InvalidDomain& e) {
        throw ApproximationError(std::string("leftover piece is not a concave domain: ") + e.what());
    }
}

void check_gap(const Rational& lo, const Rational& hi, const Rational& delta, int node) {
    Rational gap = hi - lo;
    if (gap.sign() < 0 || (gap.is_zero() && delta.sign() > 0))
        throw ApproximationError("delta at node " + std::to_string(node) + " removes an edge");
}

void check_shape(bool has_left, bool has_right, const DecompositionNode& node, int i) {
    if (has_left != (node.left >= 0) || has_right != (node.right >= 0))
        throw ApproximationError("delta at node " + std::to_string(i) + " changes the decomposition");
}

// Outer approximation of a concave boundary following node i of the tree.
std::vector<Point2> outer_rec(const std::vector<Point2>& b, const DecompositionTree& tree, int i,
                              const std::vector<Rational>& delta) {
    const auto& node = tree.nodes[i];
    Rational a = sum(b.front());
    for (const auto& p : b) a = min(a, sum(p));
    Rational A = a + delta[i];
    LevelSplit s = split_at_level(b, A, true);
    const bool has_left = s.left.size() > 1;
    const bool has_right = s.right.size() > 1;
    check_shape(has_left, has_right, node, i);

    const AffineUnimodularMap to_left({{{1, 0}, {1, 1}}}, {Rational(0), -A});
    const AffineUnimodularMap to_right({{{1, 1}, {0, 1}}}, {-A, Rational(0)});
    std::vector<Point2> out;
    Rational wl(0), hr(0);
    if (has_left) {
        auto child = outer_rec(piece(mapped(to_left, s.left, false)).boundary(), tree, node.left, delta);
        wl = child.back().x;
        out = mapped(to_left.inverse(), child, false);
    } else {
        out.push_back({Rational(0), A});
    }
    if (has_right) {
        auto child = outer_rec(piece(mapped(to_right, s.right, false)).boundary(), tree, node.right, delta);
        hr = child.front().y;
        check_gap(wl, A - hr, delta[i], i);
        auto back = mapped(to_right.inverse(), child, false);
        out.insert(out.end(), back.begin(), back.end());
    } else {
        check_gap(wl, A, delta[i], i);
        out.push_back({A, Rational(0)});
    }
    return collapse_polyline(std::move(out));
}

void check_delta(const DecompositionTree& tree, const std::vector<Rational>& delta) {
    if (delta.size() != tree.nodes.size())
        throw ApproximationError("expected " + std::to_string(tree.nodes.size()) + " deltas, got " + std::to_string(delta.size()));
    for (const auto& d : delta)
        if (d.sign() < 0) throw ApproximationError("negative delta " + d.str());
}

ToricDomainSpec finish(DomainKind kind, std::vector<Point2> b) {
    try {
        return {kind, std::move(b)};
    } catch (const InvalidDomain& e) {
        throw ApproximationError(std::string("approximation is not a valid domain: ") + e.what());
    }
}

}  // namespace

std::vector<Rational> graded_deltas(const DecompositionTree& tree, const Rational& eps, const Rational& ratio) {
    std::vector<Rational> out(tree.nodes.size());
    for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
        int p = tree.nodes[i].parent;
        out[i] = p < 0 ? eps : out[p] * ratio;
    }
    return out;
}

ToricDomainSpec outer_approximation(const DecompositionTree& tree, const std::vector<Rational>& delta) {
    if (tree.kind != DomainKind::Concave) throw std::invalid_argument("outer_approximation needs a concave tree");
    check_delta(tree, delta);
    return finish(DomainKind::Concave, outer_rec(tree.nodes[0].domain.boundary(), tree, 0, delta));
}

ToricDomainSpec inner_approximation(const DecompositionTree& tree, const std::vector<Rational>& delta) {
    if (tree.kind != DomainKind::Convex) throw std::invalid_argument("inner_approximation needs a convex tree");
    check_delta(tree, delta);
    const auto& root = tree.nodes[0];
    const Rational B = root.value - delta[0];
    if (B.sign() <= 0) throw ApproximationError("delta at the root exceeds the head");
    const auto& b = root.domain.boundary();
    LevelSplit s = split_at_level(b, B, false);
    const bool has_left = s.left.size() > 1;
    const bool has_right = s.right.size() > 1;
    check_shape(has_left, has_right, root, 0);

    const AffineUnimodularMap to_left({{{-1, -1}, {1, 0}}}, {B, Rational(0)});
    const AffineUnimodularMap to_right({{{0, 1}, {-1, -1}}}, {Rational(0), B});
    std::vector<Point2> out;
    Rational hl(0), wr(0);
    if (has_left) {
        auto child = outer_rec(piece(mapped(to_left, s.left, true)).boundary(), tree, root.left, delta);
        hl = child.front().y;
        out = mapped(to_left.inverse(), child, true);
    } else {
        out.push_back({Rational(0), B});
    }
    if (has_right) {
        auto child = outer_rec(piece(mapped(to_right, s.right, true)).boundary(), tree, root.right, delta);
        wr = child.back().x;
        check_gap(hl, B - wr, delta[0], 0);
        auto back = mapped(to_right.inverse(), child, true);
        out.insert(out.end(), back.begin(), back.end());
    } else {
        check_gap(hl, B, delta[0], 0);
        out.push_back({B, Rational(0)});
    }
    return finish(DomainKind::Convex, collapse_polyline(std::move(out)));
}

ToricDomainSpec approximation(const DecompositionTree& tree, const std::vector<Rational>& delta) {
    return tree.kind == DomainKind::Concave ? outer_approximation(tree, delta) : inner_approximation(tree, delta);
}

std::vector<Rational> admissible_deltas(const DecompositionTree& tree, const Rational& eps, int tries) {
    if (eps.sign() <= 0) throw ApproximationError("delta must be positive, got " + eps.str());
    Rational ratio(1, 4);
    for (int k = 0; k < tries; ++k, ratio /= Rational(4)) {
        auto d = graded_deltas(tree, eps, ratio);
        try {
            approximation(tree, d);
            return d;
        } catch (const ApproximationError&) {
        }
    }
    throw ApproximationError("no graded choice of deltas below " + eps.str() + " keeps every edge");
}

}  // namespace tde
