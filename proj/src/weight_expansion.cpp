#include "tde/weight_expansion.hpp"

#include <algorithm>
#include <stdexcept>

namespace tde {

std::vector<Rational> WeightExpansion::sorted() const {
    auto out = weights;
    std::sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) { return b < a; });
    return out;
}

std::string WeightExpansion::display() const {
    std::string s = head ? "head " + head->str() + "; (" : "(";
    for (std::size_t i = 0; i < weights.size(); ++i) s += (i ? ", " : "") + weights[i].str();
    return s + ")";
}

namespace {

using Matrix = AffineUnimodularMap::Matrix;

// First and last boundary indices where x + y attains `level`.
std::pair<std::size_t, std::size_t> level_range(const std::vector<Point2>& b, const Rational& level) {
    std::size_t first = b.size(), last = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i].x + b[i].y == level) {
            first = std::min(first, i);
            last = i;
        }
    return {first, last};
}

std::vector<Point2> mapped(const AffineUnimodularMap& m, std::vector<Point2>::const_iterator from,
                           std::vector<Point2>::const_iterator to, bool reverse) {
    std::vector<Point2> out;
    for (auto it = from; it != to; ++it) out.push_back(m.apply(*it));
    if (reverse) std::reverse(out.begin(), out.end());
    return out;
}

class Builder {
public:
    Builder(DecompositionTree& tree, std::vector<Rational>& weights, std::size_t max_nodes)
        : tree_(tree), weights_(weights), max_nodes_(max_nodes) {}

    int add(DecompositionNode node) {
        if (tree_.nodes.size() >= max_nodes_)
            throw ResourceLimit("weight expansion exceeded " + std::to_string(max_nodes_) + " nodes");
        tree_.nodes.push_back(std::move(node));
        return static_cast<int>(tree_.nodes.size()) - 1;
    }

    // Expands a concave piece; returns its node index.
    int concave(const ToricDomainSpec& dom, const AffineUnimodularMap& frame, int parent) {
        const auto& b = dom.boundary();
        Rational a = b.front().x + b.front().y;
        for (const auto& p : b) a = min(a, p.x + p.y);
        auto [i1, i2] = level_range(b, a);
        AffineUnimodularMap to_left(Matrix{{{1, 0}, {1, 1}}}, {Rational(0), -a});
        AffineUnimodularMap to_right(Matrix{{{1, 1}, {0, 1}}}, {-a, Rational(0)});
        int idx = add({a, b[i1], b[i2], dom, to_left, to_right, frame, -1, -1, parent});
        weights_.push_back(a);
        if (i1 > 0) {
            auto child = ToricDomainSpec::concave(mapped(to_left, b.begin(), b.begin() + i1 + 1, false));
            int c = concave(child, to_left.inverse().then(frame), idx);
            tree_.nodes[idx].left = c;
        }
        if (i2 + 1 < b.size()) {
            auto child = ToricDomainSpec::concave(mapped(to_right, b.begin() + i2, b.end(), false));
            int c = concave(child, to_right.inverse().then(frame), idx);
            tree_.nodes[idx].right = c;
        }
        return idx;
    }

    void convex_root(const ToricDomainSpec& dom) {
        const auto& b = dom.boundary();
        Rational head = b.front().x + b.front().y;
        for (const auto& p : b) head = max(head, p.x + p.y);
        auto [i1, i2] = level_range(b, head);
        AffineUnimodularMap to_left(Matrix{{{-1, -1}, {1, 0}}}, {head, Rational(0)});
        AffineUnimodularMap to_right(Matrix{{{0, 1}, {-1, -1}}}, {Rational(0), head});
        int idx = add({head, b[i1], b[i2], dom, to_left, to_right, AffineUnimodularMap(), -1, -1, -1});
        if (i1 > 0) {
            auto child = ToricDomainSpec::concave(mapped(to_left, b.begin(), b.begin() + i1 + 1, true));
            int c = concave(child, to_left.inverse(), idx);
            tree_.nodes[idx].left = c;
        }
        if (i2 + 1 < b.size()) {
            auto child = ToricDomainSpec::concave(mapped(to_right, b.begin() + i2, b.end(), true));
            int c = concave(child, to_right.inverse(), idx);
            tree_.nodes[idx].right = c;
        }
    }

private:
    DecompositionTree& tree_;
    std::vector<Rational>& weights_;
    std::size_t max_nodes_;
};

}  // namespace

Expansion concave_weights(const ToricDomainSpec& omega, std::size_t max_nodes) {
    if (omega.kind() != DomainKind::Concave)
        throw InvalidDomain(DomainViolation::NonConcave, "concave weight expansion needs a concave domain");
    Expansion e;
    e.tree.kind = DomainKind::Concave;
    Builder(e.tree, e.weights.weights, max_nodes).concave(omega, AffineUnimodularMap(), -1);
    return e;
}

Expansion convex_weights(const ToricDomainSpec& omega, std::size_t max_nodes) {
    if (omega.kind() != DomainKind::Convex)
        throw InvalidDomain(DomainViolation::NonConvex, "convex weight expansion needs a convex domain");
    Expansion e;
    e.tree.kind = DomainKind::Convex;
    Builder(e.tree, e.weights.weights, max_nodes).convex_root(omega);
    e.weights.head = e.tree.nodes[0].value;
    return e;
}

Expansion weights(const ToricDomainSpec& omega, std::size_t max_nodes) {
    return omega.kind() == DomainKind::Concave ? concave_weights(omega, max_nodes) : convex_weights(omega, max_nodes);
}

ToricDomainSpec build_short_concave(const std::vector<Rational>& weights) {
    if (weights.empty()) throw std::invalid_argument("short domain needs at least one weight");
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i].sign() <= 0) throw std::invalid_argument("weights must be positive");
        if (i > 0 && weights[i - 1] < weights[i]) throw std::invalid_argument("weights must be nonincreasing");
    }
    std::vector<Point2> b{{Rational(0), weights.back()}, {weights.back(), Rational(0)}};
    for (std::size_t i = weights.size() - 1; i-- > 0;) {
        const Rational& a0 = weights[i];
        std::vector<Point2> next{{Rational(0), a0}};
        for (const auto& p : b) {
            Point2 q{p.x - p.y + a0, p.y};
            if (!(q == next.back())) next.push_back(std::move(q));
        }
        b = std::move(next);
    }
    return ToricDomainSpec::concave(std::move(b));
}

}  // namespace tde
