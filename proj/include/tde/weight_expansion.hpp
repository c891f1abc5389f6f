#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tde/errors.hpp"
#include "tde/toric_domain.hpp"

namespace tde {

struct WeightExpansion {
    std::optional<Rational> head;  // present iff the domain is convex
    std::vector<Rational> weights;  // preorder of the decomposition tree

    std::vector<Rational> sorted() const;  // nonincreasing
    // "(2, 2/3, 2/3, 1/3, 1/3)" or "head 2; (1, 1)"
    std::string display() const;
};

// One cut of the recursion. Coordinates of cut_start, cut_end and domain are
// in the node's own canonical frame; `frame` maps that frame back to the
// coordinates of the original domain.
struct DecompositionNode {
    Rational value;      // cut value a, or the head b at a convex root
    Point2 cut_start;    // (x1, a - x1)
    Point2 cut_end;      // (x2, a - x2)
    ToricDomainSpec domain;
    AffineUnimodularMap to_left;   // this frame -> left child frame
    AffineUnimodularMap to_right;  // this frame -> right child frame
    AffineUnimodularMap frame;
    int left = -1;
    int right = -1;
    int parent = -1;
};

struct DecompositionTree {
    DomainKind kind = DomainKind::Concave;
    std::vector<DecompositionNode> nodes;  // preorder; nodes[0] is the root
    bool is_convex_root(int i) const { return kind == DomainKind::Convex && i == 0; }
};

struct Expansion {
    WeightExpansion weights;
    DecompositionTree tree;
};

// Throws ResourceLimit when more than max_nodes cuts are needed, and
// InvalidDomain for a domain of the wrong kind.
Expansion concave_weights(const ToricDomainSpec& omega, std::size_t max_nodes = kDefaultMaxNodes);
Expansion convex_weights(const ToricDomainSpec& omega, std::size_t max_nodes = kDefaultMaxNodes);
Expansion weights(const ToricDomainSpec& omega, std::size_t max_nodes = kDefaultMaxNodes);

// Concave domain with the given weights, built by nesting: each weight a0 is
// placed as the triangle at the origin and the remaining domain is sheared
// by (x, y) -> (x - y + a0, y). Requires a nonempty nonincreasing positive list.
ToricDomainSpec build_short_concave(const std::vector<Rational>& weights);

}  // namespace tde
