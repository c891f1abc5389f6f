#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tde/embedding.hpp"
#include "tde/weight_expansion.hpp"

namespace tde {

// Integer class a L + sum b_i E_i + sum c_j Ehat_j. Missing entries are zero.
struct HomologyClass {
    std::int64_t L = 0;
    std::vector<std::int64_t> E;
    std::vector<std::int64_t> Ehat;

    // "E_3 - E_2 - E_4 - E_5", "L - Ehat_2 - Ehat_3"; labels are 1-based.
    std::string str() const;

    friend bool operator==(const HomologyClass& a, const HomologyClass& b);
};

// L.L = 1, E_i.E_i = Ehat_j.Ehat_j = -1, distinct basis classes orthogonal.
std::int64_t intersection(const HomologyClass& a, const HomologyClass& b);
// Pairing with c_1 = 3L - sum E_i - sum Ehat_j.
std::int64_t chern(const HomologyClass& a);

// Sphere classes in left-to-right edge order. node[i] is the decomposition
// node that produced sphere i, or -1 for the line at infinity. Exceptional
// labels follow the same order, so E_i (or Ehat_i) belongs to the i-th
// non-line sphere.
struct SphereChain {
    std::vector<HomologyClass> classes;
    std::vector<int> node;

    // Node of the sphere labelled i (1-based), skipping the line.
    int node_of_label(int label) const;
};

// Sphere of blowup i: E_i minus the classes of the blowups whose triangle
// corner lies on it.
SphereChain chain_classes_concave(const DecompositionTree& tree);
SphereChain chain_classes_convex(const DecompositionTree& tree);

struct ChainCheck {
    bool ok = true;
    std::string detail;
};

// Consecutive classes pair to 1, others to 0, every class satisfies
// c_1(A) = A.A + 2 and every exceptional sphere has self-intersection at most
// -1. The line class is exempt from the sign rule: it is L minus one E per
// blowup touching it, so it has square 1 or 0 when fewer than two do.
ChainCheck check_chain(const SphereChain& chain);

// Rational a l + sum b_i e_i + sum c_j ehat_j.
struct SymplecticClass {
    Rational l;
    std::vector<Rational> e;
    std::vector<Rational> ehat;

    std::string str() const;
};

// b l - sum r a_i e_i - sum b_j ehat_j, labels as in the two chains.
SymplecticClass symplectic_class(const EmbeddingProblem& p, const Rational& r,
                                 std::size_t max_nodes = kDefaultMaxNodes);
// Area of a class: the intersection pairing with the Poincare dual.
Rational pairing(const SymplecticClass& w, const HomologyClass& a);

class ApproximationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Outer approximation of the concave domain at tree.nodes[0], one delta >= 0
// per node in tree order: each triangle Delta(a) is enlarged to
// Delta(a + delta) and the leftover pieces are approximated recursively.
// Throws ApproximationError when a delta removes an edge or changes the
// shape of the decomposition.
ToricDomainSpec outer_approximation(const DecompositionTree& tree, const std::vector<Rational>& delta);

// Inner approximation of the convex domain at tree.nodes[0]: Delta(b - delta_0)
// minus outer approximations of the complement pieces.
ToricDomainSpec inner_approximation(const DecompositionTree& tree, const std::vector<Rational>& delta);

// eps * ratio^depth at every node, so deeper cuts move less than their parents.
std::vector<Rational> graded_deltas(const DecompositionTree& tree, const Rational& eps,
                                    const Rational& ratio = Rational(1, 4));

// First of graded_deltas(tree, eps, 4^-k), k = 1..tries, for which the
// approximation of the tree's kind keeps every edge. Throws
// ApproximationError when none does.
std::vector<Rational> admissible_deltas(const DecompositionTree& tree, const Rational& eps, int tries = 8);

// Outer approximation for a concave tree, inner for a convex one.
ToricDomainSpec approximation(const DecompositionTree& tree, const std::vector<Rational>& delta);

// Lattice length of a rational edge vector: t with v = t w, w primitive integral.
Rational lattice_length(const Vec2& v);

}  // namespace tde
