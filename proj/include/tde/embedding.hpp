#pragma once

#include <optional>
#include <vector>

#include "tde/ball_packing.hpp"
#include "tde/capacity.hpp"
#include "tde/weight_expansion.hpp"

namespace tde {

// Concave source into convex target.
struct EmbeddingProblem {
    ToricDomainSpec source;
    ToricDomainSpec target;

    // Throws InvalidDomain if the kinds are not concave and convex.
    EmbeddingProblem(ToricDomainSpec source, ToricDomainSpec target);
};

// Target head b, and the balls: the source weights first (in expansion
// order), then the negative weights of the target.
struct ReducedPacking {
    PackingInstance instance;
    std::size_t source_count = 0;
    Expansion source;
    Expansion target;
};

ReducedPacking reduce_to_packing(const EmbeddingProblem& p, std::size_t max_nodes = kDefaultMaxNodes);

Verdict decide_embedding(const EmbeddingProblem& p, std::size_t max_nodes = kDefaultMaxNodes);

struct CapacityRow {
    int k;
    Rational source;
    Rational target;
    bool certified;
    bool holds;
};

struct CapacityReport {
    std::vector<CapacityRow> rows;
    // First certified row with source > target.
    std::optional<int> first_violation;
};

CapacityReport capacity_report(const EmbeddingProblem& p, int K, int search = -1,
                               std::size_t max_nodes = kDefaultMaxNodes);

// Bracket for the largest lambda with lambda * source embedding into target.
ScaleBracket optimal_embedding_scale(const EmbeddingProblem& p, const Rational& precision,
                                     std::size_t max_nodes = kDefaultMaxNodes);

}  // namespace tde
