#include "tde/embedding.hpp"

#include <numeric>

namespace tde {

EmbeddingProblem::EmbeddingProblem(ToricDomainSpec s, ToricDomainSpec t) : source(std::move(s)), target(std::move(t)) {
    if (source.kind() != DomainKind::Concave)
        throw InvalidDomain(DomainViolation::NonConcave, "embedding source must be a concave domain");
    if (target.kind() != DomainKind::Convex)
        throw InvalidDomain(DomainViolation::NonConvex, "embedding target must be a convex domain");
}

ReducedPacking reduce_to_packing(const EmbeddingProblem& p, std::size_t max_nodes) {
    ReducedPacking r{{}, 0, concave_weights(p.source, max_nodes), convex_weights(p.target, max_nodes)};
    r.instance.target = *r.target.weights.head;
    r.instance.balls = r.source.weights.weights;
    r.source_count = r.instance.balls.size();
    for (const auto& w : r.target.weights.weights) r.instance.balls.push_back(w);
    return r;
}

Verdict decide_embedding(const EmbeddingProblem& p, std::size_t max_nodes) {
    return decide_packing(reduce_to_packing(p, max_nodes).instance);
}

CapacityReport capacity_report(const EmbeddingProblem& p, int K, int search, std::size_t max_nodes) {
    auto s = concave_caps(p.source, K, max_nodes);
    auto t = convex_caps(p.target, K, search, max_nodes);
    CapacityReport out;
    for (int k = 0; k <= K; ++k) {
        bool holds = s[k] <= t[k];
        out.rows.push_back({k, s[k], t[k], static_cast<bool>(t.certified[k]), holds});
        if (!holds && t.certified[k] && !out.first_violation) out.first_violation = k;
    }
    return out;
}

ScaleBracket optimal_embedding_scale(const EmbeddingProblem& p, const Rational& precision, std::size_t max_nodes) {
    auto r = reduce_to_packing(p, max_nodes);
    std::vector<std::size_t> idx(r.source_count);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return optimal_scale(r.instance, idx, precision);
}

}  // namespace tde
