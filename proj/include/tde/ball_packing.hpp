#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tde/capacity.hpp"
#include "tde/errors.hpp"
#include "tde/rational.hpp"

namespace tde {

// Open balls B(a_i) into the open ball B(b).
struct PackingInstance {
    Rational target;
    std::vector<Rational> balls;

    // Throws std::invalid_argument unless b > 0 and every a_i > 0.
    void check() const;
    // "(5; 3, 2, 2, 1)"
    std::string display() const;
};

// Vector (b; a_1, ..., a_n), sorted nonincreasing and padded to n >= 3.
struct CremonaVector {
    Rational b;
    std::vector<Rational> a;

    static CremonaVector normalized(Rational b, std::vector<Rational> a);
    Rational defect() const;  // a_1 + a_2 + a_3 - b
    Rational invariant() const;  // b^2 - sum a_i^2
    bool has_negative() const;

    friend bool operator==(const CremonaVector&, const CremonaVector&) = default;
};

struct CremonaMove {
    Rational delta;
    CremonaVector after;
};

struct CremonaResult {
    CremonaVector start;
    CremonaVector terminal;
    std::vector<CremonaMove> trace;
    bool reduced = false;  // terminal defect <= 0 with no negative entry
};

constexpr std::size_t kDefaultMaxMoves = 1'000'000;

// Repeats (b; a1, a2, a3, ...) -> (b - d; a1 - d, a2 - d, a3 - d, ...) with
// d = a1 + a2 + a3 - b > 0, re-sorting after each move, until d <= 0 or an
// entry turns negative. Requires b > 0 and a_i >= 0. Throws ResourceLimit
// after max_moves moves.
CremonaResult cremona_reduce(const Rational& b, const std::vector<Rational>& a,
                             std::size_t max_moves = kDefaultMaxMoves);

// Applies a recorded trace to its start vector; returns the terminal vector.
// Throws std::invalid_argument if a recorded delta or vector does not match.
CremonaVector replay(const CremonaResult& result);

enum class PackingFailure { None, NegativeEntry, Volume };

std::string to_string(PackingFailure f);

struct Verdict {
    bool feasible = false;
    PackingFailure failure = PackingFailure::None;
    CremonaResult certificate;
    Rational volume_slack;  // b^2 - sum a_i^2
};

// Feasible iff the volume condition sum a_i^2 <= b^2 holds and Cremona
// reduction ends with every entry nonnegative.
Verdict decide_packing(const PackingInstance& p, std::size_t max_moves = kDefaultMaxMoves);

struct ScaleBracket {
    Rational lo;  // feasible (unless lo_feasible is false)
    Rational hi;  // infeasible
    bool lo_feasible = true;
};

// Largest lambda for which the balls with indices in `scaled` may be
// multiplied by lambda. Returns lo feasible and hi infeasible with
// hi - lo <= precision; when lo is exactly optimal, hi = lo + precision.
// If the instance is infeasible even with those balls removed, returns
// lo = hi = 0 with lo_feasible false.
ScaleBracket optimal_scale(const PackingInstance& p, const std::vector<std::size_t>& scaled,
                           const Rational& precision, std::size_t max_moves = kDefaultMaxMoves);

// First k <= K with c_k(union of balls) > c_k(B(b)), if any.
std::optional<int> capacity_obstruction(const PackingInstance& p, int K);

}  // namespace tde
