#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "tde/errors.hpp"
#include "tde/toric_domain.hpp"

namespace tde {

// Exact prefix c_0..c_K of a capacity sequence. Entries produced by
// subtraction carry a certification flag; every other entry is exact.
struct CapacitySeq {
    std::vector<Rational> values;
    std::vector<bool> certified;

    CapacitySeq() = default;
    explicit CapacitySeq(std::vector<Rational> v) : values(std::move(v)), certified(values.size(), true) {}

    int horizon() const { return static_cast<int>(values.size()) - 1; }
    const Rational& operator[](int k) const { return values[static_cast<std::size_t>(k)]; }
    bool all_certified() const;
    CapacitySeq truncated(int K) const;
};

class HorizonError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

CapacitySeq zero_caps(int K);
// c_k(B(a)) = d a, where d(d+1)/2 <= k <= d(d+3)/2.
CapacitySeq ball_caps(const Rational& a, int K);
// (k+1)-st smallest element of {a m + b n : m, n >= 0}.
CapacitySeq ellipsoid_caps(const Rational& a, const Rational& b, int K);

// (S # T)_k = max over i + j = k of S_i + T_j, to the shorter horizon.
CapacitySeq seq_sum(const CapacitySeq& s, const CapacitySeq& t);
// Capacities of a disjoint union of balls, an iterated seq_sum.
CapacitySeq ball_union_caps(const std::vector<Rational>& radii, int K);

// (S - T)_k = min over 0 <= l <= search of S_{k+l} - T_l, for k = 0..K.
// Throws HorizonError unless S reaches K + search and T reaches search. An
// entry is certified when S and T also reach 2 search and the minimum over
// l <= 2 search agrees.
CapacitySeq seq_sub(const CapacitySeq& s, const CapacitySeq& t, int K, int search);

// ceil(8 (K + head^2))
int default_search(int K, const Rational& head);

// Marks entry k certified when an independent computation agrees with it.
bool certify_entry(CapacitySeq& s, int k, const Rational& value);

struct LeqReport {
    bool holds = true;
    std::optional<int> first_violation;
};

// Compares S_k <= T_k for k = 0..K. Throws HorizonError if either is shorter.
LeqReport seq_leq(const CapacitySeq& s, const CapacitySeq& t, int K);

constexpr int kDefaultHorizon = 100;

CapacitySeq concave_caps(const ToricDomainSpec& omega, int K, std::size_t max_nodes = kDefaultMaxNodes);
// search < 0 selects default_search(K, head).
CapacitySeq convex_caps(const ToricDomainSpec& omega, int K, int search = -1,
                        std::size_t max_nodes = kDefaultMaxNodes);

}  // namespace tde
