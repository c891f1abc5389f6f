#include "tde/capacity.hpp"

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>

#include "tde/weight_expansion.hpp"

namespace tde {

bool CapacitySeq::all_certified() const {
    return std::all_of(certified.begin(), certified.end(), [](bool b) { return b; });
}

CapacitySeq CapacitySeq::truncated(int K) const {
    if (K > horizon()) throw HorizonError("cannot extend a sequence by truncation");
    CapacitySeq out;
    out.values.assign(values.begin(), values.begin() + K + 1);
    out.certified.assign(certified.begin(), certified.begin() + K + 1);
    return out;
}

namespace {

void require_horizon(int K) {
    if (K < 0) throw HorizonError("negative horizon");
}

// Integer images of several rational sequences under a common denominator,
// when every scaled value fits comfortably in 62 bits.
struct Scaled {
    mpz_class den;
    std::vector<std::vector<std::int64_t>> seqs;
};

std::optional<Scaled> scale_common(std::initializer_list<const std::vector<Rational>*> in) {
    mpz_class den = 1;
    for (const auto* v : in)
        for (const auto& r : *v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.raw().get_den_mpz_t());
    const mpz_class limit = mpz_class(1) << 60;
    Scaled out{den, {}};
    for (const auto* v : in) {
        std::vector<std::int64_t> s;
        s.reserve(v->size());
        for (const auto& r : *v) {
            mpz_class n = r.raw().get_num() * (den / r.raw().get_den());
            if (abs(n) >= limit) return std::nullopt;
            s.push_back(n.get_si());
        }
        out.seqs.push_back(std::move(s));
    }
    return out;
}

Rational unscale(std::int64_t n, const mpz_class& den) { return Rational(mpq_class(mpz_class(static_cast<long>(n)), den)); }

}  // namespace

CapacitySeq zero_caps(int K) {
    require_horizon(K);
    return CapacitySeq(std::vector<Rational>(static_cast<std::size_t>(K) + 1, Rational(0)));
}

CapacitySeq ball_caps(const Rational& a, int K) {
    require_horizon(K);
    std::vector<Rational> v;
    v.reserve(static_cast<std::size_t>(K) + 1);
    std::int64_t d = 0;
    for (std::int64_t k = 0; k <= K; ++k) {
        while (k > d * (d + 3) / 2) ++d;
        v.push_back(Rational(d) * a);
    }
    return CapacitySeq(std::move(v));
}

CapacitySeq ellipsoid_caps(const Rational& a, const Rational& b, int K) {
    require_horizon(K);
    if (a.sign() <= 0 || b.sign() <= 0) throw std::invalid_argument("ellipsoid parameters must be positive");
    // Merge of the K+1 rows m = 0..K, each increasing in n.
    struct Item {
        Rational value;
        std::int64_t m, n;
    };
    auto later = [](const Item& x, const Item& y) { return y.value < x.value; };
    std::priority_queue<Item, std::vector<Item>, decltype(later)> heap(later);
    for (std::int64_t m = 0; m <= K; ++m) heap.push({a * Rational(m), m, 0});
    std::vector<Rational> v;
    while (static_cast<int>(v.size()) <= K) {
        Item top = heap.top();
        heap.pop();
        v.push_back(top.value);
        heap.push({top.value + b, top.m, top.n + 1});
    }
    return CapacitySeq(std::move(v));
}

CapacitySeq seq_sum(const CapacitySeq& s, const CapacitySeq& t) {
    const int K = std::min(s.horizon(), t.horizon());
    require_horizon(K);
    CapacitySeq out;
    out.values.resize(static_cast<std::size_t>(K) + 1);
    out.certified.resize(static_cast<std::size_t>(K) + 1);
    auto sv = s.truncated(K), tv = t.truncated(K);
    if (auto sc = scale_common({&sv.values, &tv.values})) {
        const auto& x = sc->seqs[0];
        const auto& y = sc->seqs[1];
        for (int k = 0; k <= K; ++k) {
            std::int64_t best = x[k] + y[0];
            for (int i = 0; i <= k; ++i) best = std::max(best, x[i] + y[k - i]);
            out.values[k] = unscale(best, sc->den);
        }
    } else {
        for (int k = 0; k <= K; ++k) {
            Rational best = sv[k] + tv[0];
            for (int i = 0; i <= k; ++i) best = max(best, sv[i] + tv[k - i]);
            out.values[k] = best;
        }
    }
    // An entry is trustworthy when every entry it could depend on is.
    bool ok = true;
    for (int k = 0; k <= K; ++k) {
        ok = ok && s.certified[k] && t.certified[k];
        out.certified[k] = ok;
    }
    return out;
}

// For monotone S, (S # c(B(a)))_k = max over d of S_{k - d(d+1)/2} + d a: the
// ball sequence is constant on d(d+1)/2 <= j <= d(d+3)/2, so the smallest j wins.
CapacitySeq ball_union_caps(const std::vector<Rational>& radii, int K) {
    require_horizon(K);
    const auto n = static_cast<std::size_t>(K) + 1;
    std::int64_t dmax = 0;
    while ((dmax + 1) * (dmax + 2) / 2 <= K) ++dmax;
    mpz_class den = 1;
    mpz_class bound = 0;
    for (const auto& r : radii) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), r.raw().get_den_mpz_t());
        bound += abs(r.raw().get_num());
    }
    if (den * bound * (dmax + 1) < (mpz_class(1) << 60)) {
        std::vector<std::int64_t> acc(n, 0), next(n);
        for (const auto& r : radii) {
            const std::int64_t a = mpz_class(r.raw().get_num() * (den / r.raw().get_den())).get_si();
            for (std::int64_t k = 0; k <= K; ++k) {
                std::int64_t best = acc[k];
                for (std::int64_t d = 1; d * (d + 1) / 2 <= k; ++d) best = std::max(best, acc[k - d * (d + 1) / 2] + d * a);
                next[k] = best;
            }
            acc.swap(next);
        }
        std::vector<Rational> v;
        v.reserve(n);
        for (auto x : acc) v.push_back(unscale(x, den));
        return CapacitySeq(std::move(v));
    }
    std::vector<Rational> acc(n, Rational(0)), next(n);
    for (const auto& r : radii) {
        for (std::int64_t k = 0; k <= K; ++k) {
            Rational best = acc[k];
            for (std::int64_t d = 1; d * (d + 1) / 2 <= k; ++d) best = max(best, acc[k - d * (d + 1) / 2] + Rational(d) * r);
            next[k] = best;
        }
        acc.swap(next);
    }
    return CapacitySeq(std::move(acc));
}

CapacitySeq seq_sub(const CapacitySeq& s, const CapacitySeq& t, int K, int search) {
    require_horizon(K);
    if (search < 0) throw HorizonError("negative subtraction search bound");
    if (s.horizon() < K + search || t.horizon() < search)
        throw HorizonError("subtraction needs S to index " + std::to_string(K + search) + " and T to index " +
                           std::to_string(search) + ", have " + std::to_string(s.horizon()) + " and " +
                           std::to_string(t.horizon()));
    const bool can_check = s.horizon() >= K + 2 * search && t.horizon() >= 2 * search;
    const int reach = can_check ? 2 * search : search;
    CapacitySeq out;
    out.values.resize(static_cast<std::size_t>(K) + 1);
    out.certified.assign(static_cast<std::size_t>(K) + 1, false);
    auto sv = s.truncated(K + reach), tv = t.truncated(reach);
    auto sc = scale_common({&sv.values, &tv.values});
    for (int k = 0; k <= K; ++k) {
        Rational first, second;
        if (sc) {
            const auto& x = sc->seqs[0];
            const auto& y = sc->seqs[1];
            std::int64_t m1 = x[k] - y[0];
            for (int l = 0; l <= search; ++l) m1 = std::min(m1, x[k + l] - y[l]);
            std::int64_t m2 = m1;
            for (int l = search + 1; l <= reach; ++l) m2 = std::min(m2, x[k + l] - y[l]);
            first = unscale(m1, sc->den);
            second = unscale(m2, sc->den);
        } else {
            first = sv[k] - tv[0];
            for (int l = 0; l <= search; ++l) first = min(first, sv[k + l] - tv[l]);
            second = first;
            for (int l = search + 1; l <= reach; ++l) second = min(second, sv[k + l] - tv[l]);
        }
        out.values[k] = first;
        out.certified[k] = can_check && first == second;
    }
    return out;
}

int default_search(int K, const Rational& head) {
    Rational v = Rational(8) * (Rational(K) + head * head);
    return static_cast<int>(v.ceil().raw().get_num().get_si());
}

bool certify_entry(CapacitySeq& s, int k, const Rational& value) {
    if (k < 0 || k > s.horizon() || !(s[k] == value)) return false;
    s.certified[static_cast<std::size_t>(k)] = true;
    return true;
}

LeqReport seq_leq(const CapacitySeq& s, const CapacitySeq& t, int K) {
    if (s.horizon() < K || t.horizon() < K) throw HorizonError("comparison beyond the sequence horizon");
    for (int k = 0; k <= K; ++k)
        if (t[k] < s[k]) return {false, k};
    return {};
}

CapacitySeq concave_caps(const ToricDomainSpec& omega, int K, std::size_t max_nodes) {
    return ball_union_caps(concave_weights(omega, max_nodes).weights.weights, K);
}

CapacitySeq convex_caps(const ToricDomainSpec& omega, int K, int search, std::size_t max_nodes) {
    auto e = convex_weights(omega, max_nodes);
    const Rational& head = *e.weights.head;
    if (search < 0) search = default_search(K, head);
    auto big = ball_caps(head, K + 2 * search);
    auto holes = ball_union_caps(e.weights.weights, 2 * search);
    return seq_sub(big, holes, K, search);
}

}  // namespace tde
