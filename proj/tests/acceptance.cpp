// Acceptance criteria. One PASS/FAIL line each; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "generators.hpp"
#include "tde/blowup.hpp"
#include "tde/capacity.hpp"
#include "tde/embedding.hpp"
#include "tde/lattice_paths.hpp"

using namespace tde;
using namespace tde::testing;

namespace {

Point2 P(Rational x, Rational y) { return {x, y}; }

ToricDomainSpec omega1() {
    return ToricDomainSpec::concave({P(0, Rational(10, 3)), P(Rational(2, 3), Rational(4, 3)),
                                     P(Rational(4, 3), Rational(2, 3)), P(Rational(7, 3), 0)});
}
ToricDomainSpec omega2() { return ToricDomainSpec::convex({P(0, 1), P(1, 2), P(5, 0)}); }

std::vector<Rational> R(std::initializer_list<Rational> xs) { return xs; }

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int n, const char* name, double limit_s, const std::function<Outcome()>& body) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && s >= limit_s) {
        o.ok = false;
        o.detail = "too slow";
    }
    if (!o.ok) ++failures;
    std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", n, name, s, limit_s,
                o.detail.empty() ? "" : " - ", o.detail.c_str());
    std::fflush(stdout);
}

Rational sum_sq(const std::vector<Rational>& w) {
    Rational s(0);
    for (const auto& x : w) s += x * x;
    return s;
}

// Smallest k+1 values of {p m + q n}, by enumeration.
std::vector<Rational> lattice_sums(std::int64_t p, std::int64_t q, int K) {
    std::vector<Rational> v;
    for (std::int64_t m = 0; m <= K; ++m)
        for (std::int64_t n = 0; n <= K; ++n) v.push_back(Rational(p * m + q * n));
    std::sort(v.begin(), v.end());
    v.resize(static_cast<std::size_t>(K) + 1);
    return v;
}

}  // namespace

int main() {
    // Tolerances: every comparison below is exact rational equality.
    criterion(1, "golden weights of the worked example", 1, [] {
        Outcome o;
        o.require(concave_weights(omega1()).weights.weights == R({2, Rational(2, 3), Rational(2, 3), Rational(1, 3), Rational(1, 3)}),
                  "concave weights");
        auto c = convex_weights(omega2()).weights;
        o.require(c.head && *c.head == 5, "convex head");
        o.require(c.sorted() == R({3, 2, 1}), "convex weights");
        return o;
    });

    criterion(2, "golden packing and embedding", 1, [] {
        Outcome o;
        PackingInstance p{5, R({3, 2, 2, 1, Rational(2, 3), Rational(2, 3), Rational(1, 3), Rational(1, 3)})};
        auto v = decide_packing(p);
        o.require(v.feasible, "packing infeasible");
        o.require(replay(v.certificate) == v.certificate.terminal, "trace does not replay");
        o.require(decide_embedding({omega1(), omega2()}).feasible, "embedding infeasible");
        return o;
    });

    criterion(3, "optimal scaling is exactly 1", 5, [] {
        Outcome o;
        EmbeddingProblem prob(omega1(), omega2());
        auto s = optimal_embedding_scale(prob, Rational(1, 100));
        o.require(s.lo_feasible && s.lo == 1, "lo = " + s.lo.str());
        o.require(s.hi == Rational(101, 100), "hi = " + s.hi.str());
        o.require(decide_embedding(prob).feasible, "infeasible at 1");
        o.require(!decide_embedding({scale(omega1(), Rational(101, 100)), omega2()}).feasible, "feasible at 101/100");
        return o;
    });

    criterion(4, "square and triangle targets coincide", 30, [] {
        Outcome o;
        auto square = ToricDomainSpec::polydisk(1, 1);
        auto tri = ToricDomainSpec::convex({P(0, 1), P(2, 0)});
        auto ws = convex_weights(square).weights, wt = convex_weights(tri).weights;
        o.require(*ws.head == *wt.head && ws.sorted() == wt.sorted(), "weights differ");
        Rng rng(2024);
        int feasible = 0;
        for (int t = 0; t < 25; ++t) {
            auto src = random_concave(rng);
            // Both targets have area 1; scale sources to area in [1/2, 3/2].
            Rational target_area(uniform_int(rng, 4, 12), 8);
            double r = std::sqrt((target_area / area(src)).to_double());
            Rational lam = simplest_between(Rational(static_cast<std::int64_t>(r * 990), 1000),
                                            Rational(static_cast<std::int64_t>(r * 1000), 1000));
            auto d = scale(src, lam);
            bool a = decide_embedding({d, square}).feasible;
            bool b = decide_embedding({d, tri}).feasible;
            o.require(a == b, "verdicts differ on source " + std::to_string(t));
            feasible += a;
        }
        o.detail = std::to_string(feasible) + "/25 feasible";
        return o;
    });

    criterion(5, "capacity formula equals lattice-path oracle for k <= 12", 300, [] {
        Outcome o;
        std::vector<std::pair<std::string, ToricDomainSpec>> doms{
            {"square", ToricDomainSpec::polydisk(1, 1)}, {"ball 2", ToricDomainSpec::ball(2)}, {"omega2", omega2()}};
        for (const auto& [name, d] : doms) {
            auto caps = convex_caps(d, 12);
            for (int k = 0; k <= 12; ++k) {
                auto orc = oracle_convex_cap(d, k);
                o.require(orc.value == caps[k], name + " k=" + std::to_string(k) + ": " + caps[k].str() + " vs " + orc.value.str());
            }
        }
        return o;
    });

    criterion(6, "ellipsoid capacities are sorted lattice sums", 10, [] {
        Outcome o;
        for (auto [p, q] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 3}, {3, 7}}) {
            auto caps = concave_caps(ToricDomainSpec::ellipsoid(p, q), 50);
            auto want = lattice_sums(p, q, 50);
            o.require(caps.values == want, "E(" + std::to_string(p) + "," + std::to_string(q) + ")");
        }
        return o;
    });

    criterion(7, "weight area identities on 100 random domains", 30, [] {
        Outcome o;
        Rng rng(99);
        for (int t = 0; t < 50; ++t) {
            auto c = random_concave(rng);
            o.require(sum_sq(concave_weights(c).weights.weights) == 2 * area(c), "concave " + std::to_string(t));
            auto v = random_convex(rng);
            auto w = convex_weights(v).weights;
            o.require(*w.head * *w.head - sum_sq(w.weights) == 2 * area(v), "convex " + std::to_string(t));
        }
        return o;
    });

    criterion(8, "sphere chain goldens and chain rules", 1, [] {
        Outcome o;
        auto cs = chain_classes_concave(concave_weights(omega1()).tree);
        std::vector<std::string> s, want_s{"E_1", "E_2 - E_1", "E_3 - E_2 - E_4 - E_5", "E_4", "E_5 - E_4"};
        for (const auto& c : cs.classes) s.push_back(c.str());
        o.require(s == want_s, "concave chain");
        auto cv = chain_classes_convex(convex_weights(omega2()).tree);
        std::vector<std::string> t, want_t{"Ehat_1", "Ehat_2 - Ehat_1 - Ehat_3", "Ehat_3", "L - Ehat_2 - Ehat_3"};
        for (const auto& c : cv.classes) t.push_back(c.str());
        o.require(t == want_t, "convex chain");
        o.require(symplectic_class({omega1(), omega2()}, 1).str() ==
                      "5 l - 2/3 e_1 - 2/3 e_2 - 2 e_3 - 1/3 e_4 - 1/3 e_5 - ehat_1 - 3 ehat_2 - 2 ehat_3",
                  "symplectic class");
        Rng rng(8);
        auto rules = [&](const SphereChain& ch, const std::string& what) {
            const auto& c = ch.classes;
            for (std::size_t i = 0; i < c.size(); ++i) {
                o.require(chern(c[i]) == intersection(c[i], c[i]) + 2, what + " adjunction");
                for (std::size_t j = i + 1; j < c.size(); ++j)
                    o.require(intersection(c[i], c[j]) == (j == i + 1 ? 1 : 0), what + " adjacency");
            }
        };
        rules(cs, "golden concave");
        rules(cv, "golden convex");
        for (int k = 0; k < 100; ++k) {
            rules(chain_classes_concave(concave_weights(random_concave(rng)).tree), "random concave");
            rules(chain_classes_convex(convex_weights(random_convex(rng)).tree), "random convex");
        }
        return o;
    });

    criterion(9, "Cremona verdicts never contradict capacities (K = 100)", 120, [] {
        Outcome o;
        Rng rng(31337);
        int feasible = 0, obstructed = 0;
        for (int t = 0; t < 50; ++t) {
            int n = static_cast<int>(uniform_int(rng, 1, 7));
            std::vector<Rational> balls;
            for (int i = 0; i < n; ++i) balls.push_back(positive_rational(rng, 8, 4));
            Rational b = positive_rational(rng, 16, 3);
            PackingInstance p{b, balls};
            bool ok = decide_packing(p).feasible;
            auto k = capacity_obstruction(p, 100);
            o.require(!(ok && k), "instance " + std::to_string(t) + " feasible but obstructed at k = " + std::to_string(k.value_or(-1)));
            feasible += ok;
            obstructed += k.has_value();
        }
        if (o.ok) o.detail = std::to_string(feasible) + " feasible, " + std::to_string(obstructed) + " obstructed";
        return o;
    });

    return failures == 0 ? 0 : 1;
}
