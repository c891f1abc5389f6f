#include "tde/ball_packing.hpp"

#include <algorithm>
#include <stdexcept>

namespace tde {

void PackingInstance::check() const {
    if (target.sign() <= 0) throw std::invalid_argument("packing target must be positive");
    for (const auto& a : balls)
        if (a.sign() <= 0) throw std::invalid_argument("ball capacities must be positive");
}

std::string PackingInstance::display() const {
    std::string s = "(" + target.str() + ";";
    for (std::size_t i = 0; i < balls.size(); ++i) s += (i ? ", " : " ") + balls[i].str();
    return s + ")";
}

CremonaVector CremonaVector::normalized(Rational b, std::vector<Rational> a) {
    while (a.size() < 3) a.emplace_back(0);
    std::sort(a.begin(), a.end(), [](const Rational& x, const Rational& y) { return y < x; });
    return {std::move(b), std::move(a)};
}

Rational CremonaVector::defect() const { return a[0] + a[1] + a[2] - b; }

Rational CremonaVector::invariant() const {
    Rational s = b * b;
    for (const auto& x : a) s -= x * x;
    return s;
}

bool CremonaVector::has_negative() const {
    return b.sign() < 0 || std::any_of(a.begin(), a.end(), [](const Rational& x) { return x.sign() < 0; });
}

namespace {

CremonaVector move(const CremonaVector& v, const Rational& d) {
    auto a = v.a;
    for (int i = 0; i < 3; ++i) a[i] -= d;
    return CremonaVector::normalized(v.b - d, std::move(a));
}

}  // namespace

CremonaResult cremona_reduce(const Rational& b, const std::vector<Rational>& a, std::size_t max_moves) {
    if (b.sign() <= 0) throw std::invalid_argument("Cremona reduction needs b > 0");
    for (const auto& x : a)
        if (x.sign() < 0) throw std::invalid_argument("Cremona reduction needs nonnegative entries");
    CremonaResult r;
    r.start = CremonaVector::normalized(b, a);
    r.terminal = r.start;
    const Rational inv = r.start.invariant();
    for (;;) {
        Rational d = r.terminal.defect();
        if (d.sign() <= 0) {
            r.reduced = true;
            break;
        }
        if (r.trace.size() >= max_moves)
            throw ResourceLimit("Cremona reduction exceeded " + std::to_string(max_moves) + " moves");
        r.terminal = move(r.terminal, d);
        if (r.terminal.invariant() != inv) throw std::logic_error("Cremona move changed b^2 - sum a^2");
        r.trace.push_back({d, r.terminal});
        if (r.terminal.has_negative()) break;
    }
    return r;
}

CremonaVector replay(const CremonaResult& result) {
    CremonaVector v = result.start;
    for (const auto& m : result.trace) {
        if (m.delta != v.defect() || m.delta.sign() <= 0) throw std::invalid_argument("trace delta does not match");
        v = move(v, m.delta);
        if (!(v == m.after)) throw std::invalid_argument("trace vector does not match");
    }
    return v;
}

std::string to_string(PackingFailure f) {
    switch (f) {
        case PackingFailure::None: return "none";
        case PackingFailure::NegativeEntry: return "negative-entry";
        case PackingFailure::Volume: return "volume";
    }
    return "unknown";
}

Verdict decide_packing(const PackingInstance& p, std::size_t max_moves) {
    p.check();
    Verdict v;
    v.certificate = cremona_reduce(p.target, p.balls, max_moves);
    v.volume_slack = v.certificate.start.invariant();
    if (v.certificate.terminal.has_negative())
        v.failure = PackingFailure::NegativeEntry;
    else if (v.volume_slack.sign() < 0)
        v.failure = PackingFailure::Volume;
    v.feasible = v.failure == PackingFailure::None;
    return v;
}

ScaleBracket optimal_scale(const PackingInstance& p, const std::vector<std::size_t>& scaled, const Rational& precision,
                           std::size_t max_moves) {
    p.check();
    if (precision.sign() <= 0) throw std::invalid_argument("precision must be positive");
    if (scaled.empty()) throw std::invalid_argument("no balls to scale");
    std::vector<bool> in(p.balls.size(), false);
    for (auto i : scaled) {
        if (i >= p.balls.size()) throw std::invalid_argument("scaled ball index out of range");
        in[i] = true;
    }
    auto feasible = [&](const Rational& lambda) {
        PackingInstance q{p.target, {}};
        for (std::size_t i = 0; i < p.balls.size(); ++i) {
            Rational a = in[i] ? lambda * p.balls[i] : p.balls[i];
            if (a.sign() > 0) q.balls.push_back(a);
        }
        return decide_packing(q, max_moves).feasible;
    };
    if (!feasible(0)) return {Rational(0), Rational(0), false};

    Rational lo(0), hi(1);
    while (feasible(hi)) {
        lo = hi;
        hi *= 2;
    }
    // Probe the simplest rational in the middle third so exact optima with
    // small denominators are hit directly.
    while (hi - lo > precision) {
        Rational third = (hi - lo) / 3;
        Rational mid = simplest_between(lo + third, hi - third);
        if (feasible(mid))
            lo = mid;
        else
            hi = mid;
    }
    Rational simple = simplest_between(lo, hi);
    if (simple != hi && feasible(simple)) lo = simple;
    if (!feasible(lo + precision)) hi = lo + precision;
    return {lo, hi, true};
}

std::optional<int> capacity_obstruction(const PackingInstance& p, int K) {
    p.check();
    auto rep = seq_leq(ball_union_caps(p.balls, K), ball_caps(p.target, K), K);
    return rep.first_violation;
}

}  // namespace tde
