#pragma once
// Random depth <= 2 diagrams with threshold specs, for property and acceptance runs.

#include "symext/diagram/scenarios.hpp"

#include <random>

namespace gen {

using namespace symext;

struct RandomProblem {
    DiagramProblem problem;
    SpecTable extra;  // E = h + extra
};

inline Entropy pick_value(std::mt19937& rng, bool allow_inf = false) {
    static const Rational vals[] = {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
    if (allow_inf && rng() % 10 == 0) return Entropy::infinity();
    return Entropy(vals[rng() % 5]);
}

inline RandomProblem random_problem(std::mt19937& rng) {
    std::map<std::string, std::int64_t> mins{{"m", static_cast<std::int64_t>(rng() % 3)},
                                             {"j", static_cast<std::int64_t>(rng() % 3)}};
    std::vector<DiagramNode> nodes;
    std::vector<DiagramFamily> fams;
    auto kind = [&] { return rng() % 2 ? NodeKind::periodic : NodeKind::aperiodic; };
    const int shape = static_cast<int>(rng() % 4);
    if (shape == 0) {
        nodes = {{"A", 0, kind(), "m", {"m"}}, {"C", 1, kind(), "1", {}}};
        fams = {{"A", "m", "C", std::nullopt}};
        if (rng() % 2) {
            nodes.push_back({"D", 0, kind(), "m", {"m"}});
            fams.push_back({"D", "m", "C", std::nullopt});
        }
    } else {
        nodes = {{"A", 0, kind(), "m*j", {"m", "j"}}, {"B", 1, kind(), "m", {"m"}}, {"C", 2, kind(), "1", {}}};
        fams = {{"A", "j", "B", std::nullopt}, {"B", "m", "C", std::nullopt}};
        if (shape >= 2) {
            nodes.push_back({"D", 0, kind(), "m", {"m"}});
            fams.push_back({"D", "m", "C", std::nullopt});
        }
        if (shape == 3) {
            nodes.push_back({"F", 0, kind(), "j", {"m", "j"}});
            nodes.push_back({"G", 1, kind(), "m", {"m"}});
            fams.push_back({"F", "j", "G", std::nullopt});
            fams.push_back({"G", "m", "C", std::nullopt});
        }
    }
    std::optional<Entropy> p_sup;
    if (rng() % 2) p_sup = pick_value(rng);
    auto d = std::make_shared<MeasureDiagram>(mins, nodes, fams, p_sup);

    RandomProblem out{DiagramProblem{d, {}, {}, {}}, {}};
    for (const auto& n : d->nodes()) {
        auto subset = [&] {
            std::vector<std::string> ps;
            for (const auto& p : n.params)
                if (rng() % 2) ps.push_back(p);
            return ps;
        };
        const std::int64_t c = static_cast<std::int64_t>(rng() % 4);
        Threshold h{pick_value(rng), pick_value(rng), c, subset()};
        if (n.params.empty()) h.hi = h.lo;
        out.problem.h[n.id] = h;
        const Entropy floor_h = min(h.lo, h.hi);
        Entropy lo = pick_value(rng);
        if (floor_h < lo) lo = floor_h;
        out.problem.tails[n.id] = {lo, Entropy(0), static_cast<std::int64_t>(rng() % 4), n.params};
        Entropy pv = n.kind == NodeKind::periodic ? pick_value(rng) : Entropy(0);
        out.problem.per[n.id] = {pv, Entropy(0), static_cast<std::int64_t>(rng() % 4), n.params};
        out.extra[n.id] = {pick_value(rng, true), pick_value(rng, true), static_cast<std::int64_t>(rng() % 4), subset()};
    }
    return out;
}

}  // namespace gen
