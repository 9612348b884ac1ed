#include "symext/diagram/scenarios.hpp"

#include "symext/errors.hpp"

#include <algorithm>

namespace symext {

namespace {

Threshold step(Entropy lo, std::int64_t c, std::vector<std::string> params) { return {lo, Entropy(0), c, std::move(params)}; }
Threshold zero() { return Threshold::constant(Entropy(0)); }

DiagramProblem two_stage(const std::string& a, const std::string& b) {
    auto d = std::make_shared<MeasureDiagram>(
        std::map<std::string, std::int64_t>{{"m", 1}, {"j", 2}},
        std::vector<DiagramNode>{{a, 0, NodeKind::periodic, "m*j", {"m", "j"}},
                                 {b, 1, NodeKind::periodic, "m", {"m"}},
                                 {"C", 2, NodeKind::periodic, "1", {}}},
        std::vector<DiagramFamily>{{a, "j", b, std::nullopt}, {b, "m", "C", std::nullopt}}, Entropy(1));
    DiagramProblem p{d, {}, {}, {}};
    for (const auto& id : {a, b, std::string("C")}) {
        p.h[id] = zero();
        p.tails[id] = zero();
    }
    p.per[a] = step(Entropy(1), 0, {"j"});
    p.per[b] = step(Entropy(1), 0, {"m"});
    p.per["C"] = zero();
    return p;
}

Instance root(const DiagramProblem& p) { return Instance{p.diagram->node_index("C"), {}}; }

struct Checker {
    std::vector<ScenarioCheck>& out;
    void eq(const std::string& name, const Entropy& expected, const Entropy& actual) {
        out.push_back({name, expected.str(), actual.str(), expected == actual});
    }
    void truth(const std::string& name, bool expected, bool actual) {
        out.push_back({name, expected ? "true" : "false", actual ? "true" : "false", expected == actual});
    }
    void text(const std::string& name, const std::string& expected, const std::string& actual) {
        out.push_back({name, expected, actual, expected == actual});
    }
};

Entropy uniform(const Fn& f, const std::string& node) {
    for (const auto& r : tabulate(f))
        if (r.node == node) {
            if (r.lo != r.hi) throw InternalError("value at " + node + " varies across instances");
            return r.lo;
        }
    throw InternalError("no node " + node);
}

void check_two_stage(ScenarioResult& r, const std::string& a, const std::string& b) {
    Checker c{r.checks};
    const auto& p = r.problem;
    const auto per = p.per_seq();
    const Fn zero_fn = Fn::constant(p.diagram, Entropy(0));
    const auto u2 = minimal_repair(per, zero_fn);
    r.repair = u2.u;
    c.eq("u1 at " + a, Entropy(0), uniform(r.report.u1, a));
    c.eq("u1 at " + b, Entropy(1), uniform(r.report.u1, b));
    c.eq("u1 at C", Entropy(1), r.report.u1.at(root(p)));
    const auto v = is_repair(r.report.u1, per);
    c.truth("u1 repairs the period tails", false, v.pass);
    c.text("repair failure witness", "C", v.witness_label);
    c.eq("repair residual at C", Entropy(1), v.residual);
    c.eq("minimal period-tail repair at C", Entropy(2), u2.u.at(root(p)));
    c.eq("minimal period-tail repair at " + b, Entropy(1), uniform(u2.u, b));
    c.eq("minimal period-tail repair at " + a, Entropy(0), uniform(u2.u, a));
    c.eq("topological entropy of the embedding extension", Entropy(1), r.report.sup_h_emb);
    c.truth("bounds between h_sex, u1 and h_emb", true, r.report.bounds_hold());
}

}  // namespace

DiagramProblem example1() { return two_stage("A", "B"); }
DiagramProblem pickupsticks() { return two_stage("P", "Q"); }

DiagramProblem example2(const Rational& h0) {
    auto d = std::make_shared<MeasureDiagram>(
        std::map<std::string, std::int64_t>{{"m", 1}, {"p", 1}},
        std::vector<DiagramNode>{{"A", 0, NodeKind::periodic, "p", {"m", "p"}},
                                 {"B", 1, NodeKind::aperiodic, "", {"m"}},
                                 {"C", 2, NodeKind::periodic, "1", {}}},
        std::vector<DiagramFamily>{{"A", "p", "B", std::nullopt}, {"B", "m", "C", std::nullopt}}, Entropy(1));
    DiagramProblem p{d, {}, {}, {}};
    p.h = {{"A", zero()}, {"B", Threshold::constant(Entropy(h0))}, {"C", zero()}};
    p.tails = {{"A", zero()}, {"B", step(Entropy(h0), 0, {"m"})}, {"C", zero()}};
    p.per = {{"A", step(Entropy(1), 1, {"m", "p"})}, {"B", zero()}, {"C", zero()}};
    return p;
}

DiagramProblem example3(const Rational& h0) {
    auto d = std::make_shared<MeasureDiagram>(
        std::map<std::string, std::int64_t>{{"m", 1}},
        std::vector<DiagramNode>{{"A", 0, NodeKind::periodic, "m", {"m"}},
                                 {"B", 0, NodeKind::aperiodic, "", {"m"}},
                                 {"C", 1, NodeKind::periodic, "1", {}}},
        std::vector<DiagramFamily>{{"A", "m", "C", std::nullopt}, {"B", "m", "C", std::nullopt}}, Entropy(1));
    DiagramProblem p{d, {}, {}, {}};
    p.h = {{"A", zero()}, {"B", Threshold::constant(Entropy(h0))}, {"C", zero()}};
    p.tails = {{"A", zero()}, {"B", step(Entropy(h0), 0, {"m"})}, {"C", zero()}};
    p.per = {{"A", step(Entropy(1), 1, {"m"})}, {"B", zero()}, {"C", zero()}};
    return p;
}

DiagramProblem trivial_diagram(const Rational& h) {
    auto d = std::make_shared<MeasureDiagram>(std::map<std::string, std::int64_t>{},
                                              std::vector<DiagramNode>{{"X", 0, NodeKind::aperiodic, "", {}}},
                                              std::vector<DiagramFamily>{}, Entropy(0));
    return DiagramProblem{d, {{"X", Threshold::constant(Entropy(h))}}, {{"X", zero()}}, {{"X", zero()}}};
}

bool ScenarioResult::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const ScenarioCheck& c) { return c.pass; });
}

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names{"example1", "example2", "example3", "pickupsticks", "trivial"};
    return names;
}

ScenarioResult run_scenario(const std::string& name, std::optional<Rational> h0) {
    const bool needs_h0 = name == "example2" || name == "example3";
    if (needs_h0 && !h0) throw ArgumentError("scenario '" + name + "' needs --h0");
    if (h0 && *h0 < Rational(0)) throw ArgumentError("h0 must be nonnegative");
    ScenarioResult r;
    r.name = name;
    r.h0 = h0;
    if (name == "example1") r.problem = example1();
    else if (name == "pickupsticks") r.problem = pickupsticks();
    else if (name == "example2") r.problem = example2(*h0);
    else if (name == "example3") r.problem = example3(*h0);
    else if (name == "trivial") r.problem = trivial_diagram(h0.value_or(Rational(1)));
    else throw ArgumentError("unknown scenario '" + name + "'");

    const auto& p = r.problem;
    r.report = analyze_diagram(p.h_fn(), p.tails_seq(), p.per_seq());
    Checker c{r.checks};
    const Instance top = name == "trivial" ? Instance{0, {}} : root(p);
    const DiagramReport& rep = r.report;

    if (name == "example1") check_two_stage(r, "A", "B");
    else if (name == "pickupsticks") check_two_stage(r, "P", "Q");
    else if (name == "example2") {
        const Entropy e0(*h0);
        c.eq("h_sex at C", e0, rep.h_sex.at(top));
        c.eq("u1 at C", Entropy(1), rep.u1.at(top));
        c.eq("h_emb at C", e0 + Entropy(1), rep.h_emb.at(top));
        c.truth("h_emb = h_sex + u1 at C", true, rep.h_emb.at(top) == rep.h_sex.at(top) + rep.u1.at(top));
        c.eq("P*", Entropy(1), rep.p_star);
        c.truth("h_emb at C exceeds max(h_sex, h + u1)", true,
                rep.h_emb.at(top) > max(rep.h_sex.at(top), rep.h.at(top) + rep.u1.at(top)));
        c.eq("h_emb(X)", e0 + Entropy(1), rep.sup_h_emb);
        c.truth("bounds between h_sex, u1 and h_emb", true, rep.bounds_hold());
    } else if (name == "example3") {
        const Entropy e0(*h0);
        c.eq("h_sex at C", e0, rep.h_sex.at(top));
        c.eq("u1 at C", Entropy(1), rep.u1.at(top));
        c.eq("u1 away from C", Entropy(0), max(uniform(rep.u1, "A"), uniform(rep.u1, "B")));
        c.eq("h_emb at C", max(e0, Entropy(1)), rep.h_emb.at(top));
        c.truth("h_emb at C below h_sex + u1", true, rep.h_emb.at(top) < rep.h_sex.at(top) + rep.u1.at(top));
        c.eq("h_emb(X)", max(e0, Entropy(1)), rep.sup_h_emb);
        c.truth("bounds between h_sex, u1 and h_emb", true, rep.bounds_hold());
    } else {
        const Entropy h = rep.h.at(top);
        c.eq("h_sex", h, rep.h_sex.at(top));
        c.eq("h_emb", h, rep.h_emb.at(top));
        c.text("generator cardinality", std::to_string(floor_pow2(h.value()) + 1),
               rep.cardinality ? std::to_string(*rep.cardinality) : "none");
    }
    return r;
}

}  // namespace symext
