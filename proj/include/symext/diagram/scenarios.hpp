#pragma once

#include "symext/diagram/analysis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symext {

struct DiagramProblem {
    std::shared_ptr<const MeasureDiagram> diagram;
    SpecTable h;
    SpecTable tails;
    SpecTable per;

    Fn h_fn() const { return Fn::function(diagram, h); }
    SeqOnDiagram tails_seq() const { return SeqOnDiagram::make(diagram, tails); }
    SeqOnDiagram per_seq() const { return SeqOnDiagram::make(diagram, per); }
};

// Two-stage periodic clusters over a zero-entropy system; the root is "C".
DiagramProblem example1();
// Periodic clusters A(m,p) -> B(m) -> C, where B carries entropy h0 whose tails last for k < m.
DiagramProblem example2(const Rational& h0);
// Single-stage: periodic A(m) and entropy-h0 B(m) both accumulate at C.
DiagramProblem example3(const Rational& h0);
// Same shape as example1 with single points in place of clusters.
DiagramProblem pickupsticks();
// One aperiodic node with constant entropy and no tails.
DiagramProblem trivial_diagram(const Rational& h);

struct ScenarioCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct ScenarioResult {
    std::string name;
    std::optional<Rational> h0;
    DiagramProblem problem;
    DiagramReport report;
    std::optional<Fn> repair;  // period-tail repair, where the scenario asks for it
    std::vector<ScenarioCheck> checks;

    bool pass() const;
};

const std::vector<std::string>& scenario_names();
// Throws ArgumentError for unknown names or a missing h0 where one is needed.
ScenarioResult run_scenario(const std::string& name, std::optional<Rational> h0);

}  // namespace symext
