#pragma once

#include "symext/entropy_value.hpp"
#include "symext/markers/window.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symext {

enum class Rule { A, B, CRatio, D, E };

std::string rule_name(Rule r);
Rule parse_rule(const std::string& name);

struct RuleOptions {
    // Rule A bounds per row; rows without bounds use "gap >= k, and gaps > 2k+1 must be periodic
    // with period < k".
    std::vector<std::pair<int, int>> gap_bounds;
    Rational min_ratio{0};  // rule C: min gap / max gap per row
};

struct Violation {
    int row = 0;
    int column = 0;  // left marker of the offending gap, or the offending marker
    int gap = 0;
    std::string detail;
};

struct RuleVerdict {
    Rule rule;
    bool pass = true;
    std::optional<Violation> witness;
    int exceptions = 0;  // rule E: gaps above 2k-1 charged to intrusions
};

struct MarkerInvariantReport {
    std::vector<RuleVerdict> verdicts;

    bool pass() const;
    const RuleVerdict& get(Rule r) const;
};

MarkerInvariantReport verify_invariants(const ArrayWindow& w, const std::vector<Rule>& rules, const RuleOptions& options = {});

}  // namespace symext
