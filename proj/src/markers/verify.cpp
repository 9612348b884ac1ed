#include "symext/markers/verify.hpp"

#include "symext/errors.hpp"

#include <algorithm>
#include <map>

namespace symext {

std::string rule_name(Rule r) {
    switch (r) {
        case Rule::A: return "A";
        case Rule::B: return "B";
        case Rule::CRatio: return "C-ratio";
        case Rule::D: return "D";
        case Rule::E: return "E";
    }
    return "?";
}

Rule parse_rule(const std::string& name) {
    if (name == "A") return Rule::A;
    if (name == "B") return Rule::B;
    if (name == "C" || name == "C-ratio") return Rule::CRatio;
    if (name == "D") return Rule::D;
    if (name == "E") return Rule::E;
    throw ArgumentError("unknown marker rule '" + name + "'");
}

bool MarkerInvariantReport::pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const RuleVerdict& v) { return v.pass; });
}

const RuleVerdict& MarkerInvariantReport::get(Rule r) const {
    for (const auto& v : verdicts)
        if (v.rule == r) return v;
    throw ArgumentError("rule " + rule_name(r) + " was not verified");
}

namespace {

void fail(RuleVerdict& v, int row, int column, int gap, std::string detail) {
    if (!v.pass) return;
    v.pass = false;
    v.witness = Violation{row, column, gap, std::move(detail)};
}

bool flagged_periodic(const ArrayWindow& w, const Gap& g) {
    const int W = w.width();
    for (const auto& f : w.long_gaps) {
        if (f.row != g.row || f.start != g.left + 1 || (f.end != g.right && f.end != g.right % W)) continue;
        if (f.period >= 1 && matches_periodic(w, g.row, g.left + 1, g.right, f.period)) return true;
    }
    return false;
}

RuleVerdict check_a(const ArrayWindow& w, const RuleOptions& opt) {
    RuleVerdict v{Rule::A, true, std::nullopt, 0};
    for (int k = 1; k <= w.depth(); ++k) {
        const bool bounded = static_cast<int>(opt.gap_bounds.size()) >= k;
        for (const auto& g : interior_gaps(w, k)) {
            const int len = g.length();
            if (bounded) {
                auto [lo, hi] = opt.gap_bounds[static_cast<std::size_t>(k - 1)];
                if (len >= lo && len <= hi) continue;
                if (len > hi && flagged_periodic(w, g)) continue;
                fail(v, k, g.left, len, "gap outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
            } else {
                if (len < k) fail(v, k, g.left, len, "gap shorter than the row index");
                else if (len > 2 * k + 1 && !periodic_pattern(w, k, g.left + 1, g.right, k))
                    fail(v, k, g.left, len, "long gap without a periodic pattern of period < row index");
            }
        }
    }
    return v;
}

RuleVerdict check_b(const ArrayWindow& w) {
    RuleVerdict v{Rule::B, true, std::nullopt, 0};
    for (int k = 2; k <= w.depth(); ++k)
        for (int m : w.row_markers(k))
            if (!w.row_markers(k - 1).count(m)) fail(v, k, m, 0, "marker not aligned with a row-" + std::to_string(k - 1) + " marker");
    return v;
}

RuleVerdict check_c(const ArrayWindow& w, const RuleOptions& opt) {
    RuleVerdict v{Rule::CRatio, true, std::nullopt, 0};
    for (int k = 1; k <= w.depth(); ++k) {
        auto gaps = interior_gaps(w, k);
        if (gaps.empty()) continue;
        auto [mn, mx] = std::minmax_element(gaps.begin(), gaps.end(), [](const Gap& a, const Gap& b) { return a.length() < b.length(); });
        if (Rational(mn->length(), mx->length()) < opt.min_ratio)
            fail(v, k, mn->left, mn->length(),
                 "ratio " + std::to_string(mn->length()) + "/" + std::to_string(mx->length()) + " below " + to_string(opt.min_ratio));
    }
    return v;
}

RuleVerdict check_d(const ArrayWindow& w) {
    RuleVerdict v{Rule::D, true, std::nullopt, 0};
    bool deeper = false;
    for (int k = w.depth(); k >= 1; --k) {
        const bool here = !w.row_markers(k).empty();
        if (deeper && !here) fail(v, k, 0, 0, "row without markers above a marked row");
        deeper = deeper || here;
    }
    return v;
}

RuleVerdict check_e(const ArrayWindow& w) {
    RuleVerdict v{Rule::E, true, std::nullopt, 0};
    std::map<int, int> intrusions;
    for (const auto& [row, col] : w.intrusions) ++intrusions[row];
    for (int k = 1; k <= w.depth(); ++k) {
        int over = 0;
        for (const auto& g : interior_gaps(w, k)) {
            const int len = g.length();
            if (len < k) fail(v, k, g.left, len, "gap shorter than the row index");
            else if (len > 2 * k - 1 && ++over > intrusions[k])
                fail(v, k, g.left, len, "gap above 2k-1 not charged to an intrusion");
        }
        v.exceptions += over;
    }
    return v;
}

}  // namespace

MarkerInvariantReport verify_invariants(const ArrayWindow& w, const std::vector<Rule>& rules, const RuleOptions& options) {
    w.validate();
    MarkerInvariantReport r;
    for (Rule rule : rules) {
        switch (rule) {
            case Rule::A: r.verdicts.push_back(check_a(w, options)); break;
            case Rule::B: r.verdicts.push_back(check_b(w)); break;
            case Rule::CRatio: r.verdicts.push_back(check_c(w, options)); break;
            case Rule::D: r.verdicts.push_back(check_d(w)); break;
            case Rule::E: r.verdicts.push_back(check_e(w)); break;
        }
    }
    return r;
}

}  // namespace symext
