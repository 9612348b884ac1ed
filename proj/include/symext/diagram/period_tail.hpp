#pragma once

#include "symext/entropy_value.hpp"
#include "symext/periodic.hpp"

#include <vector>

namespace symext {

// Per selected orbit: (1/n) log2 of how many selected period-n points share the top-k-row
// sequence of the orbit's base point, for k = 0..K.
struct PeriodTail {
    PeriodicOrbit orbit;
    std::vector<Bracket> by_k;
};

std::vector<PeriodTail> period_tail_from_system(const SftSpec& sft, const std::vector<PeriodicOrbit>& selection, int K);

// Harmonic value on a rational mixture of selected orbits at depth k.
Bracket period_tail_mixture(const std::vector<PeriodTail>& tails,
                            const std::vector<std::pair<Rational, PeriodicOrbit>>& mixture, int k);

}  // namespace symext
