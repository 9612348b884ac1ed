#pragma once

#include "symext/entropy_value.hpp"
#include "symext/periodic.hpp"

#include <utility>
#include <vector>

namespace symext {

// Min over relative shifts of the mismatch density along a common period.
Rational dbar_periodic(const PeriodicOrbit& a, const PeriodicOrbit& b);

struct Mixture {
    std::vector<std::pair<Rational, PeriodicOrbit>> parts;
};

struct DbarBound {
    Rational value;
    // Coupling used: plan[i][j] is the mass moved from part i of the first mixture to part j of the second.
    std::vector<std::vector<Rational>> plan;
};

// Optimal transport between the component weights with costs dbar_periodic; an upper bound
// for the d-bar distance of the mixtures, never the distance itself.
DbarBound dbar_mixture(const Mixture& mu, const Mixture& nu);

// Exact min-cost transport for rational supplies/demands (both summing to the same total).
DbarBound min_cost_transport(const std::vector<Rational>& supply, const std::vector<Rational>& demand,
                             const std::vector<std::vector<Rational>>& cost);

}  // namespace symext
