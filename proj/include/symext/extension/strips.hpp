#pragma once

#include "symext/entropy_value.hpp"
#include "symext/periodic.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace symext {

// One period of a point of Per*_n, read from coordinate 0; row zero carries a marker at n - 1.
struct Strip {
    int width = 0;
    Word columns;
    int marker = 0;
};

struct StripSet {
    std::vector<Strip> strips;
    Bracket h_top;  // (1/n) log2 #strips
};

StripSet build_strips(const std::vector<PeriodicOrbit>& orbits, int n);

class HallInfeasible : public std::runtime_error {
public:
    HallInfeasible(std::vector<int> witness, std::vector<int> neighbourhood);
    // Left vertices whose joint neighbourhood is smaller than the set itself.
    const std::vector<int>& witness() const { return witness_; }
    const std::vector<int>& neighbourhood() const { return neighbourhood_; }

private:
    std::vector<int> witness_;
    std::vector<int> neighbourhood_;
};

// Left vertex i may take any right vertex in adj[i]; returns an injective choice.
std::vector<int> hall_match(const std::vector<std::vector<int>>& adj, int right_count);

// Word-level wrapper: every word must have length n.
std::vector<Word> hall_match_words(const std::vector<std::vector<Word>>& words_per_strip, int n);

}  // namespace symext
