#pragma once

#include "symext/symbolic.hpp"

#include <vector>

namespace symext {

struct PrefixEntry {
    Word prefix;
    int free_count = 0;
};

struct PrefixAllocation {
    int s = 2;
    int n = 0;
    std::vector<PrefixEntry> entries;  // in input order
};

// Entry i gets a prefix of length n - exponents[i]; prefixes are pairwise incomparable.
// Canonical: blocks laid out in order of decreasing exponent (stable), lexicographically.
PrefixAllocation prefix_allocate(int s, int n, const std::vector<int>& exponents);

bool is_prefix_of(const Word& a, const Word& b);

}  // namespace symext
