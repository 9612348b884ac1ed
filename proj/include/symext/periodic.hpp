#pragma once

#include "symext/entropy_value.hpp"
#include "symext/symbolic.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace symext {

inline constexpr int kDefaultPeriodCap = 20;

class PeriodicOrbit {
public:
    // Canonicalizes to the least rotation; throws if `word` is not of minimal period |word|.
    PeriodicOrbit(std::shared_ptr<const Alphabet> alphabet, Word word);

    const Word& representative() const { return word_; }
    int minimal_period() const { return static_cast<int>(word_.size()); }
    const Alphabet& alphabet() const { return *alphabet_; }
    std::shared_ptr<const Alphabet> alphabet_ptr() const { return alphabet_; }
    // Symbol of the point whose coordinate 0 is representative()[0], at coordinate i.
    Symbol at(std::int64_t i) const;
    std::string str() const { return alphabet_->render(word_); }

    friend bool operator==(const PeriodicOrbit& a, const PeriodicOrbit& b) {
        return a.word_ == b.word_ && *a.alphabet_ == *b.alphabet_;
    }
    friend bool operator<(const PeriodicOrbit& a, const PeriodicOrbit& b) {
        return a.word_.size() != b.word_.size() ? a.word_.size() < b.word_.size() : a.word_ < b.word_;
    }

private:
    std::shared_ptr<const Alphabet> alphabet_;
    Word word_;
};

int minimal_period(const Word& w);
Word least_rotation(const Word& w);

// Orbits of minimal period exactly n, sorted by representative.
std::vector<PeriodicOrbit> enumerate_periodic(const SftSpec& sft, int n, int cap = kDefaultPeriodCap);

struct PerTable {
    std::map<int, std::uint64_t> counts;  // n -> #Per_n (points)
    int range() const { return counts.empty() ? 0 : counts.rbegin()->first; }
};

PerTable per_table(const SftSpec& sft, int N, int cap = kDefaultPeriodCap);

struct Capacities {
    Bracket p_sup;
    Bracket p_lim_estimate;  // max over the tail window [N-window+1, N]
    int window = 0;
    int range = 0;
};

inline constexpr int kDefaultCapacityWindow = 4;

Capacities capacities(const PerTable& table, int window = kDefaultCapacityWindow);

}  // namespace symext
