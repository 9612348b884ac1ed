#include "symext/extension/strips.hpp"

#include "symext/errors.hpp"

#include <algorithm>
#include <map>

namespace symext {

StripSet build_strips(const std::vector<PeriodicOrbit>& orbits, int n) {
    if (n < 1) throw ArgumentError("strip width must be positive");
    StripSet out;
    for (const auto& o : orbits) {
        if (o.minimal_period() != n)
            throw ArgumentError("orbit " + o.str() + " has minimal period " + std::to_string(o.minimal_period()) +
                                ", expected " + std::to_string(n));
        const Word& w = o.representative();
        for (int shift = 0; shift < n; ++shift) {
            Strip s{n, {}, n - 1};
            for (int i = 0; i < n; ++i) s.columns.push_back(w[static_cast<std::size_t>((i + shift) % n)]);
            out.strips.push_back(std::move(s));
        }
    }
    out.h_top = out.strips.empty() ? Bracket{Rational(0), Rational(0), true} : log2_bracket(out.strips.size(), n);
    return out;
}

HallInfeasible::HallInfeasible(std::vector<int> witness, std::vector<int> neighbourhood)
    : std::runtime_error("Hall condition fails: " + std::to_string(witness.size()) + " strips share " +
                         std::to_string(neighbourhood.size()) + " words"),
      witness_(std::move(witness)),
      neighbourhood_(std::move(neighbourhood)) {}

namespace {

struct Kuhn {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> match_right;  // right -> left or -1
    std::vector<char> seen_right;

    bool augment(int u) {
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (seen_right[static_cast<std::size_t>(v)]) continue;
            seen_right[static_cast<std::size_t>(v)] = 1;
            const int w = match_right[static_cast<std::size_t>(v)];
            if (w < 0 || augment(w)) {
                match_right[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        return false;
    }
};

}  // namespace

std::vector<int> hall_match(const std::vector<std::vector<int>>& adj, int right_count) {
    for (const auto& row : adj)
        for (int v : row)
            if (v < 0 || v >= right_count) throw ArgumentError("right vertex " + std::to_string(v) + " out of range");
    Kuhn k{adj, std::vector<int>(static_cast<std::size_t>(right_count), -1), {}};
    for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
        k.seen_right.assign(static_cast<std::size_t>(right_count), 0);
        if (k.augment(u)) continue;
        // Every right vertex reached is matched into the reached left set, so |N(S)| = |S| - 1.
        std::vector<int> left{u}, right;
        for (int v = 0; v < right_count; ++v)
            if (k.seen_right[static_cast<std::size_t>(v)]) {
                right.push_back(v);
                left.push_back(k.match_right[static_cast<std::size_t>(v)]);
            }
        std::sort(left.begin(), left.end());
        throw HallInfeasible(std::move(left), std::move(right));
    }
    std::vector<int> out(adj.size(), -1);
    for (int v = 0; v < right_count; ++v)
        if (k.match_right[static_cast<std::size_t>(v)] >= 0) out[static_cast<std::size_t>(k.match_right[static_cast<std::size_t>(v)])] = v;
    return out;
}

std::vector<Word> hall_match_words(const std::vector<std::vector<Word>>& words_per_strip, int n) {
    std::map<Word, int> ids;
    std::vector<Word> words;
    std::vector<std::vector<int>> adj;
    for (const auto& ws : words_per_strip) {
        std::vector<int> row;
        for (const auto& w : ws) {
            if (static_cast<int>(w.size()) != n)
                throw ArgumentError("word of length " + std::to_string(w.size()) + ", expected " + std::to_string(n));
            auto [it, fresh] = ids.emplace(w, static_cast<int>(words.size()));
            if (fresh) words.push_back(w);
            row.push_back(it->second);
        }
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        adj.push_back(std::move(row));
    }
    const auto m = hall_match(adj, static_cast<int>(words.size()));
    std::vector<Word> out;
    for (int v : m) out.push_back(words[static_cast<std::size_t>(v)]);
    return out;
}

}  // namespace symext
