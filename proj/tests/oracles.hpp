#pragma once
// Independent brute-force references used by the unit and acceptance suites.

#include "symext/entropy_value.hpp"
#include "symext/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

namespace oracle {

using symext::Word;

inline std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline int mobius(int n) {
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        mu = -mu;
    }
    return n > 1 ? -mu : mu;
}

// Points of minimal period n in the full s-shift.
inline std::int64_t necklace_points(int s, int n) {
    std::int64_t total = 0;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0) total += mobius(d) * ipow(s, n / d);
    return total;
}

inline Word word_from_index(std::int64_t idx, int s, int n) {
    Word w(static_cast<std::size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        w[static_cast<std::size_t>(i)] = static_cast<int>(idx % s);
        idx /= s;
    }
    return w;
}

// Cyclic check of every forbidden word against the infinite repetition, without the library.
inline bool cyclic_ok(const Word& w, const std::vector<Word>& forbidden) {
    const std::size_t n = w.size();
    for (const auto& f : forbidden)
        for (std::size_t start = 0; start < n; ++start) {
            bool hit = true;
            for (std::size_t i = 0; i < f.size() && hit; ++i) hit = w[(start + i) % n] == f[i];
            if (hit) return false;
        }
    return true;
}

inline bool has_smaller_period(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = w[i] == w[(i + d) % n];
        if (ok) return true;
    }
    return false;
}

// #points of minimal period n by exhaustive scan of all s^n words.
inline std::int64_t brute_min_period_points(int s, const std::vector<Word>& forbidden, int n) {
    std::int64_t count = 0;
    for (std::int64_t idx = 0; idx < ipow(s, n); ++idx) {
        Word w = word_from_index(idx, s, n);
        if (cyclic_ok(w, forbidden) && !has_smaller_period(w)) ++count;
    }
    return count;
}

// #fixed points of sigma^n by exhaustive scan.
inline std::int64_t brute_fixed_points(int s, const std::vector<Word>& forbidden, int n) {
    std::int64_t count = 0;
    for (std::int64_t idx = 0; idx < ipow(s, n); ++idx)
        if (cyclic_ok(word_from_index(idx, s, n), forbidden)) ++count;
    return count;
}

inline std::int64_t lucas(int n) {
    std::int64_t a = 2, b = 1;
    for (int i = 0; i < n; ++i) {
        std::int64_t c = a + b;
        a = b;
        b = c;
    }
    return a;
}

// d-bar between periodic orbits by scanning every relative shift of their words directly.
inline symext::Rational brute_dbar(const Word& a, const Word& b) {
    const std::int64_t p = static_cast<std::int64_t>(a.size()), q = static_cast<std::int64_t>(b.size());
    std::int64_t l = p * q;  // any common period works
    std::int64_t best = l;
    for (std::int64_t r = 0; r < l; ++r) {
        std::int64_t miss = 0;
        for (std::int64_t i = 0; i < l; ++i) miss += a[static_cast<std::size_t>(i % p)] != b[static_cast<std::size_t>((i + r) % q)];
        best = std::min(best, miss);
    }
    return symext::Rational(best, l);
}

// Exhaustive search for a system of distinct representatives.
inline bool brute_sdr(const std::vector<std::vector<int>>& adj, std::size_t i, std::vector<char>& used) {
    if (i == adj.size()) return true;
    for (int v : adj[i]) {
        if (used[static_cast<std::size_t>(v)]) continue;
        used[static_cast<std::size_t>(v)] = 1;
        if (brute_sdr(adj, i + 1, used)) return true;
        used[static_cast<std::size_t>(v)] = 0;
    }
    return false;
}

inline bool brute_sdr(const std::vector<std::vector<int>>& adj, int right_count) {
    std::vector<char> used(static_cast<std::size_t>(right_count), 0);
    return brute_sdr(adj, 0, used);
}

// Words of length n over s symbols that start with `prefix`.
inline std::set<Word> cylinder(const Word& prefix, int s, int n) {
    std::set<Word> out;
    for (std::int64_t idx = 0; idx < ipow(s, n); ++idx) {
        Word w = word_from_index(idx, s, n);
        if (std::equal(prefix.begin(), prefix.end(), w.begin())) out.insert(w);
    }
    return out;
}

}  // namespace oracle
