#include "symext/periodic.hpp"

#include "symext/errors.hpp"

#include <algorithm>
#include <cmath>

namespace symext {

int minimal_period(const Word& w) {
    const int n = static_cast<int>(w.size());
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        bool periodic = true;
        for (int i = d; i < n && periodic; ++i) periodic = w[static_cast<std::size_t>(i)] == w[static_cast<std::size_t>(i - d)];
        if (periodic) return d;
    }
    return n;
}

Word least_rotation(const Word& w) {
    const std::size_t n = w.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t i = 0; i < n; ++i) {
            auto a = w[(r + i) % n], b = w[(best + i) % n];
            if (a != b) {
                if (a < b) best = r;
                break;
            }
        }
    }
    Word out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = w[(best + i) % n];
    return out;
}

PeriodicOrbit::PeriodicOrbit(std::shared_ptr<const Alphabet> alphabet, Word word) : alphabet_(std::move(alphabet)) {
    if (word.empty()) throw ArgumentError("empty periodic word");
    for (Symbol a : word)
        if (a < 0 || a >= alphabet_->size()) throw ArgumentError("periodic word uses a symbol outside the alphabet");
    if (symext::minimal_period(word) != static_cast<int>(word.size())) throw ArgumentError("word is not of minimal period " + std::to_string(word.size()));
    word_ = least_rotation(word);
}

Symbol PeriodicOrbit::at(std::int64_t i) const {
    const auto n = static_cast<std::int64_t>(word_.size());
    return word_[static_cast<std::size_t>(((i % n) + n) % n)];
}

namespace {

bool is_least_rotation(const Word& w) {
    const std::size_t n = w.size();
    for (std::size_t r = 1; r < n; ++r)
        for (std::size_t i = 0; i < n; ++i) {
            auto a = w[(r + i) % n], b = w[i];
            if (a != b) {
                if (a < b) return false;
                break;
            }
        }
    return true;
}

}  // namespace

std::vector<PeriodicOrbit> enumerate_periodic(const SftSpec& sft, int n, int cap) {
    if (n < 1) throw ArgumentError("period must be positive");
    if (n > cap) throw ResourceError("period " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    const int s = sft.alphabet().size();
    if (std::pow(double(s), n) > double(1u << 28)) throw ResourceError("enumeration space alphabet^n exceeds 2^28");

    std::vector<PeriodicOrbit> out;
    Word w;
    w.reserve(static_cast<std::size_t>(n));
    // Depth-first with pruning on forbidden factors; the wrap-around is checked at the leaves.
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(w.size()) == n) {
            // Least-rotation words start with their smallest symbol, cheap pre-filter.
            if (!is_least_rotation(w) || minimal_period(w) != n) return;
            if (!sft.periodic_admissible(w)) return;
            out.emplace_back(sft.alphabet_ptr(), w);
            return;
        }
        for (Symbol a = 0; a < s; ++a) {
            if (!w.empty() && a < w.front()) continue;
            w.push_back(a);
            if (sft.admissible_at(w, w.size())) self(self);
            w.pop_back();
        }
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

PerTable per_table(const SftSpec& sft, int N, int cap) {
    if (N < 1) throw ArgumentError("table range must be positive");
    if (N > cap) throw ResourceError("table range " + std::to_string(N) + " exceeds cap " + std::to_string(cap));
    PerTable t;
    for (int n = 1; n <= N; ++n) t.counts[n] = static_cast<std::uint64_t>(n) * enumerate_periodic(sft, n, cap).size();
    return t;
}

Capacities capacities(const PerTable& table, int window) {
    if (table.counts.empty()) throw ArgumentError("empty periodic table");
    if (window < 1) throw ArgumentError("capacity window must be positive");
    Capacities c;
    c.range = table.range();
    c.window = std::min(window, c.range);
    std::optional<Bracket> sup, lim;
    for (const auto& [n, count] : table.counts) {
        if (count % static_cast<std::uint64_t>(n)) throw ArgumentError("count at period " + std::to_string(n) + " is not a multiple of n");
        if (count == 0) continue;
        Bracket b = log2_bracket(count, n);
        sup = sup ? max(*sup, b) : b;
        if (n > c.range - c.window) lim = lim ? max(*lim, b) : b;
    }
    c.p_sup = sup.value_or(Bracket{});
    c.p_lim_estimate = lim.value_or(Bracket{});
    return c;
}

}  // namespace symext
