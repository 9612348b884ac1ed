#include "symext/diagram/period_tail.hpp"

#include "symext/errors.hpp"

#include <algorithm>

namespace symext {

namespace {

std::vector<Symbol> top_rows(const SftSpec& sft, const Word& period, int k) {
    const int rows = std::max<int>(1, static_cast<int>(sft.rows().size()));
    const int depth = std::min(k, rows);
    std::vector<Symbol> out;
    for (Symbol c : period)
        for (int r = 0; r < depth; ++r) out.push_back(sft.rows().empty() ? c : sft.row_symbol(c, r));
    return out;
}

Word rotate(const Word& w, std::size_t s) {
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[(i + s) % w.size()];
    return out;
}

}  // namespace

std::vector<PeriodTail> period_tail_from_system(const SftSpec& sft, const std::vector<PeriodicOrbit>& selection, int K) {
    if (K < 0) throw ArgumentError("depth must be nonnegative");
    for (const auto& o : selection) {
        if (!(o.alphabet() == sft.alphabet())) throw ArgumentError("orbit " + o.str() + " uses another alphabet");
        if (!sft.periodic_admissible(o.representative())) throw ArgumentError("orbit " + o.str() + " is not in the system");
    }
    std::vector<PeriodTail> out;
    for (const auto& o : selection) {
        const int n = o.minimal_period();
        PeriodTail t{o, {}};
        for (int k = 0; k <= K; ++k) {
            const auto name = top_rows(sft, o.representative(), k);
            std::uint64_t count = 0;
            for (const auto& other : selection) {
                if (other.minimal_period() != n) continue;
                for (int s = 0; s < n; ++s)
                    if (top_rows(sft, rotate(other.representative(), static_cast<std::size_t>(s)), k) == name) ++count;
            }
            t.by_k.push_back(log2_bracket(count, n));
        }
        out.push_back(std::move(t));
    }
    return out;
}

Bracket period_tail_mixture(const std::vector<PeriodTail>& tails,
                            const std::vector<std::pair<Rational, PeriodicOrbit>>& mixture, int k) {
    Rational total{0};
    Bracket acc{Rational(0), Rational(0), true};
    for (const auto& [w, o] : mixture) {
        auto it = std::find_if(tails.begin(), tails.end(), [&](const PeriodTail& t) { return t.orbit == o; });
        if (it == tails.end()) throw ArgumentError("orbit " + o.str() + " is not in the selection");
        if (k < 0 || k >= static_cast<int>(it->by_k.size())) throw ArgumentError("depth " + std::to_string(k) + " not computed");
        if (w < Rational(0)) throw ArgumentError("mixture weights must be nonnegative");
        total = total + w;
        acc = acc + scale(it->by_k[static_cast<std::size_t>(k)], w);
    }
    if (total != Rational(1)) throw ArgumentError("mixture weights must sum to 1");
    return acc;
}

}  // namespace symext
