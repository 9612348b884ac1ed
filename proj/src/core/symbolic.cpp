#include "symext/symbolic.hpp"

#include "symext/errors.hpp"

#include <algorithm>
#include <set>

namespace symext {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    if (symbols_.empty()) throw ArgumentError("alphabet must have at least one symbol");
    std::set<std::string> seen;
    for (const auto& s : symbols_) {
        if (s.empty()) throw ArgumentError("empty symbol name");
        if (!seen.insert(s).second) throw ArgumentError("duplicate symbol '" + s + "'");
        if (s.size() != 1) single_char_ = false;
    }
}

Alphabet Alphabet::of_size(int s) {
    static const std::string digits = "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
    if (s < 1 || s > static_cast<int>(digits.size())) throw ArgumentError("unsupported alphabet size");
    std::vector<std::string> names;
    for (int i = 0; i < s; ++i) names.emplace_back(1, digits[static_cast<std::size_t>(i)]);
    return Alphabet(std::move(names));
}

Alphabet Alphabet::product(const std::vector<Alphabet>& rows) {
    if (rows.empty()) throw ArgumentError("product of zero alphabets");
    std::vector<std::string> names{""};
    for (const auto& r : rows) {
        std::vector<std::string> next;
        for (const auto& prefix : names)
            for (const auto& s : r.symbols()) next.push_back(prefix + s);
        names = std::move(next);
    }
    return Alphabet(std::move(names));
}

std::optional<Symbol> Alphabet::index(const std::string& name) const {
    auto it = std::find(symbols_.begin(), symbols_.end(), name);
    if (it == symbols_.end()) return std::nullopt;
    return static_cast<Symbol>(it - symbols_.begin());
}

Word Alphabet::parse(const std::string& text) const {
    if (!single_char_) throw ArgumentError("multi-character alphabet needs words as symbol arrays");
    Word w;
    for (char c : text) {
        auto i = index(std::string(1, c));
        if (!i) throw ArgumentError(std::string("unknown symbol '") + c + "'");
        w.push_back(*i);
    }
    return w;
}

Word Alphabet::parse(const std::vector<std::string>& names) const {
    Word w;
    for (const auto& n : names) {
        auto i = index(n);
        if (!i) throw ArgumentError("unknown symbol '" + n + "'");
        w.push_back(*i);
    }
    return w;
}

std::string Alphabet::render(const Word& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!single_char_ && i) out += ' ';
        out += name(w[i]);
    }
    return out;
}

std::string render_word(const Alphabet& a, const Word& w) { return a.render(w); }

namespace {

bool has_factor_ending(const Word& w, std::size_t end, const Word& f) {
    if (f.size() > end) return false;
    return std::equal(f.begin(), f.end(), w.begin() + static_cast<std::ptrdiff_t>(end - f.size()));
}

std::shared_ptr<const LanguageGraph> build_graph(const SftSpec& sft) {
    auto g = std::make_shared<LanguageGraph>();
    const int s = sft.alphabet().size();
    const int block = std::max(1, sft.max_forbidden_length() - 1);
    double total = 1;
    for (int i = 0; i < block; ++i) total *= s;
    if (total > double(1 << 22)) throw ResourceError("language graph too large (alphabet^block > 2^22)");

    // All locally admissible blocks.
    std::vector<Word> blocks{Word{}};
    for (int len = 0; len < block; ++len) {
        std::vector<Word> next;
        for (auto& w : blocks)
            for (Symbol a = 0; a < s; ++a) {
                Word x = w;
                x.push_back(a);
                if (sft.admissible_at(x, x.size())) next.push_back(std::move(x));
            }
        blocks = std::move(next);
    }
    std::sort(blocks.begin(), blocks.end());
    const auto n = blocks.size();
    std::vector<std::vector<int>> succ(n), pred(n);
    auto find = [&](const Word& w) -> int {
        auto it = std::lower_bound(blocks.begin(), blocks.end(), w);
        return (it != blocks.end() && *it == w) ? static_cast<int>(it - blocks.begin()) : -1;
    };
    for (std::size_t u = 0; u < n; ++u) {
        for (Symbol a = 0; a < s; ++a) {
            Word x = blocks[u];
            x.push_back(a);
            if (!sft.admissible_at(x, x.size())) continue;
            Word v(x.begin() + 1, x.end());
            int vi = find(v);
            if (vi < 0) continue;
            succ[u].push_back(vi);
            pred[static_cast<std::size_t>(vi)].push_back(static_cast<int>(u));
        }
    }
    // Trim to the essential part: repeatedly drop states without successors or predecessors.
    std::vector<char> alive(n, 1);
    std::vector<int> outdeg(n), indeg(n);
    std::vector<int> queue;
    for (std::size_t u = 0; u < n; ++u) {
        outdeg[u] = static_cast<int>(succ[u].size());
        indeg[u] = static_cast<int>(pred[u].size());
        if (!outdeg[u] || !indeg[u]) {
            alive[u] = 0;
            queue.push_back(static_cast<int>(u));
        }
    }
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        for (int v : succ[static_cast<std::size_t>(u)])
            if (alive[static_cast<std::size_t>(v)] && --indeg[static_cast<std::size_t>(v)] == 0) {
                alive[static_cast<std::size_t>(v)] = 0;
                queue.push_back(v);
            }
        for (int v : pred[static_cast<std::size_t>(u)])
            if (alive[static_cast<std::size_t>(v)] && --outdeg[static_cast<std::size_t>(v)] == 0) {
                alive[static_cast<std::size_t>(v)] = 0;
                queue.push_back(v);
            }
    }
    std::vector<int> remap(n, -1);
    for (std::size_t u = 0; u < n; ++u)
        if (alive[u]) {
            remap[u] = static_cast<int>(g->states.size());
            g->states.push_back(blocks[u]);
        }
    g->succ.resize(g->states.size());
    for (std::size_t u = 0; u < n; ++u) {
        if (!alive[u]) continue;
        for (int v : succ[u])
            if (alive[static_cast<std::size_t>(v)]) g->succ[static_cast<std::size_t>(remap[u])].push_back(remap[static_cast<std::size_t>(v)]);
    }
    g->block = block;
    return g;
}

}  // namespace

SftSpec::SftSpec(Alphabet alphabet, std::vector<Word> forbidden, std::vector<Alphabet> rows)
    : alphabet_(std::make_shared<const Alphabet>(std::move(alphabet))), forbidden_(std::move(forbidden)), rows_(std::move(rows)) {
    for (const auto& f : forbidden_) {
        if (f.empty()) throw ArgumentError("empty forbidden word");
        for (Symbol a : f)
            if (a < 0 || a >= alphabet_->size()) throw ArgumentError("forbidden word uses a symbol outside the alphabet");
        max_len_ = std::max(max_len_, static_cast<int>(f.size()));
    }
    std::sort(forbidden_.begin(), forbidden_.end());
    forbidden_.erase(std::unique(forbidden_.begin(), forbidden_.end()), forbidden_.end());
    if (!rows_.empty()) {
        long long prod = 1;
        for (const auto& r : rows_) prod *= r.size();
        if (prod != alphabet_->size()) throw ArgumentError("row alphabets do not multiply to the column alphabet");
    }
    graph_ = build_graph(*this);
}

SftSpec SftSpec::full_shift(int s) { return SftSpec(Alphabet::of_size(s), {}); }

SftSpec SftSpec::golden_mean() { return SftSpec(Alphabet::of_size(2), {Word{1, 1}}); }

Symbol SftSpec::row_symbol(Symbol column, int row) const {
    if (rows_.empty()) {
        if (row != 0) throw ArgumentError("spec has no row structure");
        return column;
    }
    int stride = 1;
    for (std::size_t r = rows_.size(); r-- > static_cast<std::size_t>(row) + 1;) stride *= rows_[r].size();
    return (column / stride) % rows_.at(static_cast<std::size_t>(row)).size();
}

Symbol SftSpec::column_symbol(const std::vector<Symbol>& per_row) const {
    if (rows_.empty()) return per_row.at(0);
    if (per_row.size() != rows_.size()) throw ArgumentError("row count mismatch");
    Symbol c = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r) c = c * rows_[r].size() + per_row[r];
    return c;
}

bool SftSpec::admissible_at(const Word& w, std::size_t end) const {
    for (const auto& f : forbidden_)
        if (has_factor_ending(w, end, f)) return false;
    return true;
}

bool SftSpec::locally_admissible(const Word& w) const {
    for (std::size_t e = 1; e <= w.size(); ++e)
        if (!admissible_at(w, e)) return false;
    return true;
}

bool SftSpec::periodic_admissible(const Word& w) const {
    if (w.empty()) return false;
    // Unroll enough copies to see every window of length <= max_len_ crossing a seam.
    Word u;
    const std::size_t copies = 1 + (static_cast<std::size_t>(max_len_) + w.size() - 1) / w.size();
    for (std::size_t c = 0; c < copies + 1; ++c) u.insert(u.end(), w.begin(), w.end());
    return locally_admissible(u);
}

std::vector<Word> SftSpec::language(int length, std::size_t cap) const {
    if (length < 0) throw ArgumentError("negative word length");
    const auto& g = *graph_;
    std::set<Word> out;
    if (g.states.empty()) return {};
    if (length <= g.block) {
        for (const auto& st : g.states) out.emplace(st.begin(), st.begin() + length);
        return {out.begin(), out.end()};
    }
    // Extend each state along paths.
    struct Item {
        int state;
        Word word;
    };
    std::vector<Item> frontier;
    for (std::size_t u = 0; u < g.states.size(); ++u) frontier.push_back({static_cast<int>(u), g.states[u]});
    for (int len = g.block; len < length; ++len) {
        std::vector<Item> next;
        for (auto& it : frontier)
            for (int v : g.succ[static_cast<std::size_t>(it.state)]) {
                Word w = it.word;
                w.push_back(g.states[static_cast<std::size_t>(v)].back());
                next.push_back({v, std::move(w)});
                if (next.size() > cap) throw ResourceError("language enumeration exceeds cap at length " + std::to_string(len + 1));
            }
        frontier = std::move(next);
    }
    std::vector<Word> words;
    words.reserve(frontier.size());
    for (auto& it : frontier) words.push_back(std::move(it.word));
    std::sort(words.begin(), words.end());
    words.erase(std::unique(words.begin(), words.end()), words.end());
    return words;
}

bool SftSpec::in_language(const Word& w) const {
    const auto& g = *graph_;
    if (g.states.empty()) return false;
    if (static_cast<int>(w.size()) <= g.block) {
        for (const auto& st : g.states)
            if (std::equal(w.begin(), w.end(), st.begin())) return true;
        return false;
    }
    // Track the set of states consistent with the prefix.
    std::set<int> cur;
    Word first(w.begin(), w.begin() + g.block);
    for (std::size_t u = 0; u < g.states.size(); ++u)
        if (g.states[u] == first) cur.insert(static_cast<int>(u));
    for (std::size_t i = static_cast<std::size_t>(g.block); i < w.size() && !cur.empty(); ++i) {
        std::set<int> next;
        for (int u : cur)
            for (int v : g.succ[static_cast<std::size_t>(u)])
                if (g.states[static_cast<std::size_t>(v)].back() == w[i]) next.insert(v);
        cur = std::move(next);
    }
    return !cur.empty();
}

}  // namespace symext
