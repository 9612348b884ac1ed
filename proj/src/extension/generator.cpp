#include "symext/extension/generator.hpp"

#include "symext/errors.hpp"

#include <algorithm>
#include <set>

namespace symext {

namespace {

Word slice(const Word& w, std::size_t from, std::size_t len) {
    return Word(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(from + len));
}

std::string list_words(const Alphabet& a, const std::vector<Word>& ws) {
    std::string out;
    const std::size_t shown = std::min<std::size_t>(ws.size(), 12);
    for (std::size_t i = 0; i < shown; ++i) out += (i ? ", " : "") + a.render(ws[i]);
    if (ws.size() > shown) out += ", ... (" + std::to_string(ws.size()) + " total)";
    return out;
}

void require_total(const SftSpec& sft, const BlockMap& m) {
    std::vector<Word> missing;
    for (const auto& w : sft.language(2 * m.radius + 1))
        if (!m.lookup(w)) missing.push_back(w);
    if (!missing.empty()) throw ArgumentError("block code undefined on: " + list_words(sft.alphabet(), missing));
}

}  // namespace

std::optional<Symbol> BlockMap::lookup(const Word& window) const {
    auto it = table.find(window);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

Word BlockMap::apply(const Word& w) const {
    const std::size_t span = 2 * static_cast<std::size_t>(radius) + 1;
    if (w.size() < span) return {};
    Word out;
    out.reserve(w.size() - span + 1);
    for (std::size_t i = 0; i + span <= w.size(); ++i) {
        auto s = lookup(slice(w, i, span));
        if (!s) throw ArgumentError("block code undefined on a window");
        out.push_back(*s);
    }
    return out;
}

BlockMap BlockMap::identity(int s) {
    BlockMap m{0, s, {}};
    for (Symbol a = 0; a < s; ++a) m.table[{a}] = a;
    return m;
}

BlockMap BlockMap::row_reader(const SftSpec& sft, int row) {
    if (row < 0 || row >= static_cast<int>(sft.rows().size())) throw ArgumentError("no row " + std::to_string(row));
    BlockMap m{0, sft.rows()[static_cast<std::size_t>(row)].size(), {}};
    for (Symbol c = 0; c < sft.alphabet().size(); ++c) m.table[{c}] = sft.row_symbol(c, row);
    return m;
}

GeneratorReport extract_generator(const Extension& ext, int depth, int observe) {
    if (depth < 0 || observe < 0) throw ArgumentError("depth and observation radius must be nonnegative");
    const SftSpec& x = ext.ambient;
    const BlockMap& psi = ext.selector;
    require_total(x, psi);

    GeneratorReport rep;
    rep.depth = depth;
    rep.observe = observe;
    const int r = psi.radius;
    for (int n = 0; n <= depth; ++n) {
        const int m = std::max(n + r, observe);
        std::map<Word, std::set<Word>> atoms;
        for (const auto& w : x.language(2 * m + 1)) {
            const Word names = psi.apply(w);
            const std::size_t c = names.size() / 2;
            atoms[slice(names, c - static_cast<std::size_t>(n), 2 * static_cast<std::size_t>(n) + 1)].insert(
                slice(w, static_cast<std::size_t>(m - observe), 2 * static_cast<std::size_t>(observe) + 1));
        }
        std::size_t worst = 0;
        for (const auto& [a, ws] : atoms) worst = std::max(worst, ws.size());
        rep.multiplicity.push_back(worst);
        rep.atoms = atoms.size();
    }

    if (ext.code) {
        const BlockMap& pi = *ext.code;
        std::set<Word> missing;
        bool ok = true;
        for (const auto& w : x.language(2 * (r + pi.radius) + 1)) {
            const Word names = psi.apply(w);
            auto back = pi.lookup(names);
            if (!back) {
                missing.insert(names);
                continue;
            }
            if (*back != w[w.size() / 2]) ok = false;
        }
        if (!missing.empty()) {
            std::vector<Word> ws(missing.begin(), missing.end());
            throw ArgumentError("code undefined on name words: " + list_words(Alphabet::of_size(std::max(psi.output_size, 1)), ws));
        }
        rep.code_inverts = ok;
    }
    return rep;
}

PartitionImage partition_to_extension(const SftSpec& sft, const BlockMap& partition, int L) {
    if (L < 0) throw ArgumentError("depth must be nonnegative");
    require_total(sft, partition);
    const int r = partition.radius;
    PartitionImage out;
    for (int l = 0; l <= L; ++l) {
        std::set<Word> img;
        for (const auto& w : sft.language(l + 2 * r)) img.insert(partition.apply(w));
        out.language.emplace_back(img.begin(), img.end());
    }
    for (int rd = 0; rd <= L && !out.decoder; ++rd) {
        BlockMap dec{rd, sft.alphabet().size(), {}};
        bool functional = true;
        for (const auto& w : sft.language(2 * (r + rd) + 1)) {
            const Word names = partition.apply(w);
            const Symbol centre = w[w.size() / 2];
            auto [it, fresh] = dec.table.emplace(names, centre);
            if (!fresh && it->second != centre) {
                functional = false;
                break;
            }
        }
        if (functional) out.decoder = std::move(dec);
    }
    if (out.decoder) {
        // Recheck on longer words, decoding every coordinate.
        const int span = 2 * (r + out.decoder->radius) + 1;
        out.factor_check = true;
        for (const auto& w : sft.language(span + 2)) {
            const Word back = out.decoder->apply(partition.apply(w));
            if (back != slice(w, static_cast<std::size_t>(span / 2), back.size())) out.factor_check = false;
        }
    }
    return out;
}

SftSpec delay_toy(int rho) {
    if (rho < 0) throw ArgumentError("delay must be nonnegative");
    std::vector<Alphabet> rows{Alphabet::of_size(2), Alphabet::of_size(2)};
    const Alphabet cols = Alphabet::product(rows);
    const SftSpec probe(cols, {}, rows);
    std::vector<Word> forbidden;
    const int len = rho + 1;
    Word w(static_cast<std::size_t>(len), 0);
    std::size_t total = 1;
    for (int i = 0; i < len; ++i) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (int i = len - 1; i >= 0; --i) {
            w[static_cast<std::size_t>(i)] = static_cast<Symbol>(c % 4);
            c /= 4;
        }
        if (probe.row_symbol(w.front(), 1) != probe.row_symbol(w.back(), 0)) forbidden.push_back(w);
    }
    return SftSpec(cols, std::move(forbidden), rows);
}

SftSpec product_toy() {
    std::vector<Alphabet> rows{Alphabet::of_size(2), Alphabet::of_size(2)};
    return SftSpec(Alphabet::product(rows), {}, rows);
}

}  // namespace symext
