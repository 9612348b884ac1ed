#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace symext {

using Symbol = int;
using Word = std::vector<Symbol>;

class Alphabet {
public:
    explicit Alphabet(std::vector<std::string> symbols);

    // "0", "1", ..., using digits then letters.
    static Alphabet of_size(int s);
    // Product alphabet of column symbols; row 0 varies slowest. Names are concatenations.
    static Alphabet product(const std::vector<Alphabet>& rows);

    int size() const { return static_cast<int>(symbols_.size()); }
    const std::string& name(Symbol s) const { return symbols_.at(static_cast<std::size_t>(s)); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    std::optional<Symbol> index(const std::string& name) const;
    bool single_char() const { return single_char_; }

    // Splits into single-character symbols; throws ArgumentError on unknown symbols.
    Word parse(const std::string& text) const;
    Word parse(const std::vector<std::string>& names) const;
    // Concatenation for single-char alphabets, otherwise names joined by ' '.
    std::string render(const Word& w) const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<std::string> symbols_;
    bool single_char_ = true;
};

// Paths in the trimmed de Bruijn graph on blocks of length `block` are exactly the
// language words of length >= block.
struct LanguageGraph {
    int block = 1;
    std::vector<Word> states;
    std::vector<std::vector<int>> succ;  // succ[u] = states v with u -> v
};

class SftSpec {
public:
    SftSpec(Alphabet alphabet, std::vector<Word> forbidden, std::vector<Alphabet> rows = {});

    static SftSpec full_shift(int s);
    static SftSpec golden_mean();

    const Alphabet& alphabet() const { return *alphabet_; }
    std::shared_ptr<const Alphabet> alphabet_ptr() const { return alphabet_; }
    const std::vector<Word>& forbidden() const { return forbidden_; }
    const std::vector<Alphabet>& rows() const { return rows_; }
    int max_forbidden_length() const { return max_len_; }

    // Row component of a column symbol (row structure only).
    Symbol row_symbol(Symbol column, int row) const;
    Symbol column_symbol(const std::vector<Symbol>& per_row) const;

    // No forbidden factor (finite word only).
    bool locally_admissible(const Word& w) const;
    // True iff no forbidden word ends at position `end` (exclusive end index) of w.
    bool admissible_at(const Word& w, std::size_t end) const;
    // The bi-infinite repetition of w avoids every forbidden word.
    bool periodic_admissible(const Word& w) const;

    const LanguageGraph& graph() const { return *graph_; }
    bool language_empty() const { return graph_->states.empty(); }
    // Words of the given length that occur in some point of the subshift; sorted.
    std::vector<Word> language(int length, std::size_t cap = std::size_t{1} << 22) const;
    bool in_language(const Word& w) const;

private:
    std::shared_ptr<const Alphabet> alphabet_;
    std::vector<Word> forbidden_;
    std::vector<Alphabet> rows_;
    int max_len_ = 0;
    std::shared_ptr<const LanguageGraph> graph_;
};

std::string render_word(const Alphabet& a, const Word& w);

}  // namespace symext
