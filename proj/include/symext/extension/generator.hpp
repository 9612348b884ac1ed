#pragma once

#include "symext/symbolic.hpp"

#include <map>
#include <optional>
#include <vector>

namespace symext {

// Sliding block code: output at i reads the input window [i - radius, i + radius].
struct BlockMap {
    int radius = 0;
    int output_size = 0;
    std::map<Word, Symbol> table;

    std::optional<Symbol> lookup(const Word& window) const;
    // Image of w; length |w| - 2*radius. Throws ArgumentError on an uncovered window.
    Word apply(const Word& w) const;

    static BlockMap identity(int s);
    // Reads coordinate 0 of row `row` of a product alphabet.
    static BlockMap row_reader(const SftSpec& sft, int row);
};

struct Extension {
    SftSpec ambient;
    BlockMap selector;             // ambient -> names
    std::optional<BlockMap> code;  // names -> ambient
};

struct GeneratorReport {
    int depth = 0;
    int observe = 0;
    // multiplicity[n]: most ambient words on [-observe, observe] sharing one atom on [-n, n].
    std::vector<std::size_t> multiplicity;
    std::size_t atoms = 0;  // atoms at the final depth
    std::optional<bool> code_inverts;
    std::size_t max_multiplicity() const { return multiplicity.empty() ? 0 : multiplicity.back(); }
    bool generating() const { return max_multiplicity() == 1; }
};

// Atom multiplicities of the pulled-back partition for n = 0..depth, plus a check that the
// code (when given) undoes the selector on every language window.
GeneratorReport extract_generator(const Extension& ext, int depth, int observe = 0);

struct PartitionImage {
    std::vector<std::vector<Word>> language;  // language[l] = name words of length l, l = 0..L
    std::optional<BlockMap> decoder;          // smallest radius <= L recovering coordinate 0
    bool factor_check = false;                // decoder composed with the selector is the identity
};

PartitionImage partition_to_extension(const SftSpec& sft, const BlockMap& partition, int L);

// Two rows over {0,1} where row 2 is row 1 delayed by rho: row2[i] = row1[i + rho].
SftSpec delay_toy(int rho);
// Two independent full 2-shift rows.
SftSpec product_toy();

}  // namespace symext
