#pragma once

#include "symext/entropy_value.hpp"
#include "symext/symbolic.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace symext {

// Level-1 rectangles are bare blocks; higher ones list their (k-1)-children left to right.
struct Rectangle {
    std::string id;
    std::vector<std::string> children;
    Word block;
};

struct RectangleHierarchy {
    std::vector<std::vector<Rectangle>> levels;  // levels[0] is level 1

    int depth() const { return static_cast<int>(levels.size()); }
    const Rectangle& find(int level, const std::string& id) const;
    int width(int level, const std::string& id) const;
    int p_min() const;  // narrowest level-1 rectangle
    // Ids at `level` whose children list equals `children`, in declaration order.
    std::vector<std::string> siblings(int level, const std::vector<std::string>& children) const;
    void validate() const;
};

struct OracleTable {
    std::vector<std::map<std::string, std::uint64_t>> budgets;  // budgets[k-1][id]

    std::uint64_t at(int level, const std::string& id) const;
};

// Raw inequalities: sum over level 1 <= s^(p_min - slack); each group of same-children
// rectangles sums to at most the product of the children's budgets.
void check_oracle(const OracleTable& table, int s, const RectangleHierarchy& h, int slack);

// Replaces each budget O by s^(ceil(log_s O) + 1) and certifies the inequalities again.
OracleTable normalize_oracle(const OracleTable& table, int s, const RectangleHierarchy& h);

struct Family {
    int width = 0;
    std::map<int, Symbol> fixed;
    std::vector<int> free;  // increasing positions
    // Sub-rectangle boundaries per lower level, as carried by the marker layer.
    std::vector<std::vector<int>> skeleton;
};

struct FamilyTable {
    int s = 2;
    std::vector<std::map<std::string, Family>> levels;

    const Family& at(int level, const std::string& id) const;
};

FamilyTable build_families(const RectangleHierarchy& h, const OracleTable& normalized, int s);

// Fixed symbols with zeros on every remaining free position of the deepest rectangle.
// `path` lists one rectangle id per level, each a child of the next.
Word embed_selector(const std::vector<std::string>& path, const RectangleHierarchy& h, const FamilyTable& families);

// Different skeletons are told apart by the marker layer; otherwise some position must be
// fixed to different symbols.
bool families_disjoint(const Family& a, const Family& b);

// Column alphabet of the built extension: a marker bit times the base alphabet.
inline int extension_alphabet_size(int s) { return 2 * s; }
// Alphabet size for a recoding to entropy sup E: floor(2^supE) + 1.
std::uint64_t recoding_alphabet_bound(const Entropy& sup_e);

}  // namespace symext
