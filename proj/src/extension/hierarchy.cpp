#include "symext/extension/hierarchy.hpp"

#include "symext/errors.hpp"
#include "symext/extension/prefix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <set>

namespace symext {

using boost::multiprecision::cpp_int;

namespace {

cpp_int power(int s, int e) { return boost::multiprecision::pow(cpp_int(s), static_cast<unsigned>(e)); }

// Smallest e with s^e >= v.
int ceil_log(int s, std::uint64_t v) {
    int e = 0;
    cpp_int p = 1;
    while (p < v) {
        p *= s;
        ++e;
    }
    return e;
}

// Exact exponent of a power of s, or -1.
int exact_log(int s, std::uint64_t v) {
    int e = ceil_log(s, v);
    return power(s, e) == v ? e : -1;
}

std::string join(const std::vector<std::string>& ids) {
    std::string out = "[";
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + ids[i];
    return out + "]";
}

// Distinct children lists at a level, in order of first appearance.
std::vector<std::vector<std::string>> groups(const RectangleHierarchy& h, int level) {
    std::vector<std::vector<std::string>> out;
    for (const auto& r : h.levels[level - 1])
        if (std::find(out.begin(), out.end(), r.children) == out.end()) out.push_back(r.children);
    return out;
}

}  // namespace

const Rectangle& RectangleHierarchy::find(int level, const std::string& id) const {
    if (level < 1 || level > depth()) throw ArgumentError("no level " + std::to_string(level));
    for (const auto& r : levels[level - 1])
        if (r.id == id) return r;
    throw ArgumentError("no rectangle '" + id + "' at level " + std::to_string(level));
}

int RectangleHierarchy::width(int level, const std::string& id) const {
    return static_cast<int>(find(level, id).block.size());
}

int RectangleHierarchy::p_min() const {
    if (levels.empty() || levels[0].empty()) throw ArgumentError("hierarchy has no level-1 rectangles");
    int p = static_cast<int>(levels[0][0].block.size());
    for (const auto& r : levels[0]) p = std::min(p, static_cast<int>(r.block.size()));
    return p;
}

std::vector<std::string> RectangleHierarchy::siblings(int level, const std::vector<std::string>& children) const {
    std::vector<std::string> out;
    for (const auto& r : levels[level - 1])
        if (r.children == children) out.push_back(r.id);
    return out;
}

void RectangleHierarchy::validate() const {
    if (levels.empty()) throw ArgumentError("hierarchy has no levels");
    for (int k = 1; k <= depth(); ++k) {
        std::set<std::string> seen;
        if (levels[k - 1].empty()) throw ArgumentError("level " + std::to_string(k) + " is empty");
        for (const auto& r : levels[k - 1]) {
            if (!seen.insert(r.id).second) throw ArgumentError("duplicate rectangle id '" + r.id + "'");
            if (r.block.empty()) throw ArgumentError("rectangle '" + r.id + "' has an empty block");
            if (k == 1) {
                if (!r.children.empty()) throw ArgumentError("level-1 rectangle '" + r.id + "' cannot have children");
                continue;
            }
            if (r.children.size() < 2)
                throw ArgumentError("rectangle '" + r.id + "' needs at least two children");
            std::size_t w = 0;
            for (const auto& c : r.children) w += find(k - 1, c).block.size();
            if (w != r.block.size())
                throw ArgumentError("rectangle '" + r.id + "': children widths sum to " + std::to_string(w) +
                                    ", block has " + std::to_string(r.block.size()));
        }
    }
}

std::uint64_t OracleTable::at(int level, const std::string& id) const {
    if (level < 1 || level > static_cast<int>(budgets.size())) throw ConstructionError("oracle has no level " + std::to_string(level));
    auto it = budgets[level - 1].find(id);
    if (it == budgets[level - 1].end())
        throw ConstructionError("oracle has no budget for '" + id + "' at level " + std::to_string(level));
    return it->second;
}

void check_oracle(const OracleTable& table, int s, const RectangleHierarchy& h, int slack) {
    if (static_cast<int>(table.budgets.size()) != h.depth())
        throw ConstructionError("oracle depth " + std::to_string(table.budgets.size()) + " differs from hierarchy depth " +
                                std::to_string(h.depth()));
    for (int k = 1; k <= h.depth(); ++k) {
        if (table.budgets[k - 1].size() != h.levels[k - 1].size())
            throw ConstructionError("oracle level " + std::to_string(k) + " does not match the hierarchy");
        for (const auto& r : h.levels[k - 1])
            if (table.at(k, r.id) == 0) throw ConstructionError("budget of '" + r.id + "' must be positive");
    }
    cpp_int sum = 0;
    for (const auto& r : h.levels[0]) sum += table.at(1, r.id);
    const int e = h.p_min() - slack;
    if (e < 0 || sum > power(s, e))
        throw ConstructionError("level 1: budgets sum to " + sum.str() + ", exceeding s^" + std::to_string(e));
    for (int k = 2; k <= h.depth(); ++k) {
        for (const auto& ch : groups(h, k)) {
            cpp_int lhs = 0, rhs = 1;
            for (const auto& id : h.siblings(k, ch)) lhs += table.at(k, id);
            for (const auto& c : ch) rhs *= table.at(k - 1, c);
            if (lhs > rhs)
                throw ConstructionError("level " + std::to_string(k) + ", parent " + join(ch) + ": budgets sum to " +
                                        lhs.str() + ", exceeding " + rhs.str());
        }
    }
}

OracleTable normalize_oracle(const OracleTable& table, int s, const RectangleHierarchy& h) {
    if (s < 2) throw ArgumentError("alphabet size must be at least 2");
    h.validate();
    check_oracle(table, s, h, 2);
    OracleTable out;
    for (const auto& level : table.budgets) {
        std::map<std::string, std::uint64_t> m;
        for (const auto& [id, o] : level) {
            cpp_int v = power(s, ceil_log(s, o) + 1);
            if (v > std::numeric_limits<std::uint64_t>::max()) throw ResourceError("normalized budget of '" + id + "' overflows");
            m[id] = static_cast<std::uint64_t>(v);
        }
        out.budgets.push_back(std::move(m));
    }
    check_oracle(out, s, h, 0);
    return out;
}

const Family& FamilyTable::at(int level, const std::string& id) const {
    if (level < 1 || level > static_cast<int>(levels.size())) throw ArgumentError("no family level " + std::to_string(level));
    auto it = levels[level - 1].find(id);
    if (it == levels[level - 1].end()) throw ArgumentError("no family for '" + id + "'");
    return it->second;
}

FamilyTable build_families(const RectangleHierarchy& h, const OracleTable& normalized, int s) {
    h.validate();
    check_oracle(normalized, s, h, 0);
    auto exponent = [&](int k, const std::string& id) {
        int e = exact_log(s, normalized.at(k, id));
        if (e < 0) throw ConstructionError("budget of '" + id + "' is not a power of s; normalize first");
        return e;
    };

    FamilyTable out{s, {}};
    out.levels.resize(h.depth());

    const int p = h.p_min();
    std::vector<int> ex;
    for (const auto& r : h.levels[0]) ex.push_back(exponent(1, r.id));
    const auto alloc = prefix_allocate(s, p, ex);
    for (std::size_t i = 0; i < ex.size(); ++i) {
        const auto& r = h.levels[0][i];
        Family f;
        f.width = static_cast<int>(r.block.size());
        const auto& pre = alloc.entries[i].prefix;
        for (int j = 0; j < static_cast<int>(pre.size()); ++j) f.fixed[j] = pre[j];
        for (int j = static_cast<int>(pre.size()); j < p; ++j) f.free.push_back(j);
        for (int j = p; j < f.width; ++j) f.fixed[j] = 0;
        out.levels[0][r.id] = std::move(f);
    }

    for (int k = 2; k <= h.depth(); ++k) {
        for (const auto& ch : groups(h, k)) {
            Family base;
            base.skeleton.resize(static_cast<std::size_t>(k - 1));
            for (const auto& c : ch) {
                const Family& cf = out.levels[k - 2].at(c);
                for (std::size_t l = 0; l < cf.skeleton.size(); ++l)
                    for (int cut : cf.skeleton[l]) base.skeleton[l].push_back(base.width + cut);
                base.skeleton.back().push_back(base.width);
                for (const auto& [pos, sym] : cf.fixed) base.fixed[base.width + pos] = sym;
                for (int pos : cf.free) base.free.push_back(base.width + pos);
                base.width += cf.width;
            }
            const auto ids = h.siblings(k, ch);
            std::vector<int> ek;
            for (const auto& id : ids) ek.push_back(exponent(k, id));
            const auto a = prefix_allocate(s, static_cast<int>(base.free.size()), ek);
            for (std::size_t i = 0; i < ids.size(); ++i) {
                Family f = base;
                const auto& pre = a.entries[i].prefix;
                for (std::size_t j = 0; j < pre.size(); ++j) f.fixed[base.free[j]] = pre[j];
                f.free.erase(f.free.begin(), f.free.begin() + static_cast<std::ptrdiff_t>(pre.size()));
                out.levels[k - 1][ids[i]] = std::move(f);
            }
        }
    }
    return out;
}

Word embed_selector(const std::vector<std::string>& path, const RectangleHierarchy& h, const FamilyTable& families) {
    if (path.empty()) throw ArgumentError("empty rectangle path");
    if (static_cast<int>(path.size()) > h.depth()) throw ArgumentError("rectangle path deeper than the hierarchy");
    for (std::size_t k = 1; k < path.size(); ++k) {
        const auto& parent = h.find(static_cast<int>(k) + 1, path[k]);
        h.find(static_cast<int>(k), path[k - 1]);
        if (std::find(parent.children.begin(), parent.children.end(), path[k - 1]) == parent.children.end())
            throw ArgumentError("'" + path[k - 1] + "' is not a child of '" + path[k] + "'");
    }
    const int top = static_cast<int>(path.size());
    h.find(top, path.back());
    const Family& f = families.at(top, path.back());
    Word w(static_cast<std::size_t>(f.width), 0);
    for (const auto& [pos, sym] : f.fixed) w[pos] = sym;
    return w;
}

bool families_disjoint(const Family& a, const Family& b) {
    if (a.width != b.width || a.skeleton != b.skeleton) return true;
    for (const auto& [pos, sym] : a.fixed) {
        auto it = b.fixed.find(pos);
        if (it != b.fixed.end() && it->second != sym) return true;
    }
    return false;
}

std::uint64_t recoding_alphabet_bound(const Entropy& sup_e) {
    if (sup_e.is_infinite()) throw ArgumentError("recoding bound needs finite entropy");
    return floor_pow2(sup_e.value()) + 1;
}

}  // namespace symext
