#include "oracles.hpp"

#include "symext/errors.hpp"
#include "symext/extension/generator.hpp"
#include "symext/extension/hierarchy.hpp"
#include "symext/extension/prefix.hpp"
#include "symext/extension/strips.hpp"

#include <doctest.h>

#include <random>

using namespace symext;

namespace {

Word bits(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(c - '0');
    return w;
}

std::set<Word> family_words(const Family& f, int s) {
    std::set<Word> out;
    for (std::int64_t idx = 0; idx < oracle::ipow(s, f.width); ++idx) {
        Word w = oracle::word_from_index(idx, s, f.width);
        bool ok = true;
        for (const auto& [pos, sym] : f.fixed) ok = ok && w[static_cast<std::size_t>(pos)] == sym;
        if (ok) out.insert(w);
    }
    return out;
}

// Random hierarchy of the given depth with a raw oracle meeting the slack inequalities.
std::pair<RectangleHierarchy, OracleTable> random_hierarchy(std::mt19937& rng, int depth, int s) {
    RectangleHierarchy h;
    OracleTable o;
    std::uniform_int_distribution<int> coin(0, 1);
    const int p = 4 + coin(rng) * 2;
    h.levels.emplace_back();
    o.budgets.emplace_back();
    const int n1 = 2 + coin(rng);
    std::uint64_t room = oracle::ipow(s, p - 2);
    for (int i = 0; i < n1; ++i) {
        const int w = p + coin(rng);
        std::string id = "L1_" + std::to_string(i);
        h.levels[0].push_back({id, {}, Word(static_cast<std::size_t>(w), 0)});
        std::uint64_t b = std::max<std::uint64_t>(1, room / static_cast<std::uint64_t>(n1 - i) / (1 + static_cast<std::uint64_t>(coin(rng))));
        room -= b;
        o.budgets[0][id] = b;
    }
    for (int k = 2; k <= depth; ++k) {
        h.levels.emplace_back();
        o.budgets.emplace_back();
        const auto& prev = h.levels[static_cast<std::size_t>(k - 2)];
        std::uniform_int_distribution<std::size_t> pick(0, prev.size() - 1);
        const int groups = 1 + coin(rng);
        for (int g = 0; g < groups; ++g) {
            std::vector<std::string> ch{prev[pick(rng)].id, prev[pick(rng)].id};
            if (coin(rng)) ch.push_back(prev[pick(rng)].id);
            std::size_t width = 0;
            std::uint64_t prod = 1;
            for (const auto& c : ch) {
                width += h.find(k - 1, c).block.size();
                prod *= o.budgets[static_cast<std::size_t>(k - 2)][c];
            }
            if (!h.siblings(k, ch).empty()) continue;
            const int members = static_cast<int>(std::min<std::uint64_t>(prod, static_cast<std::uint64_t>(1 + coin(rng) + coin(rng))));
            for (int m = 0; m < members; ++m) {
                std::string id = "L" + std::to_string(k) + "_" + std::to_string(g) + "_" + std::to_string(m);
                h.levels.back().push_back({id, ch, Word(width, 0)});
                o.budgets.back()[id] = std::max<std::uint64_t>(1, prod / static_cast<std::uint64_t>(members) / (1 + static_cast<std::uint64_t>(coin(rng))));
            }
        }
    }
    return {h, o};
}

}  // namespace

TEST_CASE("prefix allocation examples") {
    auto a = prefix_allocate(2, 3, {2, 1, 1});
    REQUIRE(a.entries.size() == 3);
    CHECK(a.entries[0].prefix == bits("0"));
    CHECK(a.entries[1].prefix == bits("10"));
    CHECK(a.entries[2].prefix == bits("11"));
    std::set<Word> all;
    std::size_t total = 0;
    for (const auto& e : a.entries) {
        auto c = oracle::cylinder(e.prefix, 2, 3);
        total += c.size();
        all.insert(c.begin(), c.end());
    }
    CHECK(total == 8);
    CHECK(all.size() == 8);

    auto b = prefix_allocate(2, 2, {0, 0, 0, 0});
    CHECK(b.entries[0].prefix == bits("00"));
    CHECK(b.entries[3].prefix == bits("11"));
    CHECK(prefix_allocate(3, 4, {4}).entries[0].prefix.empty());
    CHECK_THROWS_WITH_AS(prefix_allocate(2, 2, {2, 0}), doctest::Contains("deficit 1"), ArgumentError);
    CHECK_THROWS_AS(prefix_allocate(2, 2, {3}), ArgumentError);
}

TEST_CASE("prefix allocation against enumeration") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int s = 2 + static_cast<int>(rng() % 2);
        const int n = 1 + static_cast<int>(rng() % (s == 2 ? 10 : 6));
        std::vector<int> ex;
        std::int64_t used = 0, space = oracle::ipow(s, n);
        while (true) {
            int e = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
            if (used + oracle::ipow(s, e) > space) break;
            used += oracle::ipow(s, e);
            ex.push_back(e);
        }
        auto a = prefix_allocate(s, n, ex);
        std::set<Word> seen;
        std::int64_t total = 0;
        for (std::size_t i = 0; i < ex.size(); ++i) {
            CHECK(static_cast<int>(a.entries[i].prefix.size()) == n - ex[i]);
            auto c = oracle::cylinder(a.entries[i].prefix, s, n);
            total += static_cast<std::int64_t>(c.size());
            seen.insert(c.begin(), c.end());
        }
        CHECK(total == used);
        CHECK(static_cast<std::int64_t>(seen.size()) == used);
    }
}

TEST_CASE("oracle normalization") {
    RectangleHierarchy h;
    h.levels.push_back({{"a", {}, Word(5, 0)}});
    for (auto [raw, norm] : std::vector<std::pair<std::uint64_t, std::uint64_t>>{{3, 8}, {1, 2}, {4, 8}}) {
        OracleTable o{{{{"a", raw}}}};
        CHECK(normalize_oracle(o, 2, h).at(1, "a") == norm);
    }
    OracleTable over{{{{"a", 9}}}};
    CHECK_THROWS_WITH_AS(normalize_oracle(over, 2, h), doctest::Contains("level 1"), ConstructionError);

    h.levels[0].push_back({"b", {}, Word(5, 0)});
    h.levels.push_back({{"R", {"a", "b"}, Word(10, 0)}});
    OracleTable two{{{{"a", 2}, {"b", 2}}, {{"R", 5}}}};
    CHECK_THROWS_WITH_AS(normalize_oracle(two, 2, h), doctest::Contains("parent [a,b]"), ConstructionError);
    two.budgets[1]["R"] = 4;
    auto n = normalize_oracle(two, 2, h);
    CHECK(n.at(2, "R") == 8);
    CHECK_THROWS_AS(check_oracle(OracleTable{{{{"a", 4}, {"b", 4}}, {{"R", 32}}}}, 2, h, 0), ConstructionError);

    RectangleHierarchy bad = h;
    bad.levels[1][0].block = Word(9, 0);
    CHECK_THROWS_AS(bad.validate(), ArgumentError);
    bad = h;
    bad.levels[1][0].children = {"a"};
    bad.levels[1][0].block = Word(5, 0);
    CHECK_THROWS_AS(bad.validate(), ArgumentError);
}

TEST_CASE("families: worked toys") {
    RectangleHierarchy h;
    h.levels.push_back({{"a", {}, Word(3, 0)}, {"b", {}, Word(3, 0)}});
    OracleTable o{{{{"a", 4}, {"b", 2}}}};
    auto f = build_families(h, o, 2);
    const Family& fa = f.at(1, "a");
    const Family& fb = f.at(1, "b");
    CHECK(fa.fixed == std::map<int, Symbol>{{0, 0}});
    CHECK(fa.free == std::vector<int>{1, 2});
    CHECK(fb.fixed == std::map<int, Symbol>{{0, 1}, {1, 0}});
    CHECK(fb.free.size() == 1);
    auto wa = family_words(fa, 2), wb = family_words(fb, 2);
    CHECK(wa == oracle::cylinder(bits("0"), 2, 3));
    CHECK(wb == oracle::cylinder(bits("10"), 2, 3));
    CHECK(embed_selector({"a"}, h, f) == bits("000"));
    CHECK(embed_selector({"b"}, h, f) == bits("100"));

    // Two children with one free position each; two bottom blocks of budget 2.
    RectangleHierarchy t;
    t.levels.push_back({{"c", {}, Word(2, 0)}, {"d", {}, Word(2, 0)}});
    t.levels.push_back({{"X", {"c", "d"}, Word(4, 0)}, {"Y", {"c", "d"}, Word(4, 0)}});
    OracleTable ot{{{{"c", 2}, {"d", 2}}, {{"X", 2}, {"Y", 2}}}};
    auto ft = build_families(t, ot, 2);
    const Family& fx = ft.at(2, "X");
    const Family& fy = ft.at(2, "Y");
    CHECK(fx.free.size() == 1);
    CHECK(fy.free.size() == 1);
    CHECK(fx.fixed.size() == 3);
    CHECK(families_disjoint(fx, fy));
    auto ex = family_words(fx, 2), ey = family_words(fy, 2);
    CHECK(ex.size() == 2);
    CHECK(ey.size() == 2);
    std::set<Word> both;
    std::set_intersection(ex.begin(), ex.end(), ey.begin(), ey.end(), std::inserter(both, both.end()));
    CHECK(both.empty());
    CHECK(embed_selector({"c", "X"}, t, ft) != embed_selector({"c", "Y"}, t, ft));
    CHECK_THROWS_AS(embed_selector({"a", "X"}, t, ft), ArgumentError);

    // Full budget leaves everything free.
    RectangleHierarchy full;
    full.levels.push_back({{"z", {}, Word(3, 0)}});
    auto ff = build_families(full, OracleTable{{{{"z", 8}}}}, 2);
    CHECK(ff.at(1, "z").fixed.empty());
    CHECK(ff.at(1, "z").free.size() == 3);
    CHECK_THROWS_AS(build_families(full, OracleTable{{{{"z", 3}}}}, 2), ConstructionError);
}

TEST_CASE("families on random hierarchies") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const int s = 2;
        auto [h, raw] = random_hierarchy(rng, 2 + trial % 2, s);
        auto norm = normalize_oracle(raw, s, h);
        auto f = build_families(h, norm, s);
        std::set<std::pair<std::vector<std::vector<int>>, Word>> selected;
        for (int k = 1; k <= h.depth(); ++k) {
            const auto& level = h.levels[static_cast<std::size_t>(k - 1)];
            for (std::size_t i = 0; i < level.size(); ++i) {
                const Family& fi = f.at(k, level[i].id);
                CHECK(oracle::ipow(s, static_cast<int>(fi.free.size())) == static_cast<std::int64_t>(norm.at(k, level[i].id)));
                CHECK(static_cast<int>(fi.fixed.size() + fi.free.size()) == fi.width);
                for (std::size_t j = i + 1; j < level.size(); ++j) CHECK(families_disjoint(fi, f.at(k, level[j].id)));
                if (k >= 2) {
                    // Refinement: every fixed symbol of a child stays fixed at its offset.
                    int off = 0;
                    for (const auto& c : level[i].children) {
                        const Family& cf = f.at(k - 1, c);
                        for (const auto& [pos, sym] : cf.fixed) CHECK(fi.fixed.at(off + pos) == sym);
                        off += cf.width;
                    }
                }
                if (k == h.depth()) {
                    std::vector<std::string> path{level[i].id};
                    for (int j = k; j > 1; --j) path.insert(path.begin(), h.find(j, path.front()).children.front());
                    Word w = embed_selector(path, h, f);
                    CHECK(selected.insert({fi.skeleton, w}).second);
                }
            }
            if (k == 1 && h.levels[0].size() <= 3 && h.levels[0][0].block.size() <= 5) {
                // Cylinder disjointness by enumeration on small widths.
                std::set<Word> seen;
                std::size_t total = 0;
                for (const auto& r : level) {
                    auto ws = family_words(f.at(1, r.id), s);
                    std::set<Word> cut;
                    for (const auto& w : ws) cut.insert(Word(w.begin(), w.begin() + h.p_min()));
                    total += cut.size();
                    seen.insert(cut.begin(), cut.end());
                }
                CHECK(seen.size() == total);
            }
        }
    }
}

TEST_CASE("generator extraction") {
    const SftSpec full = SftSpec::full_shift(2);
    Extension id{full, BlockMap::identity(2), BlockMap::identity(2)};
    auto r = extract_generator(id, 4, 1);
    CHECK(r.code_inverts == true);
    for (std::size_t n = 1; n < r.multiplicity.size(); ++n) CHECK(r.multiplicity[n] == 1);

    const SftSpec gm = SftSpec::golden_mean();
    auto g = extract_generator(Extension{gm, BlockMap::identity(2), std::nullopt}, 5);
    CHECK(g.generating());

    for (int rho = 1; rho <= 3; ++rho) {
        const SftSpec toy = delay_toy(rho);
        const int d = 1;
        auto t = extract_generator(Extension{toy, BlockMap::row_reader(toy, 0), std::nullopt}, d + rho + 2, d);
        for (std::size_t n = 1; n < t.multiplicity.size(); ++n) CHECK(t.multiplicity[n] <= t.multiplicity[n - 1]);
        for (int n = d; n <= d + rho + 2; ++n)
            CHECK(t.multiplicity[static_cast<std::size_t>(n)] == static_cast<std::size_t>(oracle::ipow(2, std::max(0, d + rho - n))));
    }

    BlockMap partial = BlockMap::identity(2);
    partial.table.erase(Word{1});
    CHECK_THROWS_WITH_AS(extract_generator(Extension{full, BlockMap::identity(2), partial}, 2), doctest::Contains("1"), ArgumentError);
    CHECK_THROWS_AS(extract_generator(Extension{full, partial, std::nullopt}, 2), ArgumentError);
}

TEST_CASE("partition images and round trips") {
    const SftSpec full = SftSpec::full_shift(2);
    auto img = partition_to_extension(full, BlockMap::identity(2), 6);
    for (int l = 0; l <= 6; ++l) CHECK(img.language[static_cast<std::size_t>(l)] == full.language(l));
    REQUIRE(img.decoder);
    CHECK(img.decoder->radius == 0);
    CHECK(img.factor_check);

    const SftSpec gm = SftSpec::golden_mean();
    auto gi = partition_to_extension(gm, BlockMap::identity(2), 6);
    for (int l = 0; l <= 6; ++l) CHECK(gi.language[static_cast<std::size_t>(l)] == gm.language(l));

    const SftSpec prod = product_toy();
    auto pi = partition_to_extension(prod, BlockMap::row_reader(prod, 0), 5);
    for (int l = 0; l <= 5; ++l) CHECK(pi.language[static_cast<std::size_t>(l)] == full.language(l));
    CHECK_FALSE(pi.decoder);

    for (int rho = 0; rho <= 3; ++rho) {
        const SftSpec toy = delay_toy(rho);
        const BlockMap top = BlockMap::row_reader(toy, 0);
        auto ti = partition_to_extension(toy, top, 5);
        REQUIRE(ti.decoder);
        CHECK(ti.decoder->radius == rho);
        CHECK(ti.factor_check);
        auto rep = extract_generator(Extension{toy, top, ti.decoder}, 6);
        CHECK(rep.code_inverts == true);
        CHECK(rep.multiplicity[static_cast<std::size_t>(rho)] == 1);
        if (rho > 0) CHECK(rep.multiplicity[static_cast<std::size_t>(rho - 1)] > 1);
    }
}

TEST_CASE("strips") {
    const SftSpec full = SftSpec::full_shift(2);
    auto one = build_strips(enumerate_periodic(full, 1), 1);
    CHECK(one.strips.size() == 2);
    CHECK(one.h_top.exact());
    CHECK(one.h_top.lo == Rational(1));
    auto two = build_strips(enumerate_periodic(full, 2), 2);
    CHECK(two.strips.size() == 2);
    CHECK(two.h_top.lo == Rational(1, 2));
    auto gm2 = build_strips(enumerate_periodic(SftSpec::full_shift(3), 2), 2);
    CHECK(gm2.strips.size() == 6);
    for (const auto& s : gm2.strips) {
        CHECK(s.marker == 1);
        CHECK(SftSpec::full_shift(3).periodic_admissible(s.columns));
    }
    auto none = build_strips({}, 3);
    CHECK(none.strips.empty());
    CHECK(none.h_top.lo == Rational(0));
    CHECK_THROWS_AS(build_strips(enumerate_periodic(full, 1), 2), ArgumentError);
    // Period 5 strips of the golden mean: Lucas count of points.
    const auto gm = SftSpec::golden_mean();
    auto g5 = build_strips(enumerate_periodic(gm, 5), 5);
    CHECK(static_cast<std::int64_t>(g5.strips.size()) == oracle::lucas(5) - oracle::lucas(1));
}

TEST_CASE("Hall matching") {
    auto m = hall_match({{0}, {1}, {2}}, 3);
    CHECK(m == std::vector<int>{0, 1, 2});
    try {
        hall_match({{0, 1}, {0, 1}, {0, 1}}, 2);
        FAIL("expected infeasibility");
    } catch (const HallInfeasible& e) {
        CHECK(e.witness().size() == 3);
        CHECK(e.neighbourhood().size() == 2);
    }
    CHECK_THROWS_AS(hall_match_words({{bits("01")}, {bits("1")}}, 2), ArgumentError);
    auto words = hall_match_words({{bits("00"), bits("01")}, {bits("00")}}, 2);
    CHECK(words == std::vector<Word>{bits("01"), bits("00")});

    std::mt19937 rng(3);
    int feasible = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int left = 1 + static_cast<int>(rng() % 8);
        const int right = 1 + static_cast<int>(rng() % 12);
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(left));
        for (auto& row : adj)
            for (int v = 0; v < right; ++v)
                if (rng() % 4 == 0) row.push_back(v);
        const bool exists = oracle::brute_sdr(adj, right);
        try {
            auto mm = hall_match(adj, right);
            CHECK(exists);
            std::set<int> used;
            for (std::size_t i = 0; i < mm.size(); ++i) {
                CHECK(std::find(adj[i].begin(), adj[i].end(), mm[i]) != adj[i].end());
                used.insert(mm[i]);
            }
            CHECK(used.size() == mm.size());
            ++feasible;
        } catch (const HallInfeasible& e) {
            CHECK_FALSE(exists);
            std::set<int> nb;
            for (int u : e.witness()) nb.insert(adj[static_cast<std::size_t>(u)].begin(), adj[static_cast<std::size_t>(u)].end());
            CHECK(nb.size() < e.witness().size());
        }
    }
    CHECK(feasible > 50);
}

TEST_CASE("cardinality accounting") {
    CHECK(extension_alphabet_size(3) == 6);
    CHECK(recoding_alphabet_bound(Entropy(Rational(3, 2))) == 3);
    CHECK(recoding_alphabet_bound(Entropy(2)) == 5);
    CHECK_THROWS_AS(recoding_alphabet_bound(Entropy::infinity()), ArgumentError);
}
