// Acceptance suite: one line per criterion, each under its own time limit.

#include "diagram_gen.hpp"
#include "oracles.hpp"
#include "truncation.hpp"
#include "window_gen.hpp"

#include "symext/dbar.hpp"
#include "symext/extension/generator.hpp"
#include "symext/extension/prefix.hpp"
#include "symext/extension/strips.hpp"
#include "symext/markers/passes.hpp"
#include "symext/markers/verify.hpp"
#include "symext/transfer.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace symext;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

struct Criterion {
    const char* id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
};

Instance root(const DiagramProblem& p) { return Instance{p.diagram->node_index("C"), {}}; }

// Every sampled instance of `node` has value v.
bool constant_on(const Fn& f, const MeasureDiagram& d, const std::string& node, const Entropy& v) {
    const int idx = d.node_index(node);
    for (const auto& x : d.samples(f.scale()))
        if (x.node == idx && f.at(x) != v) return false;
    return true;
}

Outcome scenario_example1() {
    Outcome o;
    auto r = run_scenario("example1", std::nullopt);
    const auto& p = r.problem;
    const auto& d = *p.diagram;
    const auto per = p.per_seq();
    const auto u = minimal_repair(per, Fn::constant(p.diagram, Entropy(0))).u;
    o.require(u.at(root(p)) == Entropy(2), "minimal repair at C is " + u.at(root(p)).str());
    o.require(constant_on(u, d, "B", Entropy(1)), "minimal repair not 1 on the level-1 clusters");
    const auto v = is_repair(r.report.u1, per);
    o.require(!v.pass, "u1 repairs the period tails");
    o.require(v.witness_label == "C", "witness " + v.witness_label);
    o.require(r.report.u1.at(root(p)) + v.residual == Entropy(2), "envelope limit at C is not 2");
    return o;
}

Outcome scenario_example2() {
    Outcome o;
    auto r = run_scenario("example2", Rational(3, 2));
    const auto x = root(r.problem);
    const auto& rep = r.report;
    const Entropy hs = rep.h_sex.at(x), u1 = rep.u1.at(x), he = rep.h_emb.at(x), h = rep.h.at(x);
    o.require(hs == Entropy(Rational(3, 2)), "h_sex(C) = " + hs.str());
    o.require(u1 == Entropy(1), "u1(C) = " + u1.str());
    o.require(he == Entropy(Rational(5, 2)), "h_emb(C) = " + he.str());
    o.require(he == hs + u1, "h_emb(C) != h_sex(C) + u1(C)");
    o.require(rep.p_star == Entropy(1), "P* = " + rep.p_star.str());
    o.require(max(hs, h + u1) < he, "no strict gap above max(h_sex, h + u1)");
    return o;
}

Outcome scenario_example3() {
    Outcome o;
    for (const Rational h0 : {Rational(1, 2), Rational(3, 2)}) {
        auto r = run_scenario("example3", h0);
        const auto x = root(r.problem);
        const auto& rep = r.report;
        const Entropy he = rep.h_emb.at(x);
        o.require(he == max(Entropy(h0), Entropy(1)), "h0 = " + to_string(h0) + ": h_emb(C) = " + he.str());
        o.require(he < rep.h_sex.at(x) + rep.u1.at(x), "h0 = " + to_string(h0) + ": h_emb(C) not below h_sex + u1");
    }
    return o;
}

Outcome pointwise_bounds() {
    Outcome o;
    std::mt19937 rng(6200);
    int checked = 0;
    for (int t = 0; t < 500; ++t) {
        auto rp = gen::random_problem(rng);
        const auto& p = rp.problem;
        const auto rep = analyze_diagram(p.h_fn(), p.tails_seq(), p.per_seq());
        const Fn lower = max(rep.h_sex, rep.h + rep.u1);
        const Fn upper = rep.h_sex + rep.u1;
        for (const auto& x : p.diagram->samples(std::max(upper.scale(), rep.h_emb.scale()))) {
            ++checked;
            const bool ok = lower.at(x) <= rep.h_emb.at(x) && rep.h_emb.at(x) <= upper.at(x);
            o.require(ok, "diagram " + std::to_string(t) + " at " + p.diagram->label(x));
        }
    }
    o.require(checked > 500, "too few instances sampled");
    if (o.pass) o.detail = std::to_string(checked) + " instances";
    return o;
}

Outcome duality() {
    Outcome o;
    std::mt19937 rng(5300);
    int agree = 0, supers = 0;
    for (int t = 0; t < 500; ++t) {
        auto rp = gen::random_problem(rng);
        const auto& p = rp.problem;
        const Fn h = p.h_fn();
        const auto v = is_superenvelope(h + Fn::function(p.diagram, rp.extra), h, p.tails_seq());
        o.require(v.precondition, "instance " + std::to_string(t) + ": precondition failed");
        o.require(v.pass == v.direct, "instance " + std::to_string(t) + " disagrees");
        agree += v.pass == v.direct;
        supers += v.pass;
    }
    // both verdicts must actually occur
    o.require(supers > 0 && supers < 500, "degenerate sample: " + std::to_string(supers) + " superenvelopes");
    if (o.pass) o.detail = std::to_string(agree) + " agreements, " + std::to_string(supers) + " superenvelopes";
    return o;
}

Outcome periodic_counts() {
    Outcome o;
    const auto full = SftSpec::full_shift(2);
    for (int n = 1; n <= 12; ++n) {
        const auto pts = static_cast<std::int64_t>(enumerate_periodic(full, n).size()) * n;
        o.require(pts == oracle::necklace_points(2, n), "full shift n = " + std::to_string(n));
    }
    const auto gm = SftSpec::golden_mean();
    std::vector<std::int64_t> per{0};
    for (int n = 1; n <= 16; ++n) per.push_back(static_cast<std::int64_t>(enumerate_periodic(gm, n).size()) * n);
    for (int n = 1; n <= 16; ++n) {
        std::int64_t fix = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) fix += per[static_cast<std::size_t>(d)];
        o.require(fix == oracle::lucas(n), "golden mean n = " + std::to_string(n) + " vs Lucas");
        o.require(fix == oracle::brute_fixed_points(2, {Word{1, 1}}, n), "golden mean n = " + std::to_string(n) + " vs brute force");
    }
    return o;
}

Outcome entropy_bracket() {
    Outcome o;
    const auto g = top_entropy(SftSpec::golden_mean());
    const double phi = (1 + std::sqrt(5.0)) / 2;
    o.require(g.bits.contains(std::log2(phi)), "bracket " + g.bits.str() + " misses log2(phi)");
    o.require(to_double(g.bits.width()) <= 0.01, "width " + to_string(g.bits.width()));
    const auto f = top_entropy(SftSpec::full_shift(2));
    o.require(f.bits.lo == Rational(1) && f.bits.hi == Rational(1), "full shift " + f.bits.str());
    if (o.pass) o.detail = "golden mean " + g.bits.str();
    return o;
}

bool flagged(const ArrayWindow& w, int row, int start, int end) {
    for (const auto& g : w.long_gaps)
        if (g.row == row && g.start == start && g.end == end) return true;
    return false;
}

// Consecutive-marker gaps recounted from the marker sets.
std::string gap_violation(const ArrayWindow& w, const std::vector<std::pair<int, int>>& bounds) {
    for (int k = 1; k <= w.depth(); ++k) {
        const auto& m = w.row_markers(k);
        auto [lo, hi] = bounds[static_cast<std::size_t>(k - 1)];
        for (auto it = m.begin(); it != m.end() && std::next(it) != m.end(); ++it) {
            const int a = *it, b = *std::next(it), len = b - a;
            if (len >= lo && len <= hi) continue;
            if (len > hi && flagged(w, k, a + 1, b)) continue;
            return "row " + std::to_string(k) + " gap " + std::to_string(len) + " at " + std::to_string(a);
        }
    }
    return "";
}

bool nested(const ArrayWindow& w) {
    for (int k = 2; k <= w.depth(); ++k)
        for (int c : w.row_markers(k))
            if (!w.row_markers(k - 1).count(c)) return false;
    return true;
}

Outcome marker_suite() {
    Outcome o;
    std::mt19937 rng(400);
    const std::vector<int> n3{2, 15, 93};
    const auto adj = adjusted_gap_bounds(n3);
    const std::vector<int> n2{6, 39}, m2{2, 4};
    const auto sub = subdivision_bounds(m2);
    int exceptional = 0;
    for (int t = 0; t < 200; ++t) {
        const std::string tag = "window " + std::to_string(t) + ": ";
        auto w = gen::random_window(rng, 3, 400, 4);
        for (int k = 1; k <= 3; ++k) w = place_krieger(w, k, n3[static_cast<std::size_t>(k - 1)]);
        w = upward_adjust(w);
        o.require(verify_invariants(w, {Rule::A, Rule::B}, RuleOptions{adj}).pass(), tag + "rules A/B after adjustment");
        const auto g = gap_violation(w, adj);
        o.require(g.empty(), tag + "recount: " + g);
        o.require(nested(w), tag + "recount: markers not nested");

        auto s = gen::random_window(rng, 2, 400, 4);
        for (int k = 1; k <= 2; ++k) s = place_krieger(s, k, n2[static_cast<std::size_t>(k - 1)]);
        s = subdivide_balance(upward_adjust(s), MarkerSchedule{n2, m2});
        const auto gs = gap_violation(s, sub);
        o.require(gs.empty(), tag + "subdivided gap outside the bracket: " + gs);
        o.require(nested(s), tag + "subdivided markers not nested");

        auto p = aperiodic_pipeline(gen::patchy_window(rng, 6, 400));
        o.require(verify_invariants(p, {Rule::A, Rule::D, Rule::E}).pass(), tag + "pipeline rules A/D/E");
        std::map<int, int> intr;
        for (const auto& [row, col] : p.intrusions) ++intr[row];
        for (int k = 1; k <= p.depth(); ++k) {
            const auto& m = p.row_markers(k);
            o.require(!m.empty(), tag + "row " + std::to_string(k) + " has no markers");
            int over = 0;
            for (auto it = m.begin(); it != m.end() && std::next(it) != m.end(); ++it) {
                const int len = *std::next(it) - *it;
                o.require(len >= k, tag + "pipeline gap below k in row " + std::to_string(k));
                over += len > 2 * k - 1;
            }
            exceptional += over;
            o.require(over <= intr[k], tag + "row " + std::to_string(k) + ": " + std::to_string(over) + " long gaps for " +
                                           std::to_string(intr[k]) + " intrusions");
        }
    }
    if (o.pass) o.detail = std::to_string(exceptional) + " exceptional gaps, all charged";
    return o;
}

Outcome prefix_suite() {
    Outcome o;
    std::mt19937 rng(1000);
    std::vector<char> mark;
    for (int t = 0; t < 1000; ++t) {
        const int s = 2 + static_cast<int>(rng() % 3);
        const int nmax = s == 2 ? 16 : s == 3 ? 10 : 8;
        const int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(nmax));
        const std::int64_t space = oracle::ipow(s, n);
        std::vector<int> ex;
        std::int64_t used = 0;
        const bool tight = rng() % 4 == 0;
        for (int tries = 0; tries < 200 && ex.size() < 64; ++tries) {
            const int e = static_cast<int>(rng() % static_cast<unsigned>(n + 1));
            if (used + oracle::ipow(s, e) > space) {
                if (tight) continue;
                break;
            }
            used += oracle::ipow(s, e);
            ex.push_back(e);
        }
        const auto a = prefix_allocate(s, n, ex);
        mark.assign(static_cast<std::size_t>(space), 0);
        std::int64_t covered = 0;
        for (std::size_t i = 0; i < ex.size() && o.pass; ++i) {
            const auto& pre = a.entries[i].prefix;
            o.require(static_cast<int>(pre.size()) == n - ex[i], "instance " + std::to_string(t) + ": prefix length");
            // cylinder of the prefix = a contiguous block of lexicographic word indices
            std::int64_t base = 0;
            for (Symbol c : pre) base = base * s + c;
            const std::int64_t len = oracle::ipow(s, ex[i]);
            base *= len;
            for (std::int64_t idx = base; idx < base + len; ++idx) {
                o.require(!mark[static_cast<std::size_t>(idx)], "instance " + std::to_string(t) + ": overlapping cylinders");
                mark[static_cast<std::size_t>(idx)] = 1;
                ++covered;
            }
            const Word first = oracle::word_from_index(base, s, n), last = oracle::word_from_index(base + len - 1, s, n);
            o.require(is_prefix_of(pre, first) && is_prefix_of(pre, last), "instance " + std::to_string(t) + ": cylinder bounds");
        }
        o.require(covered == used, "instance " + std::to_string(t) + ": cylinder sizes");
    }
    return o;
}

bool hall_case(const std::vector<std::vector<int>>& adj, int right, Outcome& o, const std::string& tag) {
    const bool exists = oracle::brute_sdr(adj, right);
    try {
        const auto m = hall_match(adj, right);
        o.require(exists, tag + ": matching found where the oracle has none");
        std::set<int> used;
        for (std::size_t i = 0; i < m.size(); ++i) {
            o.require(std::find(adj[i].begin(), adj[i].end(), m[i]) != adj[i].end(), tag + ": non-edge used");
            used.insert(m[i]);
        }
        o.require(used.size() == adj.size(), tag + ": not injective");
    } catch (const HallInfeasible& e) {
        o.require(!exists, tag + ": infeasible reported where the oracle has a matching");
        std::set<int> nb;
        for (int u : e.witness()) nb.insert(adj[static_cast<std::size_t>(u)].begin(), adj[static_cast<std::size_t>(u)].end());
        o.require(nb.size() < e.witness().size(), tag + ": witness satisfies Hall's condition");
    }
    return exists;
}

Outcome hall_suite() {
    Outcome o;
    int cases = 0, feasible = 0;
    // every bipartite graph with at most 3 x 3 vertices
    for (int l = 1; l <= 3; ++l)
        for (int r = 1; r <= 3; ++r)
            for (int mask = 0; mask < (1 << (l * r)); ++mask) {
                std::vector<std::vector<int>> adj(static_cast<std::size_t>(l));
                for (int i = 0; i < l; ++i)
                    for (int j = 0; j < r; ++j)
                        if (mask >> (i * r + j) & 1) adj[static_cast<std::size_t>(i)].push_back(j);
                feasible += hall_case(adj, r, o, "exhaustive " + std::to_string(l) + "x" + std::to_string(r));
                ++cases;
            }
    std::mt19937 rng(2000);
    for (int t = 0; t < 3000; ++t) {
        const int l = 1 + static_cast<int>(rng() % 8), r = 1 + static_cast<int>(rng() % 12);
        const unsigned density = 2 + rng() % 5;
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(l));
        for (auto& row : adj)
            for (int v = 0; v < r; ++v)
                if (rng() % density == 0) row.push_back(v);
        feasible += hall_case(adj, r, o, "random " + std::to_string(t));
        ++cases;
    }
    o.require(cases >= 2000, "too few cases");
    o.require(feasible > cases / 10 && feasible < cases * 9 / 10, "unbalanced sample");
    if (o.pass) o.detail = std::to_string(cases) + " cases, " + std::to_string(feasible) + " feasible";
    return o;
}

Outcome dbar_suite() {
    Outcome o;
    auto al = std::make_shared<const Alphabet>(Alphabet::of_size(2));
    std::mt19937 rng(30);
    std::vector<PeriodicOrbit> pool;
    while (pool.size() < 30) {
        Word w(1 + rng() % 7);
        for (auto& x : w) x = static_cast<int>(rng() % 2);
        if (minimal_period(w) != static_cast<int>(w.size())) continue;
        PeriodicOrbit orb(al, w);
        if (std::find(pool.begin(), pool.end(), orb) == pool.end()) pool.push_back(orb);
    }
    const std::size_t n = pool.size();
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i][j] = dbar_periodic(pool[i], pool[j]);
    for (std::size_t i = 0; i < n; ++i) {
        o.require(d[i][i] == Rational(0), "d(x, x) != 0");
        for (std::size_t j = 0; j < n; ++j) {
            o.require(d[i][j] == d[j][i], "asymmetric pair");
            o.require((d[i][j] == Rational(0)) == (i == j), "zero distance between distinct orbits");
            for (std::size_t k = 0; k < n; ++k) o.require(d[i][k] <= d[i][j] + d[j][k], "triangle inequality");
        }
    }
    o.require(dbar_periodic(PeriodicOrbit(al, {0}), PeriodicOrbit(al, {0, 1})) == Rational(1, 2), "d(0, 01) != 1/2");

    auto random_mixture = [&](std::vector<std::size_t>& idx) {
        Mixture m;
        const int parts = 1 + static_cast<int>(rng() % 4);
        std::vector<std::int64_t> w;
        std::int64_t total = 0;
        for (int i = 0; i < parts; ++i) {
            w.push_back(1 + static_cast<std::int64_t>(rng() % 5));
            total += w.back();
        }
        idx.clear();
        for (int i = 0; i < parts; ++i) {
            idx.push_back(rng() % n);
            m.parts.emplace_back(Rational(w[static_cast<std::size_t>(i)], total), pool[idx.back()]);
        }
        return m;
    };
    for (int t = 0; t < 200; ++t) {
        std::vector<std::size_t> ia, ib;
        const Mixture mu = random_mixture(ia), nu = random_mixture(ib);
        const auto b = dbar_mixture(mu, nu);
        Rational product{0}, plan_cost{0};
        for (std::size_t i = 0; i < ia.size(); ++i)
            for (std::size_t j = 0; j < ib.size(); ++j) {
                product += mu.parts[i].first * nu.parts[j].first * d[ia[i]][ib[j]];
                plan_cost += b.plan[i][j] * d[ia[i]][ib[j]];
            }
        const std::string tag = "mixture " + std::to_string(t);
        o.require(b.value <= product, tag + ": bound above the product coupling");
        o.require(b.value == plan_cost, tag + ": value differs from its plan");
        for (std::size_t i = 0; i < ia.size(); ++i) {
            Rational row{0};
            for (std::size_t j = 0; j < ib.size(); ++j) {
                o.require(b.plan[i][j] >= Rational(0), tag + ": negative mass");
                row += b.plan[i][j];
            }
            o.require(row == mu.parts[i].first, tag + ": first marginal");
        }
        for (std::size_t j = 0; j < ib.size(); ++j) {
            Rational col{0};
            for (std::size_t i = 0; i < ia.size(); ++i) col += b.plan[i][j];
            o.require(col == nu.parts[j].first, tag + ": second marginal");
        }
        // paired components with equal weights: the bound is at most the weighted sum
        Mixture paired = nu;
        Rational diag{0};
        if (ia.size() == ib.size()) {
            for (std::size_t i = 0; i < ia.size(); ++i) {
                paired.parts[i].first = mu.parts[i].first;
                diag += mu.parts[i].first * d[ia[i]][ib[i]];
            }
            o.require(dbar_mixture(mu, paired).value <= diag, tag + ": paired convexity bound");
        }
    }
    return o;
}

Outcome generator_suite() {
    Outcome o;
    for (const auto& sft : {SftSpec::full_shift(2), SftSpec::golden_mean()}) {
        const auto g = extract_generator(Extension{sft, BlockMap::identity(2), BlockMap::identity(2)}, 8);
        for (auto m : g.multiplicity) o.require(m == 1, "identity multiplicity " + std::to_string(m));
        o.require(g.code_inverts == true, "identity code does not invert");
    }
    for (int rho = 0; rho <= 3; ++rho) {
        const std::string tag = "delay " + std::to_string(rho) + ": ";
        const SftSpec toy = delay_toy(rho);
        const BlockMap top = BlockMap::row_reader(toy, 0);
        const int observe = 1, depth = std::min(8, observe + rho + 3);
        const auto g = extract_generator(Extension{toy, top, std::nullopt}, depth, observe);
        const int radius = observe + rho;
        for (int k = 0; k <= depth; ++k) {
            const auto m = g.multiplicity[static_cast<std::size_t>(k)];
            // free top-row coordinates: [-observe, observe + rho] minus the named [-k, k]
            const int free = std::max(0, observe - k) + std::max(0, radius - k);
            o.require(m == static_cast<std::size_t>(oracle::ipow(2, free)), tag + "multiplicity at " + std::to_string(k));
            if (k > 0 && k <= radius) o.require(m < g.multiplicity[static_cast<std::size_t>(k - 1)], tag + "not strictly decreasing");
        }
        const auto img = partition_to_extension(toy, top, 8);
        o.require(img.decoder.has_value(), tag + "no decoder");
        if (!img.decoder) continue;
        o.require(img.decoder->radius == rho, tag + "decoder radius " + std::to_string(img.decoder->radius));
        o.require(img.factor_check, tag + "decoder is not a left inverse");
        const auto back = extract_generator(Extension{toy, top, img.decoder}, std::min(8, rho + 2));
        o.require(back.code_inverts == true, tag + "round trip fails");
        o.require(back.multiplicity[static_cast<std::size_t>(rho)] == 1, tag + "not generating at the decoder radius");
        const auto full = SftSpec::full_shift(2);
        for (int l = 0; l <= 8; ++l)
            o.require(img.language[static_cast<std::size_t>(l)] == full.language(l), tag + "image language");
    }
    const SftSpec prod = product_toy();
    const auto p = extract_generator(Extension{prod, BlockMap::row_reader(prod, 0), std::nullopt}, 4);
    o.require(!p.generating(), "independent rows should never generate");
    o.require(!partition_to_extension(prod, BlockMap::row_reader(prod, 0), 4).decoder, "decoder for independent rows");
    return o;
}

std::int64_t max_constant(const SpecTable& t) {
    std::int64_t c = 0;
    for (const auto& [id, th] : t) c = std::max(c, th.c);
    return c;
}

Outcome truncation_suite() {
    Outcome o;
    int compared = 0;
    const std::vector<std::pair<std::string, std::optional<Rational>>> runs{
        {"example1", std::nullopt}, {"example2", Rational(3, 2)}, {"example3", Rational(1, 2)},
        {"example3", Rational(3, 2)}, {"pickupsticks", std::nullopt}, {"trivial", std::nullopt}};
    for (const auto& [name, h0] : runs) {
        auto r = run_scenario(name, h0);
        const auto& p = r.problem;
        const auto& d = *p.diagram;
        const std::int64_t need = 2 * std::max({max_constant(p.h), max_constant(p.tails), max_constant(p.per)});
        for (std::int64_t T : {10, 20, 40}) {
            if (T < need) continue;
            oracle::Trunc tr(d, T);
            const auto h = tr.spec(p.h, false);
            const auto th = tr.spec(p.tails, true);
            const auto u1 = tr.lim(tr.envelope(tr.spec(p.per, true)));
            const auto sex = tr.repair(th, tr.constant(Entropy(0)), 5, d.depth() + 1);
            const auto emb = tr.repair(th, u1, 5, d.depth() + 1);
            for (const auto& x : d.samples(3)) {
                const std::string tag = name + " T=" + std::to_string(T) + " at " + d.label(x);
                o.require(u1(0, x) == r.report.u1.at(x), tag + ": u1");
                o.require(h(0, x) + sex(0, x) == r.report.h_sex.at(x), tag + ": h_sex");
                o.require(h(0, x) + emb(0, x) == r.report.h_emb.at(x), tag + ": h_emb");
                ++compared;
            }
        }
    }
    if (o.pass) o.detail = std::to_string(compared) + " instance comparisons";
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> all{
        {"01", "example1: minimal period-tail repair 2 at the root, 1 on clusters; u1 fails with root witness", 1, scenario_example1},
        {"02", "example2 (h0 = 3/2): h_emb = 5/2 = h_sex + u1 at the root, P* = 1, strict gap", 1, scenario_example2},
        {"03", "example3 (h0 = 1/2, 3/2): h_emb = max(h0, 1) < h_sex + u1 at the root", 1, scenario_example3},
        {"04", "pointwise max(h_sex, h + u1) <= h_emb <= h_sex + u1 on 500 random diagrams", 30, pointwise_bounds},
        {"05", "superenvelope test agrees with the tail-repair test on 500 random instances", 30, duality},
        {"06", "full 2-shift orbit counts (n <= 12) and golden-mean fixed points vs Lucas (n <= 16)", 10, periodic_counts},
        {"07", "entropy brackets: golden mean contains log2(phi) with width <= 0.01, full 2-shift exact", 5, entropy_bracket},
        {"08", "marker passes on 200 random windows of width 400", 60, marker_suite},
        {"09", "prefix allocation on 1000 Kraft-feasible instances, cylinders by enumeration", 30, prefix_suite},
        {"10", "Hall matching vs exhaustive SDR search (<= 8 strips, <= 12 words)", 60, hall_suite},
        {"11", "d-bar pseudometric on a 30-orbit pool and mixture bound on 200 mixtures", 30, dbar_suite},
        {"12", "generator multiplicities and decoder round trips on toy extensions (depth <= 8)", 10, generator_suite},
        {"13", "threshold algebra vs truncated brute force at T = 10, 20, 40 on all scenarios", 30, truncation_suite},
    };
    int failed = 0;
    for (const auto& c : all) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (out.pass && secs > c.limit_s) {
            out.pass = false;
            out.detail = "time limit exceeded";
        }
        failed += !out.pass;
        std::printf("%s  %s  %s  [%.2f s / %.0f s]%s%s\n", out.pass ? "PASS" : "FAIL", c.id, c.name, secs, c.limit_s,
                    out.detail.empty() ? "" : "  ", out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(all.size()) - failed, all.size());
    return failed ? 1 : 0;
}
