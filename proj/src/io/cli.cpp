#include "symext/io/cli.hpp"

#include "symext/dbar.hpp"
#include "symext/errors.hpp"
#include "symext/extension/strips.hpp"
#include "symext/io/report.hpp"
#include "symext/io/spec.hpp"
#include "symext/transfer.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>
#include <set>

namespace symext {

namespace {

constexpr int kDefaultPerDepth = 12;
constexpr int kDefaultGeneratorDepth = 6;
constexpr std::size_t kMaxListedOrbits = 256;
constexpr std::size_t kMaxTraceStates = 2048;

struct Flags {
    std::string spec;
    std::string h0;
    int depth = -1;
    int cap = -1;
    std::string format = "json";
    std::string pass;
    std::string scenario;
    std::string command;
};

std::string canonical(const std::string& command, const Flags& f) {
    std::string s = "symext " + command;
    if (!f.pass.empty()) s += " --pass " + f.pass;
    if (!f.scenario.empty()) s += " " + f.scenario;
    if (!f.spec.empty()) s += " --spec " + f.spec;
    if (!f.h0.empty()) s += " --h0 " + f.h0;
    if (f.depth >= 0) s += " --depth " + std::to_string(f.depth);
    if (f.cap >= 0) s += " --cap " + std::to_string(f.cap);
    return s;
}

SpecFile spec_of(const Flags& f, SpecKind kind) {
    if (f.spec.empty()) throw ArgumentError("--spec is required");
    auto s = load_spec(f.spec);
    if (s.kind != kind) throw SchemaError("kind", "expected a " + kind_name(kind) + " spec, got " + kind_name(s.kind));
    return s;
}

void stamp(Report& r, const std::string& spec_digest, const Flags& f) {
    // Flags other than the spec path and the output format feed the digest.
    Flags g = f;
    g.spec.clear();
    g.format.clear();
    r.digest = fnv1a64(spec_digest + "\n" + canonical(f.command, g));
}

// Fixed-point counts of sigma^n from traces of powers of the transfer matrix.
std::vector<std::int64_t> traces(const SftSpec& sft, int N) {
    const auto a = transfer_matrix<std::int64_t>(sft.graph());
    MatrixX<std::int64_t> p = a;
    std::vector<std::int64_t> out;
    for (int n = 1; n <= N; ++n) {
        out.push_back(p.trace());
        if (n < N) p = p * a;
    }
    return out;
}

void cmd_per(Report& r, const Flags& f) {
    const auto spec = spec_of(f, SpecKind::sft);
    stamp(r, spec.digest, f);
    const auto& sft = spec.as<SftSpec>();
    const int N = f.depth >= 0 ? f.depth : kDefaultPerDepth;
    const int cap = f.cap >= 0 ? f.cap : kDefaultPeriodCap;
    if (N < 1) throw ArgumentError("--depth must be at least 1");

    ojson points = ojson::object(), orbits = ojson::object();
    std::vector<std::uint64_t> by_n;
    for (int n = 1; n <= N; ++n) {
        const auto orb = enumerate_periodic(sft, n, cap);
        const auto key = std::to_string(n);
        by_n.push_back(orb.size() * static_cast<std::uint64_t>(n));
        points[key] = by_n.back();
        ojson o;
        o["count"] = orb.size();
        if (orb.size() <= kMaxListedOrbits) {
            ojson reps = ojson::array();
            for (const auto& x : orb) reps.push_back(x.str());
            o["representatives"] = reps;
        } else {
            r.warnings.push_back("representatives omitted for n = " + key + " (" + std::to_string(orb.size()) + " orbits)");
        }
        orbits[key] = o;
    }
    r.result["range"] = N;
    r.result["cap"] = cap;
    r.result["points"] = points;
    r.result["orbits"] = orbits;

    if (sft.graph().states.size() > kMaxTraceStates || N > 40) {
        r.warnings.push_back("trace cross-check skipped: language graph too large");
        return;
    }
    const auto tr = traces(sft, N);
    bool ok = true;
    std::string first;
    for (int n = 1; n <= N && ok; ++n) {
        std::uint64_t fix = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) fix += by_n[static_cast<std::size_t>(d - 1)];
        if (static_cast<std::int64_t>(fix) != tr[static_cast<std::size_t>(n - 1)]) {
            ok = false;
            first = "n = " + std::to_string(n) + ": " + std::to_string(fix) + " vs trace " + std::to_string(tr[static_cast<std::size_t>(n - 1)]);
        }
    }
    r.check("fixed points of sigma^n match transfer-matrix traces", ok, "agreement", ok ? "agreement" : first);
}

void cmd_capacities(Report& r, const Flags& f) {
    const auto spec = spec_of(f, SpecKind::sft);
    stamp(r, spec.digest, f);
    const int N = f.depth >= 0 ? f.depth : kDefaultPerDepth;
    const int cap = f.cap >= 0 ? f.cap : kDefaultPeriodCap;
    if (N < 1) throw ArgumentError("--depth must be at least 1");
    const auto c = capacities(per_table(spec.as<SftSpec>(), N, cap), std::min(kDefaultCapacityWindow, N));
    r.result["range"] = c.range;
    r.result["p_sup"] = to_json(c.p_sup);
    r.result["p_lim_estimate"] = to_json(c.p_lim_estimate);
    r.result["p_lim_window"] = ojson::array({c.range - c.window + 1, c.range});
    r.warnings.push_back("P_sup taken over periods 1.." + std::to_string(c.range));
    r.warnings.push_back("P_lim is an estimate: max over periods " + std::to_string(c.range - c.window + 1) + ".." +
                         std::to_string(c.range));
}

void cmd_entropy(Report& r, const Flags& f) {
    const auto spec = spec_of(f, SpecKind::sft);
    stamp(r, spec.digest, f);
    const int max_it = f.cap >= 0 ? f.cap : 20000;
    const auto t = top_entropy(spec.as<SftSpec>(), kDefaultEntropyTolerance, max_it);
    if (!t.converged)
        throw ResourceError("power iteration stopped after " + std::to_string(t.iterations) + " steps without reaching tolerance");
    r.result["bits"] = to_json(t.bits);
    r.result["tolerance"] = kDefaultEntropyTolerance;
    r.result["iterations"] = t.iterations;
    if (!t.bits.exact()) r.warnings.push_back("bracket of width <= " + std::to_string(kDefaultEntropyTolerance) + " bits");
}

ojson mixture_json(const Mixture& m) {
    ojson out = ojson::array();
    for (const auto& [w, o] : m.parts) {
        ojson x;
        x["weight"] = to_json(w);
        x["orbit"] = o.str();
        out.push_back(x);
    }
    return out;
}

void cmd_dbar(Report& r, const Flags& f) {
    const auto spec = spec_of(f, SpecKind::dbar);
    stamp(r, spec.digest, f);
    const auto& d = spec.as<DbarSpec>();
    r.result["mu"] = mixture_json(d.mu);
    r.result["nu"] = mixture_json(d.nu);
    if (d.mu.parts.size() == 1 && d.nu.parts.size() == 1) {
        r.result["value"] = to_json(dbar_periodic(d.mu.parts[0].second, d.nu.parts[0].second));
        r.result["exact"] = true;
        return;
    }
    const auto b = dbar_mixture(d.mu, d.nu);
    r.result["value"] = to_json(b.value);
    r.result["exact"] = false;
    ojson plan = ojson::array();
    for (const auto& row : b.plan) {
        ojson x = ojson::array();
        for (const auto& v : row) x.push_back(to_string(v));
        plan.push_back(x);
    }
    r.result["plan"] = plan;
    r.warnings.push_back("upper bound: optimal transport of component weights under periodic d-bar costs");
}

const std::vector<std::string>& marker_passes() {
    static const std::vector<std::string> names{"krieger", "upward-adjust", "subdivide", "periodic", "upward-stretch",
                                                "leftward-stretch", "pipeline", "verify"};
    return names;
}

const MarkerSchedule& need_schedule(const WindowSpec& s, bool need_m) {
    if (!s.schedule || static_cast<int>(s.schedule->n.size()) < s.window.depth())
        throw ArgumentError("this pass needs schedule.n with one entry per row");
    if (need_m && static_cast<int>(s.schedule->m.size()) < s.window.depth())
        throw ArgumentError("this pass needs schedule.m with one entry per row");
    return *s.schedule;
}

ArrayWindow krieger_all(ArrayWindow w, const std::vector<int>& n) {
    for (int k = 1; k <= w.depth(); ++k) w = place_krieger(std::move(w), k, n[static_cast<std::size_t>(k - 1)]);
    return w;
}

void cmd_markers(Report& r, const Flags& f) {
    const auto& passes = marker_passes();
    if (std::find(passes.begin(), passes.end(), f.pass) == passes.end())
        throw ArgumentError("unknown pass '" + f.pass + "'");
    const auto spec = spec_of(f, SpecKind::window);
    stamp(r, spec.digest, f);
    const auto& s = spec.as<WindowSpec>();
    ArrayWindow w = s.window;
    std::vector<Rule> rules;
    RuleOptions opts;
    if (f.pass == "krieger") {
        const auto& sch = need_schedule(s, false);
        w = krieger_all(w, sch.n);
        for (int k = 1; k <= w.depth(); ++k) opts.gap_bounds.push_back({sch.n[static_cast<std::size_t>(k - 1)], 2 * sch.n[static_cast<std::size_t>(k - 1)] + 1});
        rules = {Rule::A};
    } else if (f.pass == "upward-adjust") {
        const auto& sch = need_schedule(s, false);
        sch.check_growth();
        w = upward_adjust(krieger_all(w, sch.n));
        opts.gap_bounds = adjusted_gap_bounds(sch.n);
        rules = {Rule::A, Rule::B};
    } else if (f.pass == "subdivide") {
        const auto& sch = need_schedule(s, true);
        w = subdivide_balance(upward_adjust(krieger_all(w, sch.n)), sch);
        opts.gap_bounds = subdivision_bounds(sch.m);
        rules = {Rule::A, Rule::B};
    } else if (f.pass == "periodic") {
        const int k = f.depth >= 0 ? f.depth : w.depth();
        if (k < 1 || k > w.depth()) throw ArgumentError("--depth must name a row in 1.." + std::to_string(w.depth()));
        w = periodic_markers(w, k);
        rules = {Rule::D};
    } else if (f.pass == "upward-stretch") {
        w = upward_stretch(w);
        rules = {Rule::D};
    } else if (f.pass == "leftward-stretch") {
        w = leftward_stretch(w);
        rules = {Rule::D, Rule::E};
    } else if (f.pass == "pipeline") {
        w = aperiodic_pipeline(w);
        rules = {Rule::A, Rule::D, Rule::E};
    } else {
        rules = {Rule::A, Rule::B, Rule::D};
    }
    if (!s.rules.empty()) rules = s.rules;

    r.result["pass"] = f.pass;
    r.result["width"] = w.width();
    r.result["depth"] = w.depth();
    r.result["rows"] = w.render();
    ojson markers = ojson::array();
    for (const auto& m : w.markers) markers.push_back(std::vector<int>(m.begin(), m.end()));
    r.result["markers"] = markers;
    ojson gaps = ojson::array();
    for (const auto& g : w.long_gaps)
        gaps.push_back({{"row", g.row}, {"start", g.start}, {"end", g.end}, {"period", g.period},
                        {"open_left", g.open_left}, {"open_right", g.open_right}});
    r.result["long_gaps"] = gaps;
    ojson intr = ojson::array();
    for (const auto& [row, col] : w.intrusions) intr.push_back({row, col});
    r.result["intrusions"] = intr;
    for (const auto& x : w.warnings) r.warnings.push_back(x);

    const auto rep = verify_invariants(w, rules, opts);
    for (const auto& v : rep.verdicts) {
        std::string actual = "holds";
        if (v.witness)
            actual = "row " + std::to_string(v.witness->row) + ", column " + std::to_string(v.witness->column) + ": " + v.witness->detail;
        if (v.rule == Rule::E) actual += " (" + std::to_string(v.exceptions) + " exceptional gaps)";
        r.check("rule " + rule_name(v.rule), v.pass, "holds", actual);
    }
}

std::string family_pattern(const Family& fam, const Alphabet& a) {
    std::string out(static_cast<std::size_t>(fam.width), '*');
    for (const auto& [pos, sym] : fam.fixed) out[static_cast<std::size_t>(pos)] = a.name(sym)[0];
    return out;
}

OracleTable certified_oracle(const HierarchySpec& h) {
    if (h.normalize) return normalize_oracle(h.oracle, h.s, h.hierarchy);
    check_oracle(h.oracle, h.s, h.hierarchy, 0);
    return h.oracle;
}

void cmd_extend_build(Report& r, const Flags& f) {
    const auto spec = spec_of(f, SpecKind::hierarchy);
    stamp(r, spec.digest, f);
    const auto& h = spec.as<HierarchySpec>();
    const auto oracle = certified_oracle(h);
    const auto fams = build_families(h.hierarchy, oracle, h.s);
    const Alphabet a = Alphabet::of_size(h.s);
    ojson levels = ojson::array();
    bool disjoint = true, sized = true;
    std::string where;
    for (int k = 1; k <= h.hierarchy.depth(); ++k) {
        ojson level = ojson::object();
        const auto& rects = h.hierarchy.levels[static_cast<std::size_t>(k - 1)];
        for (const auto& rect : rects) {
            const auto& fam = fams.at(k, rect.id);
            ojson x;
            x["budget"] = oracle.at(k, rect.id);
            x["pattern"] = family_pattern(fam, a);
            x["free"] = fam.free.size();
            x["skeleton"] = fam.skeleton;
            level[rect.id] = x;
            std::uint64_t size = 1;
            for (std::size_t i = 0; i < fam.free.size() && size <= oracle.at(k, rect.id); ++i) size *= static_cast<std::uint64_t>(h.s);
            if (size != oracle.at(k, rect.id)) {
                sized = false;
                where = rect.id;
            }
        }
        for (std::size_t i = 0; i < rects.size(); ++i)
            for (std::size_t j = i + 1; j < rects.size(); ++j)
                if (!families_disjoint(fams.at(k, rects[i].id), fams.at(k, rects[j].id))) {
                    disjoint = false;
                    where = rects[i].id + " / " + rects[j].id;
                }
        levels.push_back(level);
    }
    r.result["alphabet_size"] = h.s;
    r.result["normalized"] = h.normalize;
    r.result["families"] = levels;
    r.result["extension_alphabet_size"] = extension_alphabet_size(h.s);
    r.check("families on each level pairwise disjoint", disjoint, "disjoint", disjoint ? "disjoint" : where);
    r.check("family sizes equal the certified budgets", sized, "equal", sized ? "equal" : where);
}

void cmd_extend_selector(Report& r, const Flags& f) {
    const auto spec = spec_of(f, SpecKind::hierarchy);
    stamp(r, spec.digest, f);
    const auto& h = spec.as<HierarchySpec>();
    if (h.paths.empty()) throw SchemaError("paths", "the selector needs at least one path");
    const auto fams = build_families(h.hierarchy, certified_oracle(h), h.s);
    const Alphabet a = Alphabet::of_size(h.s);
    std::set<std::pair<std::vector<std::vector<int>>, Word>> seen;
    bool injective = true;
    std::string clash;
    ojson out = ojson::array();
    for (const auto& path : h.paths) {
        const Word w = embed_selector(path, h.hierarchy, fams);
        const auto& skel = fams.at(h.hierarchy.depth(), path.back()).skeleton;
        if (!seen.insert({skel, w}).second) {
            injective = false;
            clash = a.render(w);
        }
        ojson x;
        x["path"] = path;
        x["word"] = a.render(w);
        out.push_back(x);
    }
    r.result["selections"] = out;
    r.check("selector injective on the given paths", injective, "injective", injective ? "injective" : "repeat of " + clash);
}

void cmd_extend_hall(Report& r, const Flags& f) {
    const auto spec = spec_of(f, SpecKind::hall);
    stamp(r, spec.digest, f);
    const auto& h = spec.as<HallSpec>();
    std::map<Word, int> ids;
    std::vector<Word> words;
    std::vector<std::vector<int>> adj;
    for (const auto& ws : h.words) {
        std::vector<int> row;
        for (const auto& w : ws) {
            auto [it, fresh] = ids.emplace(w, static_cast<int>(words.size()));
            if (fresh) words.push_back(w);
            row.push_back(it->second);
        }
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        adj.push_back(std::move(row));
    }
    r.result["n"] = h.n;
    try {
        const auto m = hall_match(adj, static_cast<int>(words.size()));
        ojson assign = ojson::object();
        for (std::size_t i = 0; i < m.size(); ++i) assign[h.ids[i]] = h.alphabet.render(words[static_cast<std::size_t>(m[i])]);
        r.result["assignment"] = assign;
        r.check("distinct representatives exist", true, "matching", "matching");
    } catch (const HallInfeasible& e) {
        ojson wit = ojson::array(), nb = ojson::array();
        for (int i : e.witness()) wit.push_back(h.ids[static_cast<std::size_t>(i)]);
        for (int j : e.neighbourhood()) nb.push_back(h.alphabet.render(words[static_cast<std::size_t>(j)]));
        r.result["hall_violation"] = {{"strips", wit}, {"words", nb}};
        r.check("distinct representatives exist", false, "matching",
                std::to_string(e.witness().size()) + " strips share " + std::to_string(e.neighbourhood().size()) + " words");
    }
}

ojson multiplicities(const GeneratorReport& g) {
    ojson m = ojson::array();
    for (auto x : g.multiplicity) m.push_back(x);
    return m;
}

void cmd_extend_generator(Report& r, const Flags& f) {
    const auto spec = spec_of(f, SpecKind::extension);
    stamp(r, spec.digest, f);
    const auto& e = spec.as<ExtensionSpec>();
    const int depth = f.depth >= 0 ? f.depth : kDefaultGeneratorDepth;
    if (depth > 8 && f.cap < 0) throw ResourceError("--depth above 8 needs an explicit --cap");
    if (f.cap >= 0 && depth > f.cap) throw ResourceError("--depth exceeds --cap");
    const auto g = extract_generator(e.ext, depth, e.observe);
    r.result["depth"] = depth;
    r.result["observe"] = e.observe;
    r.result["multiplicity"] = multiplicities(g);
    r.result["atoms"] = g.atoms;
    r.result["generating"] = g.generating();
    bool mono = true;
    for (std::size_t n = 1; n < g.multiplicity.size(); ++n) mono = mono && g.multiplicity[n] <= g.multiplicity[n - 1];
    r.check("multiplicity nonincreasing in depth", mono);
    if (g.code_inverts) r.check("code inverts the selector", *g.code_inverts, "true", *g.code_inverts ? "true" : "false");

    const auto img = partition_to_extension(e.ext.ambient, e.ext.selector, depth);
    ojson sizes = ojson::array();
    for (const auto& l : img.language) sizes.push_back(l.size());
    r.result["image_language_sizes"] = sizes;
    if (!img.decoder) {
        r.result["decoder_radius"] = nullptr;
        r.warnings.push_back("no decoder of radius <= " + std::to_string(depth));
        return;
    }
    r.result["decoder_radius"] = img.decoder->radius;
    r.check("decoder composed with the selector is the identity", img.factor_check);
    const auto back = extract_generator(Extension{e.ext.ambient, e.ext.selector, img.decoder}, depth);
    r.check("round trip through the derived decoder", back.code_inverts.value_or(false));
}

ojson node_values(const Fn& f) {
    ojson out = ojson::object();
    for (const auto& n : tabulate(f)) {
        if (n.lo == n.hi) out[n.node] = to_json(n.lo);
        else out[n.node] = {{"min", to_json(n.lo)}, {"max", to_json(n.hi)}};
    }
    return out;
}

void diagram_result(Report& r, const DiagramReport& d) {
    r.result["h"] = node_values(d.h);
    r.result["h_sex"] = node_values(d.h_sex);
    r.result["u1"] = node_values(d.u1);
    r.result["h_emb"] = node_values(d.h_emb);
    r.result["repair"] = {{"label", d.repair_label}, {"sex_iterations", d.sex_iterations}, {"emb_iterations", d.emb_iterations}};
    r.result["p_star"] = to_json(d.p_star);
    r.result["p_sup"] = d.p_sup ? to_json(*d.p_sup) : ojson(nullptr);
    r.result["sup"] = {{"h_sex", to_json(d.sup_h_sex)}, {"h_emb", to_json(d.sup_h_emb)}, {"h_plus_u1", to_json(d.sup_h_u1)}};
    r.result["cardinality"] = d.cardinality ? ojson(*d.cardinality) : ojson(nullptr);
    for (const auto& b : d.bounds) r.check(b.name, b.pass, "holds", b.witness ? "fails at " + *b.witness : (b.pass ? "holds" : "fails"));
    for (const auto& w : d.warnings) r.warnings.push_back(w);
}

void cmd_diagram(Report& r, const Flags& f) {
    const auto spec = spec_of(f, SpecKind::diagram);
    stamp(r, spec.digest, f);
    const auto& s = spec.as<DiagramSpec>();
    const auto& p = s.problem;
    const auto d = analyze_diagram(p.h_fn(), p.tails_seq(), p.per_seq());
    diagram_result(r, d);
    if (!s.e) return;
    const auto v = is_superenvelope(Fn::function(p.diagram, *s.e), p.h_fn(), p.tails_seq());
    r.result["superenvelope"] = {{"repairs_tails", v.pass}, {"direct", v.direct}, {"precondition", v.precondition},
                                 {"k_checked", v.k_checked}, {"witness", v.witness ? ojson(*v.witness) : ojson(nullptr)}};
    if (v.precondition)
        r.check("superenvelope characterizations agree", v.pass == v.direct, v.pass ? "true" : "false", v.direct ? "true" : "false");
    else
        r.warnings.push_back("h_{k+1} - h_k not usc on the checked range; direct test not conclusive");
}

void cmd_scenario(Report& r, const Flags& f) {
    std::optional<Rational> h0;
    if (!f.h0.empty()) h0 = parse_rational(f.h0);
    stamp(r, "", f);
    const auto s = run_scenario(f.scenario, h0);
    r.result["scenario"] = s.name;
    r.result["h0"] = s.h0 ? to_json(*s.h0) : ojson(nullptr);
    diagram_result(r, s.report);
    if (s.repair) r.result["period_tail_repair"] = node_values(*s.repair);
    for (const auto& c : s.checks) r.check(c.name, c.pass, c.expected, c.actual);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Symbolic extension toolkit", "symext"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags f;
    app.add_option("--spec", f.spec, "input spec file (JSON)");
    app.add_option("--h0", f.h0, "entropy parameter p/q for scenarios");
    app.add_option("--depth", f.depth, "depth, period range or row, depending on the command")->check(CLI::NonNegativeNumber);
    app.add_option("--cap", f.cap, "resource cap")->check(CLI::NonNegativeNumber);
    app.add_option("--format", f.format, "json or table")->check(CLI::IsMember({"json", "table"}));

    std::string command;
    auto leaf = [&](CLI::App* sub, std::string name) { sub->callback([&command, name] { command = name; }); };
    leaf(app.add_subcommand("per", "periodic point counts"), "per");
    leaf(app.add_subcommand("capacities", "period capacities"), "capacities");
    leaf(app.add_subcommand("entropy", "topological entropy bracket"), "entropy");
    leaf(app.add_subcommand("dbar", "d-bar between periodic mixtures"), "dbar");
    auto* markers = app.add_subcommand("markers", "marker passes");
    markers->require_subcommand(1);
    auto* mrun = markers->add_subcommand("run", "run one pass and verify its invariants");
    mrun->add_option("--pass", f.pass, "pass name")->required()->check(CLI::IsMember(marker_passes()));
    leaf(mrun, "markers run");
    auto* extend = app.add_subcommand("extend", "extension construction");
    extend->require_subcommand(1);
    for (const char* n : {"build", "selector", "hall", "generator"}) leaf(extend->add_subcommand(n), std::string("extend ") + n);
    auto* diagram = app.add_subcommand("diagram", "measure diagrams");
    diagram->require_subcommand(1);
    leaf(diagram->add_subcommand("analyze", "analyze a diagram spec"), "diagram analyze");
    auto* scen = app.add_subcommand("scenario", "built-in scenarios");
    scen->add_option("name", f.scenario, "scenario name")->required()->check(CLI::IsMember(scenario_names()));
    leaf(scen, "scenario");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "symext: " << e.what() << "\n";
        return kExitInput;
    }

    f.command = command;
    Report r;
    r.command = canonical(command, f);
    try {
        if (command == "per") cmd_per(r, f);
        else if (command == "capacities") cmd_capacities(r, f);
        else if (command == "entropy") cmd_entropy(r, f);
        else if (command == "dbar") cmd_dbar(r, f);
        else if (command == "markers run") cmd_markers(r, f);
        else if (command == "extend build") cmd_extend_build(r, f);
        else if (command == "extend selector") cmd_extend_selector(r, f);
        else if (command == "extend hall") cmd_extend_hall(r, f);
        else if (command == "extend generator") cmd_extend_generator(r, f);
        else if (command == "diagram analyze") cmd_diagram(r, f);
        else if (command == "scenario") cmd_scenario(r, f);
        else throw InternalError("no handler for '" + command + "'");
    } catch (const SchemaError& e) {
        err << "symext: schema error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ArgumentError& e) {
        err << "symext: input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const ConstructionError& e) {
        err << "symext: construction failed: " << e.what() << "\n";
        return kExitInput;
    } catch (const ResourceError& e) {
        err << "symext: resource cap: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::exception& e) {
        err << "symext: internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    out << emit_report(r, parse_format(f.format));
    if (!r.pass()) {
        for (const auto& v : r.verdicts)
            if (!v.pass) err << "symext: FAIL " << v.name << ": expected " << v.expected << ", got " << v.actual << "\n";
        return kExitAssertion;
    }
    return kExitPass;
}

}  // namespace symext
