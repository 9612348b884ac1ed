#include "symext/io/spec.hpp"

#include "symext/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace symext {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw SchemaError(path, what); }

std::string at_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

// Object view that records which keys were read so leftovers can be rejected.
class Obj {
public:
    Obj(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) fail(path_, "expected an object");
    }
    std::string sub(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
    const json& req(const std::string& key) {
        used_.insert(key);
        if (!j_.contains(key)) fail(sub(key), "missing field");
        return j_.at(key);
    }
    const json* opt(const std::string& key) {
        used_.insert(key);
        return j_.contains(key) ? &j_.at(key) : nullptr;
    }
    void done() const {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!used_.count(it.key())) fail(sub(it.key()), "unknown field");
    }
    const std::string& path() const { return path_; }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> used_;
};

const json& arr(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    return j;
}

std::int64_t integer(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<std::int64_t>();
}

int small_int(const json& j, const std::string& path, std::int64_t lo, std::int64_t hi) {
    auto v = integer(j, path);
    if (v < lo || v > hi) fail(path, "must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

std::string str(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

bool boolean(const json& j, const std::string& path) {
    if (!j.is_boolean()) fail(path, "expected a boolean");
    return j.get<bool>();
}

Rational rational(const json& j, const std::string& path) {
    try {
        if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
        if (j.is_number_float()) return parse_rational(j.dump());
        if (j.is_string()) return parse_rational(j.get<std::string>());
    } catch (const ArgumentError& e) {
        fail(path, e.what());
    }
    fail(path, "expected a rational (integer, decimal or \"p/q\")");
}

Entropy entropy(const json& j, const std::string& path) {
    if (j.is_string() && j.get<std::string>() == "inf") return Entropy::infinity();
    auto r = rational(j, path);
    if (r < Rational(0)) fail(path, "entropy must be nonnegative");
    return Entropy(r);
}

// A list of symbol names, or a string of single-character names.
Alphabet alphabet(const json& j, const std::string& path) {
    std::vector<std::string> names;
    if (j.is_string()) {
        for (char c : j.get<std::string>()) names.emplace_back(1, c);
    } else {
        const auto& a = arr(j, path);
        for (std::size_t i = 0; i < a.size(); ++i) names.push_back(str(a[i], at_index(path, i)));
    }
    try {
        return Alphabet(std::move(names));
    } catch (const ArgumentError& e) {
        fail(path, e.what());
    }
}

Word word(const json& j, const Alphabet& a, const std::string& path) {
    try {
        if (j.is_string()) {
            if (!a.single_char()) fail(path, "multi-character alphabet: give the word as an array of symbols");
            return a.parse(j.get<std::string>());
        }
        const auto& v = arr(j, path);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < v.size(); ++i) names.push_back(str(v[i], at_index(path, i)));
        return a.parse(names);
    } catch (const ArgumentError& e) {
        fail(path, e.what());
    }
}

std::vector<Word> words(const json& j, const Alphabet& a, const std::string& path) {
    std::vector<Word> out;
    const auto& v = arr(j, path);
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(word(v[i], a, at_index(path, i)));
    return out;
}

std::vector<std::string> strings(const json& j, const std::string& path) {
    std::vector<std::string> out;
    const auto& v = arr(j, path);
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(str(v[i], at_index(path, i)));
    return out;
}

// Wraps construction-time ArgumentErrors so they carry the field path.
template <typename F>
auto guarded(const std::string& path, F&& f) {
    try {
        return f();
    } catch (const ArgumentError& e) {
        fail(path, e.what());
    }
}

SftSpec sft_from(Obj& o) {
    std::vector<Alphabet> rows;
    if (const auto* r = o.opt("rows")) {
        const auto& v = arr(*r, o.sub("rows"));
        if (v.empty()) fail(o.sub("rows"), "needs at least one row");
        for (std::size_t i = 0; i < v.size(); ++i) rows.push_back(alphabet(v[i], at_index(o.sub("rows"), i)));
    }
    const json* aj = o.opt("alphabet");
    if (!aj && rows.empty()) fail(o.sub("alphabet"), "missing field");
    Alphabet a = aj ? alphabet(*aj, o.sub("alphabet")) : Alphabet::product(rows);
    std::vector<Word> forbidden;
    if (const auto* f = o.opt("forbidden")) forbidden = words(*f, a, o.sub("forbidden"));
    return guarded(o.path().empty() ? "alphabet" : o.path(), [&] { return SftSpec(a, forbidden, rows); });
}

Boundary boundary(const json& j, const std::string& path) {
    auto s = str(j, path);
    if (s == "open") return Boundary::open;
    if (s == "periodic") return Boundary::periodic;
    fail(path, "expected \"open\" or \"periodic\"");
}

WindowSpec window_from(Obj& o) {
    auto rows = strings(o.req("rows"), o.sub("rows"));
    if (rows.empty()) fail(o.sub("rows"), "needs at least one row");
    std::vector<std::string> alphabets;
    if (const auto* a = o.opt("alphabets")) alphabets = strings(*a, o.sub("alphabets"));
    Boundary b = Boundary::open;
    if (const auto* bj = o.opt("boundary")) b = boundary(*bj, o.sub("boundary"));
    WindowSpec out{guarded(o.sub("rows"), [&] { return ArrayWindow::from_strings(rows, alphabets, b); }), {}, {}};
    auto& w = out.window;
    if (const auto* m = o.opt("markers")) {
        const auto& v = arr(*m, o.sub("markers"));
        if (v.size() != rows.size()) fail(o.sub("markers"), "needs one marker list per row");
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto p = at_index(o.sub("markers"), i);
            const auto& cols = arr(v[i], p);
            for (std::size_t c = 0; c < cols.size(); ++c)
                w.markers[i].insert(small_int(cols[c], at_index(p, c), 0, w.width() - 1));
        }
    }
    if (const auto* g = o.opt("long_gaps")) {
        const auto& v = arr(*g, o.sub("long_gaps"));
        for (std::size_t i = 0; i < v.size(); ++i) {
            Obj go(v[i], at_index(o.sub("long_gaps"), i));
            LongGap lg;
            lg.row = small_int(go.req("row"), go.sub("row"), 1, w.depth());
            lg.start = small_int(go.req("start"), go.sub("start"), 0, w.width() - 1);
            lg.end = small_int(go.req("end"), go.sub("end"), lg.start, w.width() - 1);
            lg.period = small_int(go.req("period"), go.sub("period"), 1, w.width());
            if (const auto* x = go.opt("open_left")) lg.open_left = boolean(*x, go.sub("open_left"));
            if (const auto* x = go.opt("open_right")) lg.open_right = boolean(*x, go.sub("open_right"));
            go.done();
            w.long_gaps.push_back(lg);
        }
    }
    if (const auto* s = o.opt("schedule")) {
        Obj so(*s, o.sub("schedule"));
        MarkerSchedule sched;
        const auto& n = arr(so.req("n"), so.sub("n"));
        for (std::size_t i = 0; i < n.size(); ++i) sched.n.push_back(small_int(n[i], at_index(so.sub("n"), i), 1, 1 << 20));
        const auto& m = arr(so.req("m"), so.sub("m"));
        for (std::size_t i = 0; i < m.size(); ++i) sched.m.push_back(small_int(m[i], at_index(so.sub("m"), i), 1, 1 << 20));
        so.done();
        out.schedule = sched;
    }
    if (const auto* r = o.opt("rules")) {
        auto names = strings(*r, o.sub("rules"));
        for (std::size_t i = 0; i < names.size(); ++i)
            out.rules.push_back(guarded(at_index(o.sub("rules"), i), [&] { return parse_rule(names[i]); }));
    }
    guarded(o.sub("markers"), [&] {
        w.validate();
        return 0;
    });
    return out;
}

HierarchySpec hierarchy_from(Obj& o) {
    HierarchySpec out;
    out.s = small_int(o.req("alphabet_size"), o.sub("alphabet_size"), 2, 62);
    const Alphabet base = Alphabet::of_size(out.s);
    const auto& levels = arr(o.req("levels"), o.sub("levels"));
    if (levels.empty()) fail(o.sub("levels"), "needs at least one level");
    for (std::size_t k = 0; k < levels.size(); ++k) {
        const auto lp = at_index(o.sub("levels"), k);
        const auto& rects = arr(levels[k], lp);
        std::vector<Rectangle> level;
        for (std::size_t i = 0; i < rects.size(); ++i) {
            Obj ro(rects[i], at_index(lp, i));
            Rectangle r;
            r.id = str(ro.req("id"), ro.sub("id"));
            if (k > 0) r.children = strings(ro.req("children"), ro.sub("children"));
            const json* bj = ro.opt("block");
            if (bj) {
                r.block = word(*bj, base, ro.sub("block"));
            } else if (k == 0) {
                fail(ro.sub("block"), "missing field");
            } else {
                for (std::size_t c = 0; c < r.children.size(); ++c) {
                    const Rectangle* child = nullptr;
                    for (const auto& x : out.hierarchy.levels[k - 1])
                        if (x.id == r.children[c]) child = &x;
                    if (!child) fail(at_index(ro.sub("children"), c), "no rectangle '" + r.children[c] + "' one level down");
                    r.block.insert(r.block.end(), child->block.begin(), child->block.end());
                }
            }
            ro.done();
            level.push_back(std::move(r));
        }
        out.hierarchy.levels.push_back(std::move(level));
    }
    guarded(o.sub("levels"), [&] {
        out.hierarchy.validate();
        return 0;
    });
    const auto& oracle = arr(o.req("oracle"), o.sub("oracle"));
    if (oracle.size() != levels.size()) fail(o.sub("oracle"), "needs one budget table per level");
    for (std::size_t k = 0; k < oracle.size(); ++k) {
        const auto op = at_index(o.sub("oracle"), k);
        if (!oracle[k].is_object()) fail(op, "expected an object");
        std::map<std::string, std::uint64_t> budgets;
        for (const auto& r : out.hierarchy.levels[k]) {
            if (!oracle[k].contains(r.id)) fail(op + "." + r.id, "missing budget");
            budgets[r.id] = static_cast<std::uint64_t>(integer(oracle[k].at(r.id), op + "." + r.id));
            if (oracle[k].at(r.id).get<std::int64_t>() < 1) fail(op + "." + r.id, "budget must be positive");
        }
        for (auto it = oracle[k].begin(); it != oracle[k].end(); ++it)
            if (!budgets.count(it.key())) fail(op + "." + it.key(), "unknown rectangle");
        out.oracle.budgets.push_back(std::move(budgets));
    }
    if (const auto* n = o.opt("normalize")) out.normalize = boolean(*n, o.sub("normalize"));
    if (const auto* p = o.opt("paths")) {
        const auto& v = arr(*p, o.sub("paths"));
        for (std::size_t i = 0; i < v.size(); ++i) {
            auto path = strings(v[i], at_index(o.sub("paths"), i));
            if (path.size() != levels.size()) fail(at_index(o.sub("paths"), i), "needs one rectangle per level");
            out.paths.push_back(std::move(path));
        }
    }
    return out;
}

// A negative integer or an expression with a leading minus sign is rejected.
std::string period(const json& j, const std::string& path) {
    if (j.is_number_integer()) {
        if (j.get<std::int64_t>() < 1) fail(path, "period must be positive");
        return std::to_string(j.get<std::int64_t>());
    }
    auto s = str(j, path);
    if (s.empty()) fail(path, "empty period expression");
    if (s.front() == '-') fail(path, "period must be positive");
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '*' || c == '+' || c == '_'))
            fail(path, "period expressions use names, digits, '*' and '+'");
    return s;
}

Threshold threshold(const json& j, const std::string& path) {
    if (!j.is_object()) return Threshold::constant(entropy(j, path));
    Obj o(j, path);
    Threshold t;
    t.lo = entropy(o.req("lo"), o.sub("lo"));
    t.hi = entropy(o.req("hi"), o.sub("hi"));
    if (const auto* tau = o.opt("tau")) {
        Obj to(*tau, o.sub("tau"));
        if (const auto* c = to.opt("const")) t.c = integer(*c, to.sub("const"));
        if (const auto* p = to.opt("params")) t.params = strings(*p, to.sub("params"));
        to.done();
    }
    o.done();
    return t;
}

SpecTable spec_table(const json& j, const std::string& path, const MeasureDiagram& d) {
    if (!j.is_object()) fail(path, "expected an object keyed by node id");
    SpecTable out;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto p = path + "." + it.key();
        int idx = -1;
        try {
            idx = d.node_index(it.key());
        } catch (const ArgumentError&) {
            fail(p, "unknown node");
        }
        auto t = threshold(it.value(), p);
        const auto& params = d.nodes()[static_cast<std::size_t>(idx)].params;
        for (const auto& q : t.params)
            if (std::find(params.begin(), params.end(), q) == params.end()) fail(p + ".tau.params", "node has no parameter '" + q + "'");
        out[it.key()] = std::move(t);
    }
    for (const auto& n : d.nodes())
        if (!out.count(n.id)) fail(path + "." + n.id, "missing entry");
    return out;
}

DiagramSpec diagram_from(Obj& o) {
    std::map<std::string, std::int64_t> mins;
    if (const auto* p = o.opt("params")) {
        if (!p->is_object()) fail(o.sub("params"), "expected an object of parameter minima");
        for (auto it = p->begin(); it != p->end(); ++it) mins[it.key()] = integer(it.value(), o.sub("params") + "." + it.key());
    }
    std::vector<DiagramNode> nodes;
    const auto& nv = arr(o.req("nodes"), o.sub("nodes"));
    for (std::size_t i = 0; i < nv.size(); ++i) {
        Obj no(nv[i], at_index(o.sub("nodes"), i));
        DiagramNode n;
        n.id = str(no.req("id"), no.sub("id"));
        n.level = small_int(no.req("level"), no.sub("level"), 0, 2);
        auto kind = str(no.req("kind"), no.sub("kind"));
        if (kind == "periodic") n.kind = NodeKind::periodic;
        else if (kind == "aperiodic") n.kind = NodeKind::aperiodic;
        else fail(no.sub("kind"), "expected \"periodic\" or \"aperiodic\"");
        if (const auto* per = no.opt("period")) n.period = period(*per, no.sub("period"));
        else if (n.kind == NodeKind::periodic) fail(no.sub("period"), "periodic nodes need a period");
        if (const auto* ps = no.opt("params")) n.params = strings(*ps, no.sub("params"));
        no.done();
        nodes.push_back(std::move(n));
    }
    std::vector<DiagramFamily> families;
    if (const auto* fv = o.opt("families")) {
        const auto& v = arr(*fv, o.sub("families"));
        for (std::size_t i = 0; i < v.size(); ++i) {
            Obj fo(v[i], at_index(o.sub("families"), i));
            DiagramFamily f;
            f.member = str(fo.req("member"), fo.sub("member"));
            f.param = str(fo.req("param"), fo.sub("param"));
            f.limit = str(fo.req("limit"), fo.sub("limit"));
            if (const auto* fr = fo.opt("free")) f.free = str(*fr, fo.sub("free"));
            fo.done();
            families.push_back(std::move(f));
        }
    }
    std::optional<Entropy> p_sup;
    if (const auto* ps = o.opt("p_sup")) p_sup = entropy(*ps, o.sub("p_sup"));
    auto d = guarded(o.sub("nodes"), [&] { return std::make_shared<const MeasureDiagram>(mins, nodes, families, p_sup); });

    DiagramSpec out{DiagramProblem{d, {}, {}, {}}, std::nullopt};
    Obj fo(o.req("functions"), o.sub("functions"));
    out.problem.h = spec_table(fo.req("h"), fo.sub("h"), *d);
    if (const auto* e = fo.opt("E")) out.e = spec_table(*e, fo.sub("E"), *d);
    fo.done();
    Obj so(o.req("sequences"), o.sub("sequences"));
    out.problem.tails = spec_table(so.req("tails"), so.sub("tails"), *d);
    out.problem.per = spec_table(so.req("per"), so.sub("per"), *d);
    so.done();
    guarded(so.sub("tails"), [&] {
        out.problem.tails_seq().require_tail();
        return 0;
    });
    guarded(so.sub("per"), [&] {
        out.problem.per_seq().require_tail();
        return 0;
    });
    return out;
}

ScenarioSpec scenario_from(Obj& o) {
    ScenarioSpec out;
    out.name = str(o.req("name"), o.sub("name"));
    const auto& names = scenario_names();
    if (std::find(names.begin(), names.end(), out.name) == names.end()) fail(o.sub("name"), "unknown scenario");
    if (const auto* h = o.opt("h0")) out.h0 = rational(*h, o.sub("h0"));
    return out;
}

HallSpec hall_from(Obj& o) {
    HallSpec out;
    out.n = small_int(o.req("n"), o.sub("n"), 1, 64);
    if (const auto* a = o.opt("alphabet")) out.alphabet = alphabet(*a, o.sub("alphabet"));
    const auto& v = arr(o.req("strips"), o.sub("strips"));
    std::set<std::string> seen;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Obj so(v[i], at_index(o.sub("strips"), i));
        auto id = str(so.req("id"), so.sub("id"));
        if (!seen.insert(id).second) fail(so.sub("id"), "duplicate strip id");
        auto ws = words(so.req("words"), out.alphabet, so.sub("words"));
        for (std::size_t j = 0; j < ws.size(); ++j)
            if (static_cast<int>(ws[j].size()) != out.n) fail(at_index(so.sub("words"), j), "word length differs from n");
        so.done();
        out.ids.push_back(std::move(id));
        out.words.push_back(std::move(ws));
    }
    return out;
}

// "identity", {"row": r} or {"radius": r, "output": alphabet, "table": [{"window": w, "symbol": x}]}.
BlockMap block_map(const json& j, const std::string& path, const SftSpec* ambient, const Alphabet& in, Alphabet* out_alphabet) {
    if (j.is_string()) {
        if (j.get<std::string>() != "identity") fail(path, "expected \"identity\" or an object");
        if (out_alphabet) *out_alphabet = in;
        return BlockMap::identity(in.size());
    }
    Obj o(j, path);
    if (const auto* r = o.opt("row")) {
        if (!ambient) fail(o.sub("row"), "row readers only apply to the ambient system");
        if (ambient->rows().empty()) fail(o.sub("row"), "the system has no row structure");
        int row = small_int(*r, o.sub("row"), 0, static_cast<int>(ambient->rows().size()) - 1);
        o.done();
        if (out_alphabet) *out_alphabet = ambient->rows()[static_cast<std::size_t>(row)];
        return BlockMap::row_reader(*ambient, row);
    }
    BlockMap m;
    m.radius = small_int(o.req("radius"), o.sub("radius"), 0, 8);
    Alphabet outs = out_alphabet ? alphabet(o.req("output"), o.sub("output")) : *ambient->alphabet_ptr();
    m.output_size = outs.size();
    const auto& v = arr(o.req("table"), o.sub("table"));
    for (std::size_t i = 0; i < v.size(); ++i) {
        Obj eo(v[i], at_index(o.sub("table"), i));
        auto w = word(eo.req("window"), in, eo.sub("window"));
        if (static_cast<int>(w.size()) != 2 * m.radius + 1) fail(eo.sub("window"), "window length must be 2*radius+1");
        auto sym = outs.index(str(eo.req("symbol"), eo.sub("symbol")));
        if (!sym) fail(eo.sub("symbol"), "symbol outside the output alphabet");
        eo.done();
        if (!m.table.emplace(w, *sym).second) fail(eo.sub("window"), "duplicate window");
    }
    o.done();
    if (out_alphabet) *out_alphabet = outs;
    return m;
}

ExtensionSpec extension_from(Obj& o) {
    Obj so(o.req("sft"), o.sub("sft"));
    SftSpec ambient = sft_from(so);
    so.done();
    Alphabet names = ambient.alphabet();
    BlockMap selector = block_map(o.req("selector"), o.sub("selector"), &ambient, ambient.alphabet(), &names);
    std::optional<BlockMap> code;
    if (const auto* c = o.opt("code")) code = block_map(*c, o.sub("code"), &ambient, names, nullptr);
    int observe = 0;
    if (const auto* ob = o.opt("observe")) observe = small_int(*ob, o.sub("observe"), 0, 8);
    return ExtensionSpec{Extension{ambient, selector, code}, observe};
}

Mixture mixture(const json& j, const std::string& path, const std::shared_ptr<const Alphabet>& a) {
    Mixture m;
    const auto& v = arr(j, path);
    if (v.empty()) fail(path, "needs at least one component");
    Rational total{0};
    for (std::size_t i = 0; i < v.size(); ++i) {
        Obj co(v[i], at_index(path, i));
        auto w = rational(co.req("weight"), co.sub("weight"));
        if (w <= Rational(0)) fail(co.sub("weight"), "weight must be positive");
        auto orbit = guarded(co.sub("orbit"), [&] { return PeriodicOrbit(a, word(co.req("orbit"), *a, co.sub("orbit"))); });
        co.done();
        total += w;
        m.parts.emplace_back(w, orbit);
    }
    if (total != Rational(1)) fail(path, "weights sum to " + to_string(total) + ", not 1");
    return m;
}

DbarSpec dbar_from(Obj& o) {
    auto a = std::make_shared<const Alphabet>(alphabet(o.req("alphabet"), o.sub("alphabet")));
    return DbarSpec{mixture(o.req("mu"), o.sub("mu"), a), mixture(o.req("nu"), o.sub("nu"), a)};
}

}  // namespace

std::string kind_name(SpecKind k) {
    switch (k) {
        case SpecKind::sft: return "sft";
        case SpecKind::window: return "window";
        case SpecKind::hierarchy: return "hierarchy";
        case SpecKind::diagram: return "diagram";
        case SpecKind::scenario: return "scenario";
        case SpecKind::hall: return "hall";
        case SpecKind::extension: return "extension";
        case SpecKind::dbar: return "dbar";
    }
    return "?";
}

std::string fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

SpecFile parse_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw SchemaError("", std::string("malformed JSON: ") + e.what());
    }
    Obj o(j, "");
    const auto kind = str(o.req("kind"), "kind");
    const auto version = integer(o.req("version"), "version");
    if (version != kSpecVersion)
        fail("version", "unsupported version " + std::to_string(version) + " (this build reads version " +
                            std::to_string(kSpecVersion) + ")");
    const auto digest = fnv1a64(text);
    auto make = [&](SpecKind k, SpecPayload p) {
        o.done();
        return SpecFile{k, static_cast<int>(version), std::move(p), digest};
    };
    if (kind == "sft") return make(SpecKind::sft, sft_from(o));
    if (kind == "window") return make(SpecKind::window, window_from(o));
    if (kind == "hierarchy") return make(SpecKind::hierarchy, hierarchy_from(o));
    if (kind == "diagram") return make(SpecKind::diagram, diagram_from(o));
    if (kind == "scenario") return make(SpecKind::scenario, scenario_from(o));
    if (kind == "hall") return make(SpecKind::hall, hall_from(o));
    if (kind == "extension") return make(SpecKind::extension, extension_from(o));
    if (kind == "dbar") return make(SpecKind::dbar, dbar_from(o));
    fail("kind", "unknown kind '" + kind + "'");
}

SpecFile load_spec(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ArgumentError("cannot read spec file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_spec(ss.str());
}

}  // namespace symext
