#include "symext/diagram/diagram.hpp"

#include "symext/errors.hpp"

#include <algorithm>
#include <set>

namespace symext {

namespace {

int position(const std::vector<std::string>& v, const std::string& s) {
    auto it = std::find(v.begin(), v.end(), s);
    return it == v.end() ? -1 : static_cast<int>(it - v.begin());
}

}  // namespace

MeasureDiagram::MeasureDiagram(std::map<std::string, std::int64_t> param_mins, std::vector<DiagramNode> nodes,
                               std::vector<DiagramFamily> families, std::optional<Entropy> p_sup)
    : mins_(std::move(param_mins)), nodes_(std::move(nodes)), p_sup_(std::move(p_sup)) {
    for (const auto& [name, m] : mins_)
        if (m < 0) throw ArgumentError("parameter '" + name + "' has a negative minimum");
    if (nodes_.empty()) throw ArgumentError("diagram has no nodes");
    std::set<std::string> ids;
    for (const auto& n : nodes_) {
        if (!ids.insert(n.id).second) throw ArgumentError("duplicate node id '" + n.id + "'");
        if (n.level < 0 || n.level > 2) throw ArgumentError("node '" + n.id + "': accumulation depth above 2 is not supported");
        const std::size_t cap = n.level == 0 ? 2 : n.level == 1 ? 1 : 0;
        if (n.params.size() > cap)
            throw ArgumentError("node '" + n.id + "' at level " + std::to_string(n.level) + " has too many parameters");
        std::set<std::string> ps(n.params.begin(), n.params.end());
        if (ps.size() != n.params.size()) throw ArgumentError("node '" + n.id + "' repeats a parameter");
        for (const auto& p : n.params)
            if (!mins_.count(p)) throw ArgumentError("node '" + n.id + "' uses undeclared parameter '" + p + "'");
    }
    if (p_sup_ && p_sup_->is_infinite()) throw ArgumentError("P_sup must be finite");

    auto resolve = [&](DiagramFamily f) {
        const int m = node_index(f.member), l = node_index(f.limit);
        const auto& mp = nodes_[static_cast<std::size_t>(m)].params;
        const auto& lp = nodes_[static_cast<std::size_t>(l)].params;
        const std::string tag = "family " + f.member + " -> " + f.limit + " (" + f.param + ")";
        if (nodes_[static_cast<std::size_t>(m)].level >= nodes_[static_cast<std::size_t>(l)].level)
            throw ArgumentError(tag + ": member must sit below its limit");
        Link link{m, l, position(mp, f.param), -1, {}};
        if (link.t < 0) throw ArgumentError(tag + ": member has no such parameter");
        if (position(lp, f.param) >= 0) throw ArgumentError(tag + ": growing parameter survives in the limit");
        std::vector<std::string> rest;
        for (std::size_t i = 0; i < mp.size(); ++i) {
            const int pl = position(lp, mp[i]);
            link.from_limit.push_back(pl);
            if (pl < 0 && static_cast<int>(i) != link.t) rest.push_back(mp[i]);
        }
        for (const auto& p : lp)
            if (position(mp, p) < 0) throw ArgumentError(tag + ": limit parameter '" + p + "' missing in the member");
        if (rest.size() > 1) throw ArgumentError(tag + ": more than one free parameter");
        if (!rest.empty()) link.free = position(mp, rest[0]);
        if (f.free && (rest.empty() || *f.free != rest[0])) throw ArgumentError(tag + ": declared free parameter does not match");
        if (!rest.empty()) f.free = rest[0];
        return std::make_pair(f, link);
    };

    std::vector<DiagramFamily> work = std::move(families);
    for (bool grew = true; grew;) {
        grew = false;
        const std::size_t n = work.size();
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (work[a].limit != work[b].member) continue;
                DiagramFamily c{work[a].member, work[b].param, work[b].limit, std::nullopt};
                bool known = false;
                for (const auto& f : work)
                    if (f.member == c.member && f.param == c.param) {
                        if (f.limit != c.limit)
                            throw ArgumentError("diagram not closed: " + c.member + " (" + c.param + ") converges to both " +
                                                f.limit + " and " + c.limit);
                        known = true;
                    }
                if (!known) {
                    work.push_back(c);
                    grew = true;
                }
            }
    }
    for (auto& f : work) {
        auto [ff, link] = resolve(f);
        bool dup = false;
        for (const auto& g : families_)
            if (g.member == ff.member && g.param == ff.param) {
                if (g.limit != ff.limit)
                    throw ArgumentError("diagram not closed: " + ff.member + " (" + ff.param + ") has two limits");
                dup = true;
            }
        if (dup) continue;
        families_.push_back(ff);
        links_.push_back(link);
    }

    into_.assign(nodes_.size(), {});
    for (std::size_t i = 0; i < links_.size(); ++i) into_[static_cast<std::size_t>(links_[i].limit)].push_back(static_cast<int>(i));
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
        const auto& node = nodes_[v];
        for (const auto& p : node.params) {
            bool found = false;
            for (const auto& f : families_) found = found || (f.member == node.id && f.param == p);
            if (!found) throw ArgumentError("diagram not closed: node '" + node.id + "' has no limit as '" + p + "' grows");
        }
        int expect = 0;
        for (int li : into_[v]) expect = std::max(expect, nodes_[static_cast<std::size_t>(links_[static_cast<std::size_t>(li)].member)].level + 1);
        if (expect != node.level)
            throw ArgumentError("node '" + node.id + "' declared at level " + std::to_string(node.level) + ", its families give " +
                                std::to_string(expect));
    }
}

std::int64_t MeasureDiagram::param_min(const std::string& name) const {
    auto it = mins_.find(name);
    if (it == mins_.end()) throw ArgumentError("unknown parameter '" + name + "'");
    return it->second;
}

std::int64_t MeasureDiagram::max_param_min() const {
    std::int64_t m = 0;
    for (const auto& [n, v] : mins_) m = std::max(m, v);
    return m;
}

int MeasureDiagram::node_index(const std::string& id) const {
    for (std::size_t i = 0; i < nodes_.size(); ++i)
        if (nodes_[i].id == id) return static_cast<int>(i);
    throw ArgumentError("unknown node '" + id + "'");
}

int MeasureDiagram::depth() const {
    int d = 0;
    for (const auto& n : nodes_) d = std::max(d, n.level);
    return d;
}

std::vector<Instance> MeasureDiagram::samples(int node, std::int64_t scale) const {
    const auto& ps = nodes_[static_cast<std::size_t>(node)].params;
    std::vector<Instance> out;
    Instance x{node, std::vector<std::int64_t>(ps.size())};
    std::vector<std::int64_t> lo, hi;
    for (const auto& p : ps) {
        lo.push_back(param_min(p));
        hi.push_back(std::max(param_min(p), scale) + 2);
    }
    x.vals = lo;
    while (true) {
        out.push_back(x);
        std::size_t i = 0;
        for (; i < ps.size(); ++i) {
            if (++x.vals[i] <= hi[i]) break;
            x.vals[i] = lo[i];
        }
        if (i == ps.size()) break;
    }
    return out;
}

std::vector<Instance> MeasureDiagram::samples(std::int64_t scale) const {
    std::vector<Instance> out;
    for (int v = 0; v < static_cast<int>(nodes_.size()); ++v) {
        auto s = samples(v, scale);
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

std::string MeasureDiagram::label(const Instance& x) const {
    const auto& n = nodes_[static_cast<std::size_t>(x.node)];
    if (n.params.empty()) return n.id;
    std::string s = n.id + "(";
    for (std::size_t i = 0; i < n.params.size(); ++i) s += (i ? "," : "") + n.params[i] + "=" + std::to_string(x.vals[i]);
    return s + ")";
}

}  // namespace symext
