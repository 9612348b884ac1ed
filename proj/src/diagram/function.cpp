#include "symext/diagram/function.hpp"

#include "symext/errors.hpp"

#include <algorithm>

namespace symext {

namespace detail {

enum class Op { constant, sequence, function, sum, diff, max, envelope, lim_k, shift };

struct Resolved {
    Entropy lo, hi;
    std::int64_t c = 0;
    std::vector<int> positions;
};

struct FnNode {
    Op op = Op::constant;
    std::shared_ptr<const MeasureDiagram> d;
    Entropy value{0};
    std::vector<Resolved> specs;  // per node index
    std::shared_ptr<const FnNode> a, b;
    std::int64_t scale = 0;
    bool kdep = false;
    mutable std::map<std::vector<std::int64_t>, Entropy> cache;

    Entropy eval(std::int64_t k, const Instance& x) const;
    Entropy compute(std::int64_t k, const Instance& x) const;
};

Entropy FnNode::eval(std::int64_t k, const Instance& x) const {
    if (op == Op::constant) return value;
    std::vector<std::int64_t> key;
    key.reserve(x.vals.size() + 2);
    key.push_back(kdep ? k : 0);
    key.push_back(x.node);
    key.insert(key.end(), x.vals.begin(), x.vals.end());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    Entropy v = compute(k, x);
    cache.emplace(std::move(key), v);
    return v;
}

Entropy FnNode::compute(std::int64_t k, const Instance& x) const {
    switch (op) {
        case Op::constant:
            return value;
        case Op::sequence:
        case Op::function: {
            const Resolved& r = specs[static_cast<std::size_t>(x.node)];
            std::int64_t sum = 0;
            for (int p : r.positions) sum += x.vals[static_cast<std::size_t>(p)];
            const bool before = op == Op::sequence ? k < r.c + sum : sum < r.c;
            return before ? r.lo : r.hi;
        }
        case Op::sum:
            return a->eval(k, x) + b->eval(k, x);
        case Op::diff:
            return a->eval(k, x) - b->eval(k, x);
        case Op::max:
            return max(a->eval(k, x), b->eval(k, x));
        case Op::shift:
            return a->eval(k + 1, x);
        case Op::lim_k: {
            std::int64_t kk = a->scale + 1;
            for (auto v : x.vals) kk += v;
            return a->eval(kk, x);
        }
        case Op::envelope: {
            Entropy r = a->eval(k, x);
            const std::int64_t kk = a->kdep ? k : 0;
            const std::int64_t reach = kk + a->scale + 1;
            for (int li : d->links_into(x.node)) {
                const auto& link = d->links()[static_cast<std::size_t>(li)];
                const auto& mp = d->nodes()[static_cast<std::size_t>(link.member)].params;
                Instance y{link.member, std::vector<std::int64_t>(mp.size(), 0)};
                for (std::size_t i = 0; i < mp.size(); ++i)
                    if (link.from_limit[i] >= 0) y.vals[i] = x.vals[static_cast<std::size_t>(link.from_limit[i])];
                y.vals[static_cast<std::size_t>(link.t)] = std::max(reach, d->param_min(mp[static_cast<std::size_t>(link.t)]));
                if (link.free < 0) {
                    r = max(r, a->eval(k, y));
                    continue;
                }
                const std::int64_t qmin = d->param_min(mp[static_cast<std::size_t>(link.free)]);
                for (std::int64_t q = qmin; q <= std::max(qmin, reach); ++q) {
                    y.vals[static_cast<std::size_t>(link.free)] = q;
                    r = max(r, a->eval(k, y));
                    if (r.is_infinite()) break;
                }
            }
            return r;
        }
    }
    throw InternalError("unhandled expression");
}

}  // namespace detail

using detail::FnNode;
using detail::Op;

namespace {

std::shared_ptr<FnNode> make(Op op, std::shared_ptr<const MeasureDiagram> d) {
    auto n = std::make_shared<FnNode>();
    n->op = op;
    n->d = std::move(d);
    return n;
}

std::shared_ptr<FnNode> from_specs(Op op, std::shared_ptr<const MeasureDiagram> d, const SpecTable& specs) {
    if (!d) throw ArgumentError("expression needs a diagram");
    auto n = make(op, d);
    n->kdep = op == Op::sequence;
    for (const auto& node : d->nodes()) {
        auto it = specs.find(node.id);
        if (it == specs.end()) throw ArgumentError("no value given for node '" + node.id + "'");
        const Threshold& t = it->second;
        detail::Resolved r{t.lo, t.hi, t.c, {}};
        for (const auto& p : t.params) {
            auto pos = std::find(node.params.begin(), node.params.end(), p);
            if (pos == node.params.end()) throw ArgumentError("node '" + node.id + "' has no parameter '" + p + "'");
            r.positions.push_back(static_cast<int>(pos - node.params.begin()));
        }
        n->scale = std::max(n->scale, t.c < 0 ? -t.c : t.c);
        n->specs.push_back(std::move(r));
    }
    for (const auto& [id, spec] : specs) d->node_index(id);
    return n;
}

std::shared_ptr<FnNode> binary(Op op, const std::shared_ptr<const FnNode>& a, const std::shared_ptr<const FnNode>& b) {
    if (a->d != b->d) throw ArgumentError("expressions live on different diagrams");
    auto n = make(op, a->d);
    n->a = a;
    n->b = b;
    n->scale = std::max(a->scale, b->scale);
    n->kdep = a->kdep || b->kdep;
    return n;
}

}  // namespace

Fn Fn::constant(std::shared_ptr<const MeasureDiagram> d, Entropy v) {
    auto n = make(Op::constant, std::move(d));
    n->value = v;
    return Fn(n);
}

Fn Fn::sequence(std::shared_ptr<const MeasureDiagram> d, const SpecTable& specs) { return Fn(from_specs(Op::sequence, std::move(d), specs)); }
Fn Fn::function(std::shared_ptr<const MeasureDiagram> d, const SpecTable& specs) { return Fn(from_specs(Op::function, std::move(d), specs)); }

Entropy Fn::at(std::int64_t k, const Instance& x) const { return node_->eval(k, x); }
std::int64_t Fn::scale() const { return node_->scale; }
bool Fn::k_dependent() const { return node_->kdep; }
const MeasureDiagram& Fn::diagram() const { return *node_->d; }
std::shared_ptr<const MeasureDiagram> Fn::diagram_ptr() const { return node_->d; }

Fn Fn::envelope() const {
    auto n = make(Op::envelope, node_->d);
    n->a = node_;
    n->kdep = node_->kdep;
    n->scale = node_->scale + node_->d->max_param_min() + 1;
    return Fn(n);
}

Fn Fn::lim_k() const {
    auto n = make(Op::lim_k, node_->d);
    n->a = node_;
    n->scale = node_->scale;
    return Fn(n);
}

Fn Fn::shifted() const {
    auto n = make(Op::shift, node_->d);
    n->a = node_;
    n->kdep = node_->kdep;
    n->scale = node_->scale + 1;
    return Fn(n);
}

Fn operator+(const Fn& a, const Fn& b) { return Fn(binary(Op::sum, a.node_, b.node_)); }
Fn operator-(const Fn& a, const Fn& b) { return Fn(binary(Op::diff, a.node_, b.node_)); }
Fn max(const Fn& a, const Fn& b) { return Fn(binary(Op::max, a.node_, b.node_)); }

}  // namespace symext
