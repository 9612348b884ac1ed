#include "symext/diagram/analysis.hpp"

#include "symext/errors.hpp"

#include <algorithm>

namespace symext {

namespace {

std::int64_t joint_scale(std::initializer_list<const Fn*> fs) {
    std::int64_t s = 0;
    for (const Fn* f : fs) s = std::max(s, f->scale());
    return s;
}

Fn zero_like(const Fn& f) { return Fn::constant(f.diagram_ptr(), Entropy(0)); }

void require_nonnegative(const Fn& u, const char* what) {
    for (const auto& x : u.diagram().samples(u.scale()))
        if (u.at(x) < Entropy(0)) throw ArgumentError(std::string(what) + " is negative at " + u.diagram().label(x));
}

}  // namespace

SeqOnDiagram SeqOnDiagram::make(std::shared_ptr<const MeasureDiagram> d, SpecTable specs) {
    Fn f = Fn::sequence(std::move(d), specs);
    return SeqOnDiagram{std::move(specs), f};
}

void SeqOnDiagram::require_tail() const {
    for (const auto& [id, t] : specs) {
        if (t.hi != Entropy(0)) throw ArgumentError("sequence at '" + id + "' does not tend to zero");
        if (t.lo < t.hi) throw ArgumentError("sequence at '" + id + "' is not nonincreasing in k");
        if (t.lo.is_infinite()) throw ArgumentError("sequence at '" + id + "' must be finite");
    }
}

Fn usc_envelope(const Fn& f) { return f.envelope(); }

Fn u_one(const SeqOnDiagram& theta) {
    theta.require_tail();
    return theta.fn.envelope().lim_k();
}

std::optional<Instance> first_difference(const Fn& a, const Fn& b, std::int64_t k) {
    for (const auto& x : a.diagram().samples(joint_scale({&a, &b})))
        if (a.at(k, x) != b.at(k, x)) return x;
    return std::nullopt;
}

RepairVerdict is_repair(const Fn& u, const SeqOnDiagram& theta) {
    theta.require_tail();
    require_nonnegative(u, "repair candidate");
    const Fn limit = (u + theta.fn).envelope().lim_k();
    RepairVerdict v;
    if (auto x = first_difference(limit, u)) {
        v.pass = false;
        v.witness = *x;
        v.witness_label = u.diagram().label(*x);
        const Entropy l = limit.at(*x), r = u.at(*x);
        v.residual = l.is_infinite() ? Entropy::infinity() : l - r;
    }
    return v;
}

RepairResult minimal_repair(const SeqOnDiagram& theta, const Fn& floor) {
    theta.require_tail();
    require_nonnegative(floor, "floor");
    Fn u = max(floor, u_one(theta));
    const int cap = floor.diagram().depth() + 1;
    int changes = 0;
    for (int step = 0; step < cap; ++step) {
        Fn next = max(floor, (u + theta.fn).envelope().lim_k());
        if (!first_difference(next, u)) {
            auto check = is_repair(u, theta);
            if (!check.pass) throw InternalError("fixpoint fails the repair check at " + check.witness_label);
            if (first_difference(max(u, floor), u)) throw InternalError("fixpoint dips below the floor");
            return RepairResult{u, changes};
        }
        u = next;
        ++changes;
    }
    throw ConstructionError("no repair fixpoint within " + std::to_string(cap) + " iterations; diagram depth mismatch");
}

SuperenvelopeVerdict is_superenvelope(const Fn& e, const Fn& h, const SeqOnDiagram& tails) {
    tails.require_tail();
    const MeasureDiagram& d = e.diagram();
    SuperenvelopeVerdict v;
    for (const auto& x : d.samples(joint_scale({&e, &h}))) {
        if (h.at(x).is_infinite()) throw ArgumentError("entropy function must be finite");
        if (e.at(x) < h.at(x)) {
            v.pass = v.direct = false;
            v.witness = "E < h at " + d.label(x);
            return v;
        }
    }
    const Fn g = e - h;
    const auto dual = is_repair(g, tails);
    v.pass = dual.pass;
    if (!dual.pass) v.witness = "repair fails at " + dual.witness_label;

    const Fn f = g + tails.fn;
    const Fn fe = f.envelope();
    const Fn step = tails.fn - tails.fn.shifted();
    const Fn se = step.envelope();
    const std::int64_t s = std::max(fe.scale(), se.scale());
    v.k_checked = 2 * s + 4;
    for (std::int64_t k = 0; k <= v.k_checked; ++k) {
        for (const auto& x : d.samples(k + s + 1)) {
            if (v.direct && fe.at(k, x) != f.at(k, x)) {
                v.direct = false;
                if (!v.witness) v.witness = "E - h_k not usc at " + d.label(x) + ", k = " + std::to_string(k);
            }
            if (v.precondition && se.at(k, x) != step.at(k, x)) v.precondition = false;
        }
    }
    return v;
}

std::vector<NodeRange> tabulate(const Fn& f, std::int64_t k) {
    const MeasureDiagram& d = f.diagram();
    std::vector<NodeRange> out;
    for (int n = 0; n < static_cast<int>(d.nodes().size()); ++n) {
        NodeRange r{d.nodes()[static_cast<std::size_t>(n)].id, Entropy::infinity(), Entropy(0)};
        bool first = true;
        for (const auto& x : d.samples(n, f.scale())) {
            const Entropy v = f.at(k, x);
            r.lo = first ? v : min(r.lo, v);
            r.hi = first ? v : max(r.hi, v);
            first = false;
        }
        out.push_back(r);
    }
    return out;
}

Entropy supremum(const Fn& f, std::int64_t k) {
    Entropy s{0};
    bool first = true;
    for (const auto& x : f.diagram().samples(f.scale())) {
        s = first ? f.at(k, x) : max(s, f.at(k, x));
        first = false;
    }
    return s;
}

bool DiagramReport::bounds_hold() const {
    return std::all_of(bounds.begin(), bounds.end(), [](const BoundVerdict& b) { return b.pass; });
}

DiagramReport analyze_diagram(const Fn& h, const SeqOnDiagram& tails, const SeqOnDiagram& per) {
    tails.require_tail();
    per.require_tail();
    const MeasureDiagram& d = h.diagram();
    for (const auto& x : d.samples(joint_scale({&h, &tails.fn}))) {
        if (h.at(x).is_infinite()) throw ArgumentError("entropy function must be finite at " + d.label(x));
        if (h.at(x) < tails.fn.at(0, x)) throw ArgumentError("tail exceeds entropy at " + d.label(x));
    }

    DiagramReport r;
    r.h = h;
    const auto sex = minimal_repair(tails, zero_like(h));
    r.u1 = u_one(per);
    const auto emb = minimal_repair(tails, r.u1);
    r.h_sex = h + sex.u;
    r.h_emb = h + emb.u;
    r.sex_iterations = sex.iterations;
    r.emb_iterations = emb.iterations;
    r.repair_label = emb.label;
    r.p_star = supremum(r.u1);
    r.sup_h_sex = supremum(r.h_sex);
    r.sup_h_emb = supremum(r.h_emb);
    const Fn h_u1 = h + r.u1;
    r.sup_h_u1 = supremum(h_u1);

    auto pointwise = [&](const std::string& name, const Fn& small, const Fn& big) {
        BoundVerdict b{name, true, std::nullopt};
        for (const auto& x : d.samples(joint_scale({&small, &big})))
            if (big.at(x) < small.at(x)) {
                b.pass = false;
                b.witness = d.label(x);
                break;
            }
        r.bounds.push_back(b);
    };
    pointwise("h_sex <= h_emb", r.h_sex, r.h_emb);
    pointwise("h + u1 <= h_emb", h_u1, r.h_emb);
    pointwise("h_emb <= h_sex + u1", r.h_emb, r.h_sex + r.u1);
    r.bounds.push_back({"max(h_sex, P*) <= h_emb (sup)", max(r.sup_h_sex, r.p_star) <= r.sup_h_emb, std::nullopt});
    r.bounds.push_back({"h_emb <= h_sex + P* (sup)", r.sup_h_emb <= r.sup_h_sex + r.p_star, std::nullopt});

    r.p_sup = d.p_sup();
    Entropy p = r.p_sup.value_or(Entropy(0));
    if (!r.p_sup) r.warnings.push_back("P_sup not supplied; taken as 0 in the cardinality");
    if (r.sup_h_emb.is_infinite()) {
        r.warnings.push_back("h_emb is unbounded; no finite generator cardinality");
    } else {
        r.cardinality = floor_pow2(max(p, r.sup_h_emb).value()) + 1;
    }
    return r;
}

Entropy harmonic(const std::vector<std::pair<Rational, Entropy>>& parts) {
    Rational total{0}, acc{0};
    for (const auto& [w, v] : parts) {
        if (w < Rational(0)) throw ArgumentError("mixture weights must be nonnegative");
        total = total + w;
        if (w == Rational(0)) continue;
        if (v.is_infinite()) return Entropy::infinity();
        acc = acc + w * v.value();
    }
    if (total != Rational(1)) throw ArgumentError("mixture weights must sum to 1");
    return Entropy(acc);
}

}  // namespace symext
