#pragma once

#include "symext/diagram/function.hpp"

#include <optional>
#include <string>
#include <vector>

namespace symext {

// A k-indexed threshold sequence together with its specs (kept for monotonicity checks).
struct SeqOnDiagram {
    SpecTable specs;
    Fn fn;

    static SeqOnDiagram make(std::shared_ptr<const MeasureDiagram> d, SpecTable specs);
    // Nonincreasing in k with pointwise limit zero.
    void require_tail() const;
};

Fn usc_envelope(const Fn& f);
Fn u_one(const SeqOnDiagram& theta);

struct RepairVerdict {
    bool pass = true;
    std::optional<Instance> witness;
    std::string witness_label;
    Entropy residual{0};  // lim envelope minus u at the witness
};

RepairVerdict is_repair(const Fn& u, const SeqOnDiagram& theta);

struct RepairResult {
    Fn u;
    int iterations = 0;  // updates until the fixpoint showed up
    std::string label = "minimal under iteration scheme";
};

RepairResult minimal_repair(const SeqOnDiagram& theta, const Fn& floor);

struct SuperenvelopeVerdict {
    bool pass = true;         // E - h repairs the tails
    bool direct = true;       // E - h_k nonnegative and usc for every checked k
    bool precondition = true; // h_{k+1} - h_k usc on the checked range
    std::int64_t k_checked = 0;
    std::optional<std::string> witness;
};

SuperenvelopeVerdict is_superenvelope(const Fn& e, const Fn& h, const SeqOnDiagram& tails);

// Smallest and largest values of f over the sampled instances of one node (k fixed).
struct NodeRange {
    std::string node;
    Entropy lo{0}, hi{0};
};

std::vector<NodeRange> tabulate(const Fn& f, std::int64_t k = 0);
Entropy supremum(const Fn& f, std::int64_t k = 0);
// First sampled instance where a and b differ, scanning k up to `k_max` for sequences.
std::optional<Instance> first_difference(const Fn& a, const Fn& b, std::int64_t k = 0);

struct BoundVerdict {
    std::string name;
    bool pass = true;
    std::optional<std::string> witness;
};

struct DiagramReport {
    Fn h, h_sex, u1, h_emb;
    int sex_iterations = 0, emb_iterations = 0;
    std::string repair_label;
    Entropy p_star{0};
    Entropy sup_h_sex{0}, sup_h_emb{0}, sup_h_u1{0};
    std::optional<Entropy> p_sup;
    std::optional<std::uint64_t> cardinality;  // empty when sup h_emb is infinite
    std::vector<BoundVerdict> bounds;
    std::vector<std::string> warnings;

    bool bounds_hold() const;
};

DiagramReport analyze_diagram(const Fn& h, const SeqOnDiagram& tails, const SeqOnDiagram& per);

// Harmonic value of a mixture given per-component values.
Entropy harmonic(const std::vector<std::pair<Rational, Entropy>>& parts);

}  // namespace symext
