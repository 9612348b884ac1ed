#pragma once

#include "symext/entropy_value.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace symext {

enum class NodeKind { periodic, aperiodic };

// A node stands for the measures indexed by its integer parameters; level counts accumulation.
struct DiagramNode {
    std::string id;
    int level = 0;
    NodeKind kind = NodeKind::aperiodic;
    std::string period;  // informative expression for periodic nodes
    std::vector<std::string> params;
};

// Members converge to the limit node as `param` grows; `free` ranges arbitrarily meanwhile.
struct DiagramFamily {
    std::string member;
    std::string param;
    std::string limit;
    std::optional<std::string> free;
};

// Sequence reading: lo for k < c + sum(params), hi afterwards.
// Function reading: lo while sum(params) < c, hi afterwards.
struct Threshold {
    Entropy lo{0};
    Entropy hi{0};
    std::int64_t c = 0;
    std::vector<std::string> params;

    static Threshold constant(Entropy v) { return {v, v, 0, {}}; }
};

using SpecTable = std::map<std::string, Threshold>;

struct Instance {
    int node = 0;
    std::vector<std::int64_t> vals;  // aligned with the node's params
    friend bool operator==(const Instance&, const Instance&) = default;
};

class MeasureDiagram {
public:
    struct Link {
        int member = 0;
        int limit = 0;
        int t = 0;                 // position of the growing parameter in the member
        int free = -1;             // position of the free parameter, or -1
        std::vector<int> from_limit;  // per member param: position in the limit node, or -1
    };

    // Validates and closes the families transitively.
    MeasureDiagram(std::map<std::string, std::int64_t> param_mins, std::vector<DiagramNode> nodes,
                   std::vector<DiagramFamily> families, std::optional<Entropy> p_sup = std::nullopt);

    const std::vector<DiagramNode>& nodes() const { return nodes_; }
    const std::vector<DiagramFamily>& families() const { return families_; }  // closed
    const std::vector<Link>& links() const { return links_; }
    const std::vector<int>& links_into(int node) const { return into_[static_cast<std::size_t>(node)]; }
    const std::map<std::string, std::int64_t>& param_mins() const { return mins_; }
    std::int64_t param_min(const std::string& name) const;
    std::int64_t max_param_min() const;
    int node_index(const std::string& id) const;
    int depth() const;
    const std::optional<Entropy>& p_sup() const { return p_sup_; }

    // Every instance whose parameters lie in [min, max(min, scale) + 2].
    std::vector<Instance> samples(std::int64_t scale) const;
    std::vector<Instance> samples(int node, std::int64_t scale) const;
    std::string label(const Instance& x) const;

private:
    std::map<std::string, std::int64_t> mins_;
    std::vector<DiagramNode> nodes_;
    std::vector<DiagramFamily> families_;
    std::vector<Link> links_;
    std::vector<std::vector<int>> into_;
    std::optional<Entropy> p_sup_;
};

}  // namespace symext
