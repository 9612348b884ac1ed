#pragma once

#include "symext/dbar.hpp"
#include "symext/diagram/scenarios.hpp"
#include "symext/extension/generator.hpp"
#include "symext/extension/hierarchy.hpp"
#include "symext/markers/passes.hpp"
#include "symext/markers/verify.hpp"
#include "symext/periodic.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace symext {

inline constexpr int kSpecVersion = 1;

enum class SpecKind { sft, window, hierarchy, diagram, scenario, hall, extension, dbar };
std::string kind_name(SpecKind k);

struct WindowSpec {
    ArrayWindow window;
    std::optional<MarkerSchedule> schedule;
    std::vector<Rule> rules;  // empty: the pass decides
};

struct HierarchySpec {
    int s = 2;
    RectangleHierarchy hierarchy;
    OracleTable oracle;
    bool normalize = true;  // false: the oracle is taken as already normalized
    std::vector<std::vector<std::string>> paths;
};

struct DiagramSpec {
    DiagramProblem problem;
    std::optional<SpecTable> e;  // candidate superenvelope
};

struct ScenarioSpec {
    std::string name;
    std::optional<Rational> h0;
};

struct HallSpec {
    int n = 0;
    Alphabet alphabet = Alphabet::of_size(2);
    std::vector<std::string> ids;
    std::vector<std::vector<Word>> words;
};

struct ExtensionSpec {
    Extension ext;
    int observe = 0;
};

struct DbarSpec {
    Mixture mu, nu;
};

using SpecPayload =
    std::variant<SftSpec, WindowSpec, HierarchySpec, DiagramSpec, ScenarioSpec, HallSpec, ExtensionSpec, DbarSpec>;

struct SpecFile {
    SpecKind kind;
    int version = kSpecVersion;
    SpecPayload payload;
    std::string digest;  // of the raw text

    template <typename T>
    const T& as() const {
        return std::get<T>(payload);
    }
};

// Throws SchemaError carrying the offending field path.
SpecFile parse_spec(const std::string& text);
SpecFile load_spec(const std::string& path);

// FNV-1a 64, as 16 hex digits.
std::string fnv1a64(const std::string& data);

}  // namespace symext
