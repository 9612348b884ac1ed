#pragma once

#include "symext/entropy_value.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace symext {

using ojson = nlohmann::ordered_json;

struct Verdict {
    std::string name;
    bool pass = true;
    std::string expected;
    std::string actual;
};

struct Report {
    std::string command;  // echo of the invocation, flags in canonical order
    std::string digest;   // spec text plus flags
    ojson result = ojson::object();
    std::vector<Verdict> verdicts;
    std::vector<std::string> warnings;

    bool pass() const;
    void check(std::string name, bool pass, std::string expected = "", std::string actual = "");
};

enum class Format { json, table };
Format parse_format(const std::string& name);

// Stable field order; exact values as p/q with a decimal approximation.
std::string emit_report(const Report& report, Format format);

ojson to_json(const Rational& r);
ojson to_json(const Entropy& e);
ojson to_json(const Bracket& b);

}  // namespace symext
