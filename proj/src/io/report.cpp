#include "symext/io/report.hpp"

#include "symext/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace symext {

namespace {

std::string decimal(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

bool is_exact(const ojson& j) { return j.is_object() && j.size() == 2 && j.contains("exact") && j.contains("approx"); }

bool is_bracket(const ojson& j) { return j.is_object() && j.contains("lo") && j.contains("hi") && j.contains("converged"); }

std::string scalar(const ojson& j) {
    if (is_exact(j)) {
        const auto& a = j["approx"];
        return j["exact"].get<std::string>() + (a.is_null() ? "" : " (" + decimal(a.get<double>()) + ")");
    }
    if (is_bracket(j))
        return "[" + scalar(j["lo"]) + ", " + scalar(j["hi"]) + "]" + (j["converged"].get<bool>() ? "" : " (not converged)");
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

bool leaf(const ojson& j) {
    if (is_exact(j) || is_bracket(j)) return true;
    if (j.is_object()) return j.empty();
    if (j.is_array()) return std::all_of(j.begin(), j.end(), [](const ojson& x) { return x.is_primitive(); });
    return true;
}

void table(std::ostringstream& os, const ojson& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (leaf(it.value())) {
                os << pad << it.key() << ": " << scalar(it.value()) << "\n";
            } else {
                os << pad << it.key() << ":\n";
                table(os, it.value(), indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& x : j) {
            if (leaf(x)) {
                os << pad << "- " << scalar(x) << "\n";
            } else {
                os << pad << "-\n";
                table(os, x, indent + 2);
            }
        }
    } else {
        os << pad << scalar(j) << "\n";
    }
}

}  // namespace

bool Report::pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

void Report::check(std::string name, bool ok, std::string expected, std::string actual) {
    verdicts.push_back({std::move(name), ok, std::move(expected), std::move(actual)});
}

Format parse_format(const std::string& name) {
    if (name == "json") return Format::json;
    if (name == "table") return Format::table;
    throw ArgumentError("unknown format '" + name + "' (json or table)");
}

ojson to_json(const Rational& r) {
    ojson j;
    j["exact"] = to_string(r);
    j["approx"] = to_double(r);
    return j;
}

ojson to_json(const Entropy& e) {
    if (e.is_infinite()) {
        ojson j;
        j["exact"] = "inf";
        j["approx"] = nullptr;
        return j;
    }
    return to_json(e.value());
}

ojson to_json(const Bracket& b) {
    ojson j;
    j["lo"] = to_json(b.lo);
    j["hi"] = to_json(b.hi);
    j["converged"] = b.converged;
    return j;
}

std::string emit_report(const Report& r, Format format) {
    ojson j;
    j["command"] = r.command;
    j["digest"] = r.digest;
    j["result"] = r.result;
    j["verdicts"] = ojson::array();
    for (const auto& v : r.verdicts) {
        ojson x;
        x["name"] = v.name;
        x["pass"] = v.pass;
        if (!v.expected.empty() || !v.actual.empty()) {
            x["expected"] = v.expected;
            x["actual"] = v.actual;
        }
        j["verdicts"].push_back(x);
    }
    j["pass"] = r.pass();
    if (!r.warnings.empty()) j["warnings"] = r.warnings;
    if (format == Format::json) return j.dump(2) + "\n";

    std::ostringstream os;
    os << "command: " << r.command << "\n";
    os << "digest: " << r.digest << "\n";
    if (!r.result.empty()) {
        os << "result:\n";
        table(os, r.result, 2);
    }
    if (!r.verdicts.empty()) {
        os << "verdicts:\n";
        for (const auto& v : r.verdicts) {
            os << "  " << (v.pass ? "PASS" : "FAIL") << "  " << v.name;
            if (!v.expected.empty() || !v.actual.empty()) os << "  (expected " << v.expected << ", got " << v.actual << ")";
            os << "\n";
        }
    }
    if (!r.warnings.empty()) {
        os << "warnings:\n";
        for (const auto& w : r.warnings) os << "  - " << w << "\n";
    }
    os << "status: " << (r.pass() ? "pass" : "FAIL") << "\n";
    return os.str();
}

}  // namespace symext
