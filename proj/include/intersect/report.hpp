#pragma once

// Machine-readable result of a command: echo of the inputs, an exact value
// and a list of expected/got checks.

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rational.hpp"

namespace intersect {

struct Check {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
};

inline Check make_check(std::string name, const Rational& expected, const Rational& got) {
    return {std::move(name), to_string(expected), to_string(got), expected == got};
}

inline Check make_check(std::string name, const std::string& expected, const std::string& got) {
    return {std::move(name), expected, got, expected == got};
}

struct Report {
    std::string command;
    std::string space;
    std::string expr;
    std::string backend;
    std::optional<Rational> value;
    std::vector<Check> checks;
    std::vector<std::string> notes;
    std::map<int, Rational> table;  // per-degree values, emitted only when present

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["command"] = command;
        j["space"] = space;
        j["expr"] = expr;
        j["backend"] = backend;
        if (value) {
            j["value"] = {{"num", numerator_string(*value)}, {"den", denominator_string(*value)}};
        } else {
            j["value"] = nullptr;
        }
        j["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"name", c.name}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}});
        j["notes"] = notes;
        if (!table.empty()) {
            nlohmann::ordered_json t = nlohmann::ordered_json::object();
            for (const auto& [deg, v] : table) t[std::to_string(deg)] = {{"num", numerator_string(v)}, {"den", denominator_string(v)}};
            j["table"] = t;
        }
        return j;
    }

    std::string to_table() const {
        std::ostringstream out;
        out << command << "\n";
        if (!space.empty()) out << "  space:   " << space << "\n";
        if (!expr.empty()) out << "  expr:    " << expr << "\n";
        if (!backend.empty()) out << "  backend: " << backend << "\n";
        if (value) out << "  value:   " << to_string(*value) << "\n";
        for (const auto& [deg, v] : table) out << "  " << deg << ": " << to_string(v) << "\n";
        for (const auto& n : notes) out << "  note:    " << n << "\n";
        if (!checks.empty()) {
            std::size_t width = 4;
            for (const auto& c : checks) width = std::max(width, c.name.size());
            for (const auto& c : checks) {
                out << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << std::string(width - c.name.size(), ' ')
                    << "  expected " << c.expected << ", got " << c.got << "\n";
            }
        }
        return out.str();
    }
};

}  // namespace intersect
