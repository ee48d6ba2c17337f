#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace bgd {

using Json = nlohmann::json;

/// One named exact check: an equation either holds or a witness is recorded.
struct CheckResult {
    std::string name;
    bool pass = false;
    Json detail = Json::object();  // witness payloads, objects involved, ...

    static CheckResult ok(std::string name) { return CheckResult{std::move(name), true, Json::object()}; }
    static CheckResult fail(std::string name, Json detail) {
        return CheckResult{std::move(name), false, std::move(detail)};
    }
};

struct Report {
    std::vector<CheckResult> checks;

    void add(CheckResult c) { checks.push_back(std::move(c)); }
    void add(const std::string& name, bool pass, Json detail = Json::object()) {
        checks.push_back(CheckResult{name, pass, std::move(detail)});
    }
    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
    std::vector<std::string> failing() const {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.pass) out.push_back(c.name);
        return out;
    }

    Json to_json() const;
};

}  // namespace bgd
