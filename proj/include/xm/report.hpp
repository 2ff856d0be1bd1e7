#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace xm {

struct Check {
    std::string id;
    bool pass = true;
    std::uint64_t tested = 0;
    std::uint64_t failures = 0;
    bool exhaustive = true;
    std::vector<std::string> witnesses;
    std::string note;
};

struct Report {
    std::string subject;
    std::string probe;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    bool passed() const;
    void add(Check c) { checks.push_back(std::move(c)); }
    // Append the checks of another report, prefixing their ids.
    void absorb(const Report& r, const std::string& prefix = "");
    const Check* find(const std::string& id) const;
    std::vector<std::string> failed_ids() const;

    nlohmann::json to_json() const;
    std::string to_text() const;
};

Check make_check(std::string id, bool pass, std::string witness = "", std::string note = "");

}  // namespace xm
