#include "xm/report.hpp"

#include <sstream>

namespace xm {

bool Report::passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::absorb(const Report& r, const std::string& prefix) {
    for (auto c : r.checks) {
        if (!prefix.empty()) c.id = prefix.back() == '.' ? prefix + c.id : prefix + "." + c.id;
        checks.push_back(std::move(c));
    }
}

const Check* Report::find(const std::string& id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

std::vector<std::string> Report::failed_ids() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.pass) out.push_back(c.id);
    return out;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["subject"] = subject;
    j["probe"] = probe;
    j["seed"] = seed;
    j["passed"] = passed();
    auto& arr = j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json x;
        x["id"] = c.id;
        x["pass"] = c.pass;
        x["tested"] = c.tested;
        x["failures"] = c.failures;
        x["exhaustive"] = c.exhaustive;
        x["witnesses"] = c.witnesses;
        if (!c.note.empty()) x["note"] = c.note;
        arr.push_back(std::move(x));
    }
    return j;
}

std::string Report::to_text() const {
    std::ostringstream os;
    os << "subject: " << subject << "\n";
    if (!probe.empty()) os << "probe: " << probe << "\n";
    os << "seed: " << seed << "\n";
    for (const auto& c : checks) {
        os << (c.pass ? "  PASS " : "  FAIL ") << c.id;
        if (c.tested) os << "  [" << c.tested << (c.exhaustive ? " exhaustive" : " sampled") << "]";
        if (!c.note.empty()) os << "  " << c.note;
        os << "\n";
        for (const auto& w : c.witnesses) os << "       witness: " << w << "\n";
    }
    os << (passed() ? "result: PASS" : "result: FAIL") << "\n";
    return os.str();
}

Check make_check(std::string id, bool pass, std::string witness, std::string note) {
    Check c;
    c.id = std::move(id);
    c.pass = pass;
    c.tested = 1;
    c.failures = pass ? 0 : 1;
    if (!pass && !witness.empty()) c.witnesses.push_back(std::move(witness));
    c.note = std::move(note);
    return c;
}

}  // namespace xm
