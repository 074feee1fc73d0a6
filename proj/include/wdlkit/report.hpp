#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wdlkit {

/// One axiom or derived-property verdict. A failing entry carries a concrete
/// witness: named elements plus the two sides that violate the relation.
struct CheckResult {
    enum class Relation { Equal, LessEqual };

    std::string id;                                            // "axiom-3", "property-vi", ...
    bool passed = true;
    std::vector<std::pair<std::string, std::string>> witness;  // ("x","b"), ("y","a"), ...
    std::string lhs, rhs;                                      // element names
    Relation relation = Relation::Equal;

    static CheckResult pass(std::string id) {
        CheckResult r;
        r.id = std::move(id);
        return r;
    }
    static CheckResult fail(std::string id,
                            std::vector<std::pair<std::string, std::string>> witness,
                            std::string lhs, std::string rhs, Relation rel) {
        CheckResult r;
        r.id = std::move(id);
        r.passed = false;
        r.witness = std::move(witness);
        r.lhs = std::move(lhs);
        r.rhs = std::move(rhs);
        r.relation = rel;
        return r;
    }
};

struct AxiomReport {
    std::vector<CheckResult> entries;

    bool all_passed() const {
        for (const auto& e : entries)
            if (!e.passed) return false;
        return true;
    }
    const CheckResult* find(std::string_view id) const {
        for (const auto& e : entries)
            if (e.id == id) return &e;
        return nullptr;
    }
    const CheckResult* first_failure() const {
        for (const auto& e : entries)
            if (!e.passed) return &e;
        return nullptr;
    }
    void append(AxiomReport other) {
        for (auto& e : other.entries) entries.push_back(std::move(e));
    }
};

/// "PASS axiom-3" / "FAIL axiom-3 witness x=b y=a lhs=a rhs=b"
std::string to_line(const CheckResult& r);
std::string to_text(const AxiomReport& r);

} // namespace wdlkit
