#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace orlov {

// Outcome of a property sweep.  Violations are human-readable one-liners.
struct Report {
    std::string name;
    std::uint64_t checked = 0;
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    void fail(std::string what) {
        if (violations.size() < 50) violations.push_back(std::move(what));
        else if (violations.size() == 50) violations.push_back("...");
    }
    void merge(const Report& o) {
        checked += o.checked;
        for (auto& v : o.violations) fail(v);
    }
};

}  // namespace orlov
