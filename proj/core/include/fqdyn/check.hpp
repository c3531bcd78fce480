#pragma once

#include <string>
#include <vector>

namespace fqdyn {

/// One named check with its outcome; failures carry the offending values.
struct Assertion {
    std::string name;
    bool pass = false;
    std::string detail;
};

using AssertionTrace = std::vector<Assertion>;

inline bool all_pass(const AssertionTrace& trace) {
    for (const auto& a : trace)
        if (!a.pass) return false;
    return true;
}

inline void add_check(AssertionTrace& trace, std::string name, bool pass, std::string detail = "") {
    trace.push_back(Assertion{std::move(name), pass, std::move(detail)});
}

}  // namespace fqdyn
