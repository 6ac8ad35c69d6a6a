#ifndef COINV_CHECK_HPP
#define COINV_CHECK_HPP

#include <string>
#include <vector>

namespace coinv {

// Outcome of one verification: `cited` states the claim being checked.
struct CheckResult {
    std::string name;
    std::string cited;
    bool pass = false;
    std::string detail;
};

inline bool all_pass(const std::vector<CheckResult>& v) {
    for (const auto& c : v)
        if (!c.pass) return false;
    return true;
}

}  // namespace coinv

#endif
