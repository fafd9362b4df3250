#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rgw {

// Error with a stable machine-readable code ("UnknownAtom", "NotTotal", ...)
// plus a human-readable detail string.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Report-style validation result: empty iff the object is valid.
struct Report {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
    void add(const std::string& v) { violations.push_back(v); }
    void merge(const Report& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

} // namespace rgw
