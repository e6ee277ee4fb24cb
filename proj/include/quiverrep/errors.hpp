#pragma once

#include <stdexcept>
#include <string>

namespace quiverrep {

// Invalid input: bad shapes, schema violations, unmet preconditions.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// The algorithm cannot certify its answer on this input (e.g. the
// decomposition search exhausted its budget, or a regular Kronecker
// parameter is not rational over the base field).  Distinct from
// validation_error so callers can map it to a separate exit code.
class incomplete_error : public std::runtime_error {
public:
    explicit incomplete_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace quiverrep
