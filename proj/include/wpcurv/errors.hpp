#pragma once

#include <stdexcept>
#include <string>

namespace wpcurv {

/// Raised when a computation cannot meet its accuracy contract
/// (unresolved angular modes, non-converged solves, failed self-checks).
class accuracy_error : public std::runtime_error {
public:
    explicit accuracy_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wpcurv
