#pragma once

#include <stdexcept>
#include <string>

namespace tlinks {

// Hard resource gate (state-sum crossing limit, materialization caps).
// Domain/precondition violations use std::invalid_argument throughout.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tlinks
