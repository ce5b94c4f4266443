#pragma once

#include <stdexcept>
#include <string>

namespace fibwalk {

/// Thrown when an operation is asked to exceed its hard input budget.
struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fibwalk
