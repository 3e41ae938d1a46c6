#pragma once

#include <stdexcept>
#include <string>

namespace fracext {

// A precondition of an operation was violated by the caller.
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

// An enumeration or solver exceeded its configured resource budget.
struct budget_exceeded_error : std::runtime_error {
    budget_exceeded_error(const std::string& what, long long budget)
        : std::runtime_error(what + " (budget " + std::to_string(budget) + ")"), budget(budget) {}
    long long budget;
};

// A staged subset extraction could not supply the requested measure, or a
// constructed color set fell short of measure one.  `condition` names the
// side condition of the construction that the failing epsilon violates.
struct deficit_error : std::runtime_error {
    deficit_error(const std::string& what, std::string condition)
        : std::runtime_error(what), condition(std::move(condition)) {}
    std::string condition;
};

}  // namespace fracext
