#pragma once

#include <stdexcept>
#include <string>

namespace qlab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad arguments, malformed input files, violated preconditions.
struct UsageError : Error {
    using Error::Error;
};

// An enumeration would exceed the configured candidate budget.
struct BudgetError : Error {
    unsigned long long projected;
    unsigned long long budget;
    BudgetError(unsigned long long projected_, unsigned long long budget_)
        : Error("enumeration budget exceeded: projected " + std::to_string(projected_) +
                " candidates, budget " + std::to_string(budget_)),
          projected(projected_),
          budget(budget_) {}
};

// A runtime self-check failed (these indicate an implementation bug,
// never bad user input).
struct CheckError : Error {
    using Error::Error;
};

} // namespace qlab
