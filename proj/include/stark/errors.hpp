#pragma once

#include <stdexcept>
#include <string>

namespace stark {

// Validation failures of user-supplied configuration (CLI exit code 1).
struct InvalidConfig : std::invalid_argument {
    explicit InvalidConfig(const std::string& msg) : std::invalid_argument(msg) {}
};

// Rejection sampling ran out of candidates (CLI exit code 2).
struct BudgetExhausted : std::runtime_error {
    explicit BudgetExhausted(const std::string& msg) : std::runtime_error(msg) {}
};

// The adaptive stepper could not meet its tolerance.
struct StepFailure : std::runtime_error {
    StepFailure(const std::string& msg, double xi) : std::runtime_error(msg), last_xi(xi) {}
    double last_xi;
};

// Remainder kernel failed the contraction/integrability check.
struct NotContracting : std::runtime_error {
    explicit NotContracting(const std::string& msg) : std::runtime_error(msg) {}
};

// Boundary-matching mismatch never changes sign over the scanned range.
struct NoCrossing : std::runtime_error {
    explicit NoCrossing(const std::string& msg) : std::runtime_error(msg) {}
};

// Fit window does not span enough decades / samples.
struct WindowTooShort : std::runtime_error {
    explicit WindowTooShort(const std::string& msg) : std::runtime_error(msg) {}
};

// Report assembly was handed a partial set of artifacts.
struct IncompleteInputs : std::runtime_error {
    explicit IncompleteInputs(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace stark
