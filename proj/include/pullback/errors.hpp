#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace pullback {

/// Violated precondition or type invariant (bad dimensions, misaligned
/// times, empty clouds). Programming errors, not data conditions.
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& what) : std::logic_error(what) {}
};

/// A requested quantity does not exist for the given inputs, e.g. a
/// divergent improper integral of a non-tempered forcing.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Trajectory left the representable range (inf/nan state components).
class NumericalBlowup : public std::runtime_error {
public:
    NumericalBlowup(const std::string& what, double t)
        : std::runtime_error(what), time(t) {}
    double time;
};

/// An iterative procedure hit its cap before meeting its tolerance.
class NonConvergence : public std::runtime_error {
public:
    NonConvergence(const std::string& what, double last_defect)
        : std::runtime_error(what), defect(last_defect) {}
    double defect;
};

/// Nonlinear solver stagnated; carries the residual history for diagnosis.
class SolverError : public std::runtime_error {
public:
    SolverError(const std::string& what, std::vector<double> residuals)
        : std::runtime_error(what), residual_history(std::move(residuals)) {}
    std::vector<double> residual_history;
};

} // namespace pullback
