#pragma once

#include <stdexcept>
#include <string>

namespace olab {

// Thrown when an iterative eigensolver exhausts its sweep budget.
class SolverFailure : public std::runtime_error {
public:
    SolverFailure(const std::string& what, long iterations)
        : std::runtime_error(what + " (iterations=" + std::to_string(iterations) + ")"),
          iterations_(iterations) {}

    long iterations() const { return iterations_; }

private:
    long iterations_;
};

// Raised when a model is evaluated where it is not defined (e.g. gamma <= 1
// for outlier quantities).
class ModelInapplicable : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace olab
