#pragma once

#include <stdexcept>
#include <string>

namespace relaycrit {

/// Malformed input text. `line` is 1-based when known, 0 otherwise.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_ = 0;
};

/// A domain invariant does not hold (duplicate id, dangling reference, ...).
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An iterative solver failed to reach its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& msg, double residual)
        : std::runtime_error(msg), residual_(residual) {}
    double residual() const noexcept { return residual_; }

private:
    double residual_ = 0.0;
};

/// The dynamic network solution failed; carries the simulation time.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& msg, double t)
        : std::runtime_error(msg), t_(t) {}
    double t() const noexcept { return t_; }

private:
    double t_ = 0.0;
};

/// Model/dataset feature schemas do not match.
class SchemaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Hyperparameter search ended with no admissible candidate.
class SearchError : public std::runtime_error {
public:
    SearchError(const std::string& msg, std::string best_rejected)
        : std::runtime_error(msg), best_rejected_(std::move(best_rejected)) {}
    /// Log line of the best-recall candidate that was rejected.
    const std::string& best_rejected() const noexcept { return best_rejected_; }

private:
    std::string best_rejected_;
};

}  // namespace relaycrit
