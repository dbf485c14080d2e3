#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace levysde {

/// Violated precondition on a public entry point (bad alpha, non-dividing factor, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The drift produced a non-finite value while stepping a scheme.
class SolverError : public std::runtime_error {
public:
    SolverError(std::size_t step, const std::string& what)
        : std::runtime_error(what), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

/// A solver failure inside a convergence study, tagged with where it happened.
class StudyError : public std::runtime_error {
public:
    StudyError(double alpha, std::size_t sim, int level, const std::string& what)
        : std::runtime_error(what), alpha_(alpha), sim_(sim), level_(level) {}

    double alpha() const noexcept { return alpha_; }
    std::size_t sim() const noexcept { return sim_; }
    int level() const noexcept { return level_; }

private:
    double alpha_;
    std::size_t sim_;
    int level_;
};

/// Malformed or invalid study configuration document.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Failure writing or reading a file.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace levysde
