#pragma once

#include <stdexcept>
#include <string>

namespace trispec {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A recurrence coefficient is zero or non-finite where the algorithm divides by it.
class CoefficientPoleError : public Error {
public:
    CoefficientPoleError(long level, double x, const std::string& context = {})
        : Error((context.empty() ? std::string() : context + ": ") + "coefficient pole at level " +
                std::to_string(level) + " (x = " + std::to_string(x) + ")"),
          level_(level), x_(x) {}

    long level() const noexcept { return level_; }
    double x() const noexcept { return x_; }

private:
    long level_;
    double x_;
};

/// An iterative evaluation hit its cap; carries the last two approximants.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double previous, double last)
        : Error(what), previous_(previous), last_(last) {}

    double previous() const noexcept { return previous_; }
    double last() const noexcept { return last_; }

private:
    double previous_;
    double last_;
};

/// Bad model parameters, unknown model tag, or an operation the model does not support.
class ModelError : public Error {
public:
    using Error::Error;
};

} // namespace trispec
