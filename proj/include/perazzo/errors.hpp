#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace perazzo {

/// A mathematical precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Randomized resampling ran out of attempts.
class RetryExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The contracted polynomials of a linear-form contraction are dependent.
class IndependenceLost : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A Perazzo form failed validation; carries every violation found.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& v) {
        std::string out = "invalid Perazzo form";
        for (const auto& s : v)
            out += "; " + s;
        return out;
    }

    std::vector<std::string> violations_;
};

}  // namespace perazzo
