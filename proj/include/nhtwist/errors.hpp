#pragma once

#include <stdexcept>
#include <string>

namespace nhtwist {

/// Invalid specification, parameters, or run configuration.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure during integration or evaluation. Carries the time at
/// which the state stopped being finite, when known.
class NumericsError : public std::runtime_error {
public:
    explicit NumericsError(const std::string& what, double time = 0.0)
        : std::runtime_error(what), time_(time) {}

    double time() const noexcept { return time_; }

private:
    double time_;
};

}  // namespace nhtwist
