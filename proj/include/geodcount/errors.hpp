#pragma once

#include <stdexcept>
#include <string>

namespace geodcount {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ArithmeticOverflow : Error {
    explicit ArithmeticOverflow(const std::string& msg) : Error(msg) {}
};

struct DeterminantError : Error {
    explicit DeterminantError(const std::string& msg) : Error(msg) {}
};

struct HeightTooSmall : Error {
    explicit HeightTooSmall(const std::string& msg) : Error(msg) {}
};

struct ConvergenceError : Error {
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

struct PoleError : Error {
    explicit PoleError(const std::string& msg) : Error(msg) {}
};

struct ParameterError : Error {
    explicit ParameterError(const std::string& msg) : Error(msg) {}
};

struct DivergenceError : Error {
    explicit DivergenceError(const std::string& msg) : Error(msg) {}
};

struct QuadratureError : Error {
    explicit QuadratureError(const std::string& msg) : Error(msg) {}
};

struct SieveRangeError : Error {
    explicit SieveRangeError(const std::string& msg) : Error(msg) {}
};

struct CrossCheckError : Error {
    explicit CrossCheckError(const std::string& msg) : Error(msg) {}
};

struct DegenerateFitError : Error {
    explicit DegenerateFitError(const std::string& msg) : Error(msg) {}
};

struct ResourceError : Error {
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

} // namespace geodcount
