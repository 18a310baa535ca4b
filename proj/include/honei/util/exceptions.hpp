#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace honei {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& message) : Error(message) {}
};

class DimensionMismatch : public Error {
public:
    DimensionMismatch(const std::string& where, std::size_t expected, std::size_t got)
        : Error(where + ": size mismatch, expected " + std::to_string(expected) +
                ", got " + std::to_string(got)) {}
};

class ConfigParseError : public Error {
public:
    ConfigParseError(const std::string& path, std::size_t line, const std::string& detail)
        : Error(path + ":" + std::to_string(line) + ": " + detail), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class UnknownBackend : public Error {
public:
    explicit UnknownBackend(const std::string& name)
        : Error("unknown backend '" + name + "'") {}
};

class UnknownKernel : public Error {
public:
    explicit UnknownKernel(const std::string& detail) : Error(detail) {}
};

class CflViolation : public Error {
public:
    CflViolation(double dt, double max_dt)
        : Error("CFL condition violated: dt = " + std::to_string(dt) +
                ", maximum admissible dt = " + std::to_string(max_dt)),
          max_dt_(max_dt) {}

    double max_admissible_dt() const { return max_dt_; }

private:
    double max_dt_;
};

class NonFiniteState : public Error {
public:
    explicit NonFiniteState(std::size_t step)
        : Error("non-finite value detected at step " + std::to_string(step)), step_(step) {}

    std::size_t step() const { return step_; }

private:
    std::size_t step_;
};

}  // namespace honei
