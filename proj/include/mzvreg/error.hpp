#pragma once

#include <stdexcept>
#include <string>

namespace mzvreg {

enum class ErrorCode {
    domain = 1,    // argument outside the mathematical domain of an operation
    capacity = 2,  // configured size bound exceeded
    accuracy = 3,  // requested tolerance not reachable with the configuration
    parse = 4,     // malformed text input
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

struct CapacityError : Error {
    explicit CapacityError(const std::string& what) : Error(ErrorCode::capacity, what) {}
};

struct AccuracyError : Error {
    explicit AccuracyError(const std::string& what) : Error(ErrorCode::accuracy, what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(ErrorCode::parse, what) {}
};

}  // namespace mzvreg
