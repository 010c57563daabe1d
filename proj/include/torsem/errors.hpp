#pragma once

#include <stdexcept>
#include <string>

namespace torsem {

// Raised when an operation is mathematically undefined for its input, or when
// a truncated series does not carry enough terms to certify the answer.
// `code` is a stable machine-readable identifier; `what()` is for humans.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Raised on malformed textual/JSON input, as opposed to well-formed input
// describing an object outside an operation's domain.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace torsem
