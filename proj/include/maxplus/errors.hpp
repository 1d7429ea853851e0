#pragma once

#include <stdexcept>
#include <string>

namespace maxplus {

// Input-side failures: malformed text, bad shapes.  The CLI maps these to
// exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class ShapeError : public std::runtime_error {
public:
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// Domain-side failures: well-formed input, no answer.  CLI exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class InfeasibleError : public DomainError {
public:
    explicit InfeasibleError(const std::string& what) : DomainError(what) {}
};

class NegativeCellError : public DomainError {
public:
    explicit NegativeCellError(const std::string& what) : DomainError(what) {}
};

class OverflowError : public std::runtime_error {
public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace maxplus
