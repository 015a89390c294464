#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcube {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class UnknownLogicError : public Error {
public:
    using Error::Error;
};

// A truth value outside the logic's admissible set was passed to a table.
class ValueDomainError : public Error {
public:
    using Error::Error;
};

class RowCapExceeded : public Error {
public:
    using Error::Error;
};

class ClosureImpossible : public Error {
public:
    using Error::Error;
};

class UnboundMetavariable : public Error {
public:
    using Error::Error;
};

class MissingSubformula : public Error {
public:
    using Error::Error;
};

class OracleBudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace mcube
