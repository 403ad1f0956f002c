#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rscodec {

// Base class for all typed errors. kind() is the stable identifier that the
// CLI prints and that tests match on; what() is "<kind>: <detail>".
class CodecError : public std::runtime_error {
public:
    CodecError(std::string kind, const std::string& detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

struct NotPrimeError : CodecError {
    explicit NotPrimeError(const std::string& d) : CodecError("NotPrime", d) {}
};

struct NotPrimitiveError : CodecError {
    explicit NotPrimitiveError(const std::string& d) : CodecError("NotPrimitive", d) {}
};

struct BadPolyDegreeError : CodecError {
    explicit BadPolyDegreeError(const std::string& d) : CodecError("BadPolyDegree", d) {}
};

struct UnsupportedFieldError : CodecError {
    explicit UnsupportedFieldError(const std::string& d) : CodecError("UnsupportedField", d) {}
};

struct DivideByZeroError : CodecError {
    explicit DivideByZeroError(const std::string& d) : CodecError("DivideByZero", d) {}
};

struct BadLengthError : CodecError {
    explicit BadLengthError(const std::string& d) : CodecError("BadLength", d) {}
};

struct DuplicateNodeError : CodecError {
    explicit DuplicateNodeError(const std::string& d) : CodecError("DuplicateNode", d) {}
};

struct MethodMismatchError : CodecError {
    explicit MethodMismatchError(const std::string& d) : CodecError("MethodMismatch", d) {}
};

struct BadLocatorError : CodecError {
    explicit BadLocatorError(const std::string& d) : CodecError("BadLocator", d) {}
};

struct RepeatedRootError : CodecError {
    explicit RepeatedRootError(const std::string& d) : CodecError("RepeatedRoot", d) {}
};

struct BadCodeParamsError : CodecError {
    explicit BadCodeParamsError(const std::string& d) : CodecError("BadCodeParams", d) {}
};

struct BudgetExceededError : CodecError {
    explicit BudgetExceededError(const std::string& d) : CodecError("BudgetExceeded", d) {}
};

// Malformed input data (params file, symbol streams). Maps to CLI exit 2.
struct ParseError : CodecError {
    explicit ParseError(const std::string& d) : CodecError("ParseError", d) {}
};

// A violated invariant that indicates a bug or corrupted state, not bad
// user input. Maps to CLI exit 3.
struct InternalError : CodecError {
    explicit InternalError(const std::string& d) : CodecError("InternalError", d) {}
};

}  // namespace rscodec
