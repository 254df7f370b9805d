#pragma once

#include <stdexcept>
#include <string>

namespace chromgh {

enum class ErrorCode {
    MalformedMatrix,
    AsymmetricMatrix,
    TriangleViolation,
    NonzeroDiagonal,
    ZeroOffDiagonal,
    EmptyRelation,
    MismatchedSpaces,
    EmptySubset,
    NotACorrespondence,
    IndexOutOfRange,
    NotColored,
    InvalidConstraint,
    UniverseMismatch,
    NotConstrained,
    EmptyColorClass,
    BudgetExceeded,
    EmptySimplex,
    SizeBudget,
    NotATripod,
    InsufficientDimension,
    NotASubcomplex,
    DegreeMismatch,
    ParseError,
    UnknownExample,
    BadParams,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Thrown when an exhaustive search runs out of budget. Carries whatever
// bounds were certified before stopping.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, double best_upper, double lower)
        : Error(ErrorCode::BudgetExceeded, what), best_upper_(best_upper), lower_(lower) {}

    double best_upper() const noexcept { return best_upper_; }
    double lower() const noexcept { return lower_; }

private:
    double best_upper_;
    double lower_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace chromgh
