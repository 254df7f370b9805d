#include <chromgh/error.hpp>

namespace chromgh {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::MalformedMatrix: return "MalformedMatrix";
        case ErrorCode::AsymmetricMatrix: return "AsymmetricMatrix";
        case ErrorCode::TriangleViolation: return "TriangleViolation";
        case ErrorCode::NonzeroDiagonal: return "NonzeroDiagonal";
        case ErrorCode::ZeroOffDiagonal: return "ZeroOffDiagonal";
        case ErrorCode::EmptyRelation: return "EmptyRelation";
        case ErrorCode::MismatchedSpaces: return "MismatchedSpaces";
        case ErrorCode::EmptySubset: return "EmptySubset";
        case ErrorCode::NotACorrespondence: return "NotACorrespondence";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::NotColored: return "NotColored";
        case ErrorCode::InvalidConstraint: return "InvalidConstraint";
        case ErrorCode::UniverseMismatch: return "UniverseMismatch";
        case ErrorCode::NotConstrained: return "NotConstrained";
        case ErrorCode::EmptyColorClass: return "EmptyColorClass";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::EmptySimplex: return "EmptySimplex";
        case ErrorCode::SizeBudget: return "SizeBudget";
        case ErrorCode::NotATripod: return "NotATripod";
        case ErrorCode::InsufficientDimension: return "InsufficientDimension";
        case ErrorCode::NotASubcomplex: return "NotASubcomplex";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownExample: return "UnknownExample";
        case ErrorCode::BadParams: return "BadParams";
    }
    return "Unknown";
}

}  // namespace chromgh
