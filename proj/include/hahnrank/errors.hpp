#pragma once

#include <stdexcept>
#include <string>

namespace hahnrank {

enum class ErrorCode {
    CrossChainComparison,
    DomainMismatch,
    UnknownOrientation,
    UndecidedEquivalence,
    NotFinite,
    ZeroElement,
    ZeroSeries,
    NotInvertible,
    UnsupportedShape,
    NotInPK,
    HypothesisNotProven,
    NotInValuationRing,
    InconsistentSegment,
    QuotientTooLarge,
    PoolTooLarge,
    NoCanonicalQuotient,
    TrivialEta,
    ParseFailure,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Parse failures carry an exact position (1-based) and what was expected there.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& expected)
        : Error(ErrorCode::ParseFailure,
                "line " + std::to_string(line) + ", column " + std::to_string(column) +
                    ": expected " + expected),
          line_(line), column_(column), expected_(expected) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& expected() const { return expected_; }

private:
    int line_;
    int column_;
    std::string expected_;
};

} // namespace hahnrank
