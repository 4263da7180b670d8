#pragma once

#include <stdexcept>
#include <string>

namespace lgf {

enum class ErrorKind {
    ZeroConstantTerm,
    BadConstantTerm,
    NotReversible,
    BadInnerConstant,
    UnsupportedLattice,
    UnsupportedTerm,
    ResourceLimit,
    UnknownOperator,
    InsufficientTerms,
    NotMUM,
    FitFailure,
    NotSymmetricSquare,
    DomainError,
    DivergentRequest,
    DivergenceError,
    PrecisionNotMet,
    ParseError,
};

const char* kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Outcome of an identity check. `index` is the first failing position, or -1.
struct Report {
    bool ok = true;
    long index = -1;
    std::string detail;

    static Report pass(std::string d = {}) { return {true, -1, std::move(d)}; }
    static Report fail(long at, std::string d) { return {false, at, std::move(d)}; }
};

}  // namespace lgf
