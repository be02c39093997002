#pragma once

#include <stdexcept>
#include <string>

namespace stratakit {

enum class ErrorKind {
    Parse,
    Overflow,
    NotPartition,
    NegativeGenus,
    ZeroEntry,
    NotOddPrime,
    KEven,
    KOdd,
    NotParityType,
    WrongGenus,
    InvalidTorsion,
    GcdViolation,
    NotPartitionOfMinusK,
    ConjectureCounterexample,
    PreconditionViolation,
    RangeViolation,
    NonRealizable,
    RuleInapplicable,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace stratakit
