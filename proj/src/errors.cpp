#include "stratakit/errors.hpp"

namespace stratakit {

const char* error_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::NotPartition: return "NotPartition";
        case ErrorKind::NegativeGenus: return "NegativeGenus";
        case ErrorKind::ZeroEntry: return "ZeroEntry";
        case ErrorKind::NotOddPrime: return "NotOddPrime";
        case ErrorKind::KEven: return "KEven";
        case ErrorKind::KOdd: return "KOdd";
        case ErrorKind::NotParityType: return "NotParityType";
        case ErrorKind::WrongGenus: return "WrongGenus";
        case ErrorKind::InvalidTorsion: return "InvalidTorsion";
        case ErrorKind::GcdViolation: return "GcdViolation";
        case ErrorKind::NotPartitionOfMinusK: return "NotPartitionOfMinusK";
        case ErrorKind::ConjectureCounterexample: return "ConjectureCounterexample";
        case ErrorKind::PreconditionViolation: return "PreconditionViolation";
        case ErrorKind::RangeViolation: return "RangeViolation";
        case ErrorKind::NonRealizable: return "NonRealizable";
        case ErrorKind::RuleInapplicable: return "RuleInapplicable";
    }
    return "Error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

}  // namespace stratakit
