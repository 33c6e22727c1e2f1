#pragma once

#include <stdexcept>
#include <string>

namespace torelli {

enum class ErrorCode {
    MissingLabel,
    OverlappingBlocks,
    EmptyBlock,
    UnknownLabel,
    UniverseMismatch,
    MalformedPartition,
    NonnegativeEuler,
    DegenerateParameters,
    UnknownCurve,
    MalformedRibbon,
    ClassNotInModule,
    WrongTarget,
    NotFiner,
    NotFilling,
    FamilyOverlap,
    DisjointnessFailed,
    CapExceeded,
    NotPrimitive,
    NonpositiveDenominator,
    BadEpsilon,
    PreconditionFailed,
    Overflow,
    MalformedCertificate,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace torelli
