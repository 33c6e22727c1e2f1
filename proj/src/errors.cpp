#include "torelli/errors.hpp"

namespace torelli {

const char* error_name(ErrorCode code) {
    switch (code) {
    case ErrorCode::MissingLabel: return "MissingLabel";
    case ErrorCode::OverlappingBlocks: return "OverlappingBlocks";
    case ErrorCode::EmptyBlock: return "EmptyBlock";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::UniverseMismatch: return "UniverseMismatch";
    case ErrorCode::MalformedPartition: return "MalformedPartition";
    case ErrorCode::NonnegativeEuler: return "NonnegativeEuler";
    case ErrorCode::DegenerateParameters: return "DegenerateParameters";
    case ErrorCode::UnknownCurve: return "UnknownCurve";
    case ErrorCode::MalformedRibbon: return "MalformedRibbon";
    case ErrorCode::ClassNotInModule: return "ClassNotInModule";
    case ErrorCode::WrongTarget: return "WrongTarget";
    case ErrorCode::NotFiner: return "NotFiner";
    case ErrorCode::NotFilling: return "NotFilling";
    case ErrorCode::FamilyOverlap: return "FamilyOverlap";
    case ErrorCode::DisjointnessFailed: return "DisjointnessFailed";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotPrimitive: return "NotPrimitive";
    case ErrorCode::NonpositiveDenominator: return "NonpositiveDenominator";
    case ErrorCode::BadEpsilon: return "BadEpsilon";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::MalformedCertificate: return "MalformedCertificate";
    }
    return "Unknown";
}

}  // namespace torelli
