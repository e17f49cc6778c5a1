// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

#include "spaceform/error.hpp"

namespace spaceform {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::CoprimalityViolation: return "CoprimalityViolation";
        case ErrorCode::OrderViolation: return "OrderViolation";
        case ErrorCode::EvenM: return "EvenM";
        case ErrorCode::GroupMismatch: return "GroupMismatch";
        case ErrorCode::NotFixedPointFree: return "NotFixedPointFree";
        case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
        case ErrorCode::InvalidAutomorphism: return "InvalidAutomorphism";
        case ErrorCode::InvalidRepresentation: return "InvalidRepresentation";
        case ErrorCode::BadPrime: return "BadPrime";
        case ErrorCode::PrimeTooSmall: return "PrimeTooSmall";
        case ErrorCode::SingularPoint: return "SingularPoint";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    }
    return "Unknown";
}

}  // namespace spaceform
