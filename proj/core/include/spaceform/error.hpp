// Copyright 2026 The spaceform Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spaceform {

enum class ErrorCode {
    InvalidArgument,
    CoprimalityViolation,
    OrderViolation,
    EvenM,
    GroupMismatch,
    NotFixedPointFree,
    SizeLimitExceeded,
    InvalidAutomorphism,
    InvalidRepresentation,
    BadPrime,
    PrimeTooSmall,
    SingularPoint,
    DegreeMismatch,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable error code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace spaceform
