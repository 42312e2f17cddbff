// Copyright (C) 2026 the vigen authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace vigen {

// Error taxonomy mapped to CLI exit codes: validation/config -> 1,
// backend -> 2, contract (internal misuse) -> 3.

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ValidationError : std::runtime_error {
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ContractError : std::logic_error {
    explicit ContractError(const std::string& msg) : std::logic_error(msg) {}
};

struct BackendError : std::runtime_error {
    explicit BackendError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric blow-up during latent inversion; callers fall back to the
// draft-derived memory instead of aborting the task.
struct CalibrationError : std::runtime_error {
    explicit CalibrationError(const std::string& msg) : std::runtime_error(msg) {}
};

// A strict-mode scripted mock saw a request it has no answer for.
struct MockMismatchError : std::logic_error {
    explicit MockMismatchError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace vigen
