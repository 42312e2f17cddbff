// Copyright (C) 2026 the vigen authors
// SPDX-License-Identifier: Apache-2.0
//
// Self-contained deterministic RNG. std::normal_distribution is
// implementation-defined, so every stream that must replay bit-exactly
// goes through splitmix64 + Box-Muller instead.

#pragma once

#include <cstdint>
#include <string_view>

#include "vigen/linalg.hpp"

namespace vigen {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    // Uniform in [0, 1) with 53 bits of mantissa.
    double next_unit();
    // Standard normal via Box-Muller; the paired value is cached.
    double next_gaussian();
    // Uniform in [0, n) without modulo bias.
    std::uint64_t next_below(std::uint64_t n);

private:
    std::uint64_t state_;
    double cached_gaussian_ = 0.0;
    bool has_cached_ = false;
};

// FNV-1a over bytes; used for request hashes and seed derivation.
std::uint64_t fnv1a(std::string_view bytes);

// Stream splitting: a parent seed plus a role/index yields an
// independent child seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);
std::uint64_t derive_seed(std::uint64_t seed, std::string_view role, std::uint64_t index = 0);

Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed, double scale = 1.0);

}  // namespace vigen
