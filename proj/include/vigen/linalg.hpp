// Copyright (C) 2026 the vigen authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

namespace vigen {

// Token matrices are row-major: one row per latent position, one column
// per channel. All math runs in double; token traces are quantized to
// f32 at capture so serialized runs replay bit-exactly.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vector = Eigen::VectorXd;

}  // namespace vigen
