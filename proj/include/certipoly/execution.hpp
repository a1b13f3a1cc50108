// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace certipoly {

/// Selects between the OpenMP kernel and its serial reference. Both produce
/// identical results; the serial path exists for testing and benchmarking.
enum class Execution { serial, parallel };

/// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads();

}  // namespace certipoly
