// Copyright (c) 2026 The pqcrand developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>

namespace pqcrand {

/// Maps 0 to the hardware thread count (at least 1).
unsigned resolve_workers(unsigned requested);

/// Runs body(i) for i in [0, count) across `workers` threads with a static
/// block partition. Iterations must be independent; callers preserve
/// determinism by writing each result to its own slot and reducing in index
/// order afterwards. The first exception thrown by any iteration is rethrown.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace pqcrand
