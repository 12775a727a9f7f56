#pragma once

#include <cstdint>
#include <functional>
#include <optional>

namespace autoseq {

/// Worker count for range scans: AUTOSEQ_THREADS if set and positive, else 1.
unsigned scan_threads();

/// Smallest n in [lo, hi] with !ok(n), or nothing. The range is cut into
/// contiguous blocks handed to scan_threads() workers; the answer does not
/// depend on the worker count. `ok` must be safe to call concurrently.
std::optional<std::uint64_t> first_failure(std::uint64_t lo, std::uint64_t hi,
                                           const std::function<bool(std::uint64_t)>& ok);

}  // namespace autoseq
