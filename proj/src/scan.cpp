#include "autoseq/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace autoseq {

unsigned scan_threads() {
  const char* env = std::getenv("AUTOSEQ_THREADS");
  if (env == nullptr) return 1;
  try {
    const long v = std::stol(env);
    return v > 0 ? static_cast<unsigned>(std::min<long>(v, 256)) : 1;
  } catch (...) {
    return 1;
  }
}

std::optional<std::uint64_t> first_failure(std::uint64_t lo, std::uint64_t hi,
                                           const std::function<bool(std::uint64_t)>& ok) {
  if (lo > hi) return std::nullopt;
  const unsigned workers = scan_threads();
  const std::uint64_t span = hi - lo + 1;
  if (workers <= 1 || span < 4096) {
    for (std::uint64_t n = lo; n <= hi; ++n) {
      if (!ok(n)) return n;
    }
    return std::nullopt;
  }
  // Blocks are claimed in order; a block past a known failure is skipped.
  const std::uint64_t block = std::max<std::uint64_t>(1024, span / (workers * 8));
  const std::uint64_t nblocks = (span + block - 1) / block;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{UINT64_MAX};
  auto work = [&] {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= nblocks) return;
      const std::uint64_t start = lo + b * block;
      if (start >= best.load()) return;
      const std::uint64_t stop = std::min(hi, start + block - 1);
      for (std::uint64_t n = start; n <= stop; ++n) {
        if (!ok(n)) {
          std::uint64_t cur = best.load();
          while (n < cur && !best.compare_exchange_weak(cur, n)) {
          }
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (best.load() == UINT64_MAX) return std::nullopt;
  return best.load();
}

}  // namespace autoseq
