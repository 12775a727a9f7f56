#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "autoseq/dfao.hpp"
#include "autoseq/value.hpp"

namespace autoseq {

/// value(n) = preperiod[n] for n < |preperiod|, else
/// period[(n - |preperiod|) mod |period|].
class EventuallyPeriodicSeq {
 public:
  /// Throws InvalidArgument on an empty period. The stored form is canonical:
  /// the period is primitive and the preperiod as short as possible.
  EventuallyPeriodicSeq(std::vector<Value> preperiod, std::vector<Value> period);

  static EventuallyPeriodicSeq constant(const Value& v) { return EventuallyPeriodicSeq({}, {v}); }

  const std::vector<Value>& preperiod() const noexcept { return preperiod_; }
  const std::vector<Value>& period() const noexcept { return period_; }
  Value operator()(std::uint64_t n) const;

  bool operator==(const EventuallyPeriodicSeq&) const = default;

 private:
  std::vector<Value> preperiod_;
  std::vector<Value> period_;
};

struct EventualPeriod {
  std::size_t preperiod = 0;
  std::size_t period = 1;
  bool operator==(const EventualPeriod&) const = default;
};

/// Smallest (n0, d) such that seq[n + d] = seq[n] for n0 <= n < |seq| - d
/// and the periodic tail holds at least three periods (the block and two
/// confirmations). Nothing when no such pair exists or |seq| < 4.
std::optional<EventualPeriod> eventual_period_detect(const std::vector<Value>& seq);

/// Same on f(0), ..., f(H - 1).
std::optional<EventualPeriod> eventual_period_detect(const SequenceOracle& f, std::uint64_t horizon);

/// The canonical sequence matching the detected structure of seq.
std::optional<EventuallyPeriodicSeq> fit_eventually_periodic(const std::vector<Value>& seq);

}  // namespace autoseq
