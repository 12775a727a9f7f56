#include "autoseq/periodicity.hpp"

#include "autoseq/error.hpp"

namespace autoseq {

EventuallyPeriodicSeq::EventuallyPeriodicSeq(std::vector<Value> preperiod, std::vector<Value> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw Error(ErrorKind::InvalidArgument, "period must not be empty");
  const std::size_t len = period_.size();
  for (std::size_t d = 1; d < len; ++d) {
    if (len % d != 0) continue;
    bool ok = true;
    for (std::size_t i = d; i < len && ok; ++i) ok = period_[i] == period_[i - d];
    if (ok) {
      period_.resize(d);
      break;
    }
  }
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    preperiod_.pop_back();
    period_.insert(period_.begin(), period_.back());
    period_.pop_back();
  }
}

Value EventuallyPeriodicSeq::operator()(std::uint64_t n) const {
  if (n < preperiod_.size()) return preperiod_[n];
  return period_[(n - preperiod_.size()) % period_.size()];
}

std::optional<EventualPeriod> eventual_period_detect(const std::vector<Value>& seq) {
  const std::size_t h = seq.size();
  if (h < 4) return std::nullopt;
  // Prefix function of the reversed sequence: per(L) = L - pi[L - 1] is the
  // smallest period of the suffix of length L, non-decreasing in L.
  std::vector<std::size_t> pi(h, 0);
  auto rev = [&](std::size_t i) -> const Value& { return seq[h - 1 - i]; };
  for (std::size_t i = 1; i < h; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && rev(i) != rev(k)) k = pi[k - 1];
    if (rev(i) == rev(k)) ++k;
    pi[i] = k;
  }
  for (std::size_t len = h; len >= 3; --len) {
    const std::size_t per = len - pi[len - 1];
    if (3 * per <= len) return EventualPeriod{h - len, per};
  }
  return std::nullopt;
}

std::optional<EventualPeriod> eventual_period_detect(const SequenceOracle& f, std::uint64_t horizon) {
  std::vector<Value> seq(horizon);
  for (std::uint64_t n = 0; n < horizon; ++n) seq[n] = f(n);
  return eventual_period_detect(seq);
}

std::optional<EventuallyPeriodicSeq> fit_eventually_periodic(const std::vector<Value>& seq) {
  const auto ep = eventual_period_detect(seq);
  if (!ep) return std::nullopt;
  std::vector<Value> pre(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(ep->preperiod));
  std::vector<Value> per(seq.begin() + static_cast<std::ptrdiff_t>(ep->preperiod),
                         seq.begin() + static_cast<std::ptrdiff_t>(ep->preperiod + ep->period));
  return EventuallyPeriodicSeq(std::move(pre), std::move(per));
}

}  // namespace autoseq
