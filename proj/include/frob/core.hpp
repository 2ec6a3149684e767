#ifndef FROB_CORE_HPP
#define FROB_CORE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace frob {

using int128 = __int128;

// Coprimality status of an entry vector. `weak` is gcd(a1,...,an) = 1,
// `strong` is pairwise coprimality. When strong fails, `witness` holds the
// first offending index pair (0-based, i < j).
struct ConditionStatus {
    bool weak = false;
    bool strong = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// A validated instance of the coin problem: positive entries stored sorted
// ascending. Immutable after construction; safe to share across threads.
class Instance {
  public:
    // Sorts, checks n >= 2 and positivity, computes condition flags.
    // A gcd > 1 is not an error here: weak_ok() reports it and callers
    // decide whether the computation they want is meaningful.
    static Instance validate(std::vector<std::int64_t> entries);

    const std::vector<std::int64_t>& entries() const { return entries_; }
    std::int64_t entry(std::size_t i) const { return entries_[i]; }
    std::size_t dimension() const { return entries_.size(); }

    bool weak_ok() const { return cond_.weak; }
    bool strong_ok() const { return cond_.strong; }
    const ConditionStatus& conditions() const { return cond_; }

  private:
    Instance(std::vector<std::int64_t> entries, ConditionStatus cond)
        : entries_(std::move(entries)), cond_(cond) {}

    std::vector<std::int64_t> entries_;
    ConditionStatus cond_;
};

// gcd of a non-empty list of positive integers.
std::int64_t gcd_of(std::span<const std::int64_t> values);

// Smallest odd entry o1. Exists for every weak-valid instance (an all-even
// vector would have gcd >= 2); all-even input means validation was bypassed
// and raises std::logic_error.
std::int64_t smallest_odd(const Instance& inst);

} // namespace frob

#endif
