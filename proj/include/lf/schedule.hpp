#pragma once

#include <cstdint>
#include <vector>

namespace lf {

/// One block activation inside a scheduling step. `set` indexes the position
/// in the set sequence (which set of independent domains), `block` the domain
/// ordinal within that set.
struct BlockRef {
    std::int32_t set;
    std::int32_t block;

    bool operator==(const BlockRef&) const = default;
};

using BlockSchedule = std::vector<std::vector<BlockRef>>;

/// Naive per-set schedule: each set of `blocks` domains is chopped into steps
/// of `workers`; when workers does not divide blocks the last step of every
/// set runs short.
BlockSchedule schedule_naive(std::int32_t blocks, std::int32_t workers,
                             std::int32_t sets = 1);

/// Ahead-of-time schedule: the remainder step of a set is filled with blocks
/// of the following set activated early, so every step occupies all workers
/// except possibly the final one of the run. Each block still appears exactly
/// once.
BlockSchedule schedule_ahead_of_time(std::int32_t blocks, std::int32_t workers,
                                     std::int32_t sets = 1);

/// Exact rational a/b, reduced.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool operator==(const Fraction&) const = default;
};

/// Fraction of naive scheduling steps that occupy all workers. For
/// m mod n != 0 this is the utilization bound (m/n)/(m/n + 1) with integer
/// division; for divisible loads it is 1.
Fraction naive_busy_fraction(std::int64_t blocks, std::int64_t workers);

/// Fraction of steps of an arbitrary schedule that occupy all workers.
Fraction busy_fraction(const BlockSchedule& schedule, std::int32_t workers);

}  // namespace lf
