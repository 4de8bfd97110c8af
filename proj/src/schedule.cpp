#include "lf/schedule.hpp"

#include <numeric>
#include <stdexcept>

namespace lf {

namespace {

void check_args(std::int32_t blocks, std::int32_t workers, std::int32_t sets) {
    if (workers < 1) throw std::invalid_argument("schedule: workers must be >= 1");
    if (blocks < workers) {
        throw std::invalid_argument("schedule: need at least as many blocks as workers");
    }
    if (sets < 1) throw std::invalid_argument("schedule: sets must be >= 1");
}

}  // namespace

BlockSchedule schedule_naive(std::int32_t blocks, std::int32_t workers,
                             std::int32_t sets) {
    check_args(blocks, workers, sets);
    BlockSchedule out;
    for (std::int32_t s = 0; s < sets; ++s) {
        for (std::int32_t b = 0; b < blocks;) {
            std::vector<BlockRef> step;
            for (std::int32_t w = 0; w < workers && b < blocks; ++w, ++b) {
                step.push_back({s, b});
            }
            out.push_back(std::move(step));
        }
    }
    return out;
}

BlockSchedule schedule_ahead_of_time(std::int32_t blocks, std::int32_t workers,
                                     std::int32_t sets) {
    check_args(blocks, workers, sets);
    // Step boundaries fall every `workers` blocks across the concatenated set
    // stream; remainder slots of one set are filled from the next set.
    BlockSchedule out;
    std::vector<BlockRef> step;
    step.reserve(static_cast<std::size_t>(workers));
    for (std::int32_t s = 0; s < sets; ++s) {
        for (std::int32_t b = 0; b < blocks; ++b) {
            step.push_back({s, b});
            if (static_cast<std::int32_t>(step.size()) == workers) {
                out.push_back(std::move(step));
                step.clear();
            }
        }
    }
    if (!step.empty()) out.push_back(std::move(step));
    return out;
}

Fraction naive_busy_fraction(std::int64_t blocks, std::int64_t workers) {
    if (workers < 1 || blocks < workers) {
        throw std::invalid_argument("naive_busy_fraction: need blocks >= workers >= 1");
    }
    if (blocks % workers == 0) return {1, 1};
    const std::int64_t full = blocks / workers;
    const std::int64_t g = std::gcd(full, full + 1);
    return {full / g, (full + 1) / g};
}

Fraction busy_fraction(const BlockSchedule& schedule, std::int32_t workers) {
    if (schedule.empty()) return {1, 1};
    std::int64_t full = 0;
    for (const auto& step : schedule) {
        if (static_cast<std::int32_t>(step.size()) == workers) ++full;
    }
    const auto total = static_cast<std::int64_t>(schedule.size());
    const std::int64_t g = std::gcd(full == 0 ? total : full, total);
    return {full / g, total / g};
}

}  // namespace lf
