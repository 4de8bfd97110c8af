#pragma once

#include <cstdint>

namespace lf {

/// Attempt accounting. Every scheduler performs exactly N attempts per MCS
/// (N = lattice sites for KPZ, valid fcc sites for KMC); successes counts
/// accepted moves.
struct Counters {
    std::int64_t attempts = 0;
    std::int64_t successes = 0;

    Counters& operator+=(const Counters& o) {
        attempts += o.attempts;
        successes += o.successes;
        return *this;
    }
};

}  // namespace lf
