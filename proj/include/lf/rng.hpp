#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lf {

enum class RngKind : std::uint8_t { lcg32, lcg64_skip, tiny_mt };

const char* to_string(RngKind kind);
RngKind rng_kind_from_string(const std::string& name);

namespace detail {

// SplitMix64, used only to derive seeds and stream states.
inline std::uint64_t splitmix64(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t mix(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t x = seed ^ (0xA24BAED4963EE407ull * (salt + 1));
    std::uint64_t z = splitmix64(x);
    return z ^ splitmix64(x);
}

}  // namespace detail

inline constexpr std::uint32_t kLcg32Mult = 1664525u;
inline constexpr std::uint32_t kLcg32Add  = 1013904223u;
inline constexpr std::uint64_t kLcg64Mult = 6364136223846793005ull;
inline constexpr std::uint64_t kLcg64Add  = 1442695040888963407ull;

/// One per-worker pseudorandom stream. Streams are value types; each is
/// owned by exactly one worker at a time and never shared concurrently.
///
/// Three generator families are provided:
///   lcg32      - x <- 1664525 x + 1013904223 (mod 2^32); word = new state.
///   lcg64_skip - x <- 6364136223846793005 x + 1442695040888963407 (mod 2^64);
///                word = high 32 bits. Supports O(log n) skip-ahead.
///   tiny_mt    - small-state (127-bit) Mersenne-Twister-family generator,
///                4x32-bit state plus (mat1, mat2, tmat) parameters.
struct RngStream {
    RngKind kind = RngKind::lcg64_skip;
    std::uint32_t stream_id = 0;
    std::uint64_t lcg = 0;                 // lcg32 (low 32 bits) or lcg64 state
    std::array<std::uint32_t, 4> mt{};     // tiny_mt state
    std::uint32_t mat1 = 0, mat2 = 0, tmat = 0;

    static RngStream make(RngKind kind, std::uint64_t seed, std::uint32_t stream_id = 0);

    std::uint32_t next_u32();
    std::uint64_t next_u64();                    // two words
    double next_real();                          // uniform in [0,1)
    std::uint32_t next_below(std::uint32_t bound);  // uniform in [0,bound)

    /// Advance by n steps in O(log n); lcg64_skip only.
    void skip(std::uint64_t n);

private:
    std::uint32_t tinymt_next();
    void tinymt_init(std::uint64_t seed);
};

/// skip_ahead(s, m + n) == skip_ahead(skip_ahead(s, m), n).
RngStream skip_ahead(const RngStream& s, std::uint64_t n);

/// Derive `count` per-worker streams from one seed.
///   lcg64_skip - stream k starts k*stride steps into the seed stream, so
///                trajectories are disjoint for up to `stride` draws each.
///   lcg32      - stream k seeds its state from mix(seed, k) ("additive"
///                per-stream seeds; the recurrence itself is shared).
///   tiny_mt    - stream k initializes its state from (seed, k).
std::vector<RngStream> split_streams(RngKind kind, std::uint64_t seed, int count,
                                     std::uint64_t stride = std::uint64_t{1} << 40);

// --- inline hot path -------------------------------------------------------

inline std::uint32_t RngStream::tinymt_next() {
    // TinyMT32 state transition + tempering. State word 0 carries 31 bits.
    std::uint32_t x = (mt[0] & 0x7FFFFFFFu) ^ mt[1] ^ mt[2];
    std::uint32_t y = mt[3];
    x ^= x << 1;
    y ^= (y >> 1) ^ x;
    mt[0] = mt[1];
    mt[1] = mt[2];
    mt[2] = x ^ (y << 10);
    mt[3] = y;
    if (y & 1u) {
        mt[1] ^= mat1;
        mt[2] ^= mat2;
    }
    std::uint32_t t0 = mt[3];
    std::uint32_t t1 = mt[0] + (mt[2] >> 8);
    t0 ^= t1;
    if (t1 & 1u) t0 ^= tmat;
    return t0;
}

inline std::uint32_t RngStream::next_u32() {
    switch (kind) {
        case RngKind::lcg32: {
            std::uint32_t x = static_cast<std::uint32_t>(lcg);
            x = kLcg32Mult * x + kLcg32Add;
            lcg = x;
            return x;
        }
        case RngKind::lcg64_skip:
            lcg = kLcg64Mult * lcg + kLcg64Add;
            return static_cast<std::uint32_t>(lcg >> 32);
        case RngKind::tiny_mt:
            return tinymt_next();
    }
    return 0;  // unreachable
}

inline std::uint64_t RngStream::next_u64() {
    std::uint64_t hi = next_u32();
    return (hi << 32) | next_u32();
}

inline double RngStream::next_real() {
    return next_u32() * 0x1p-32;
}

inline std::uint32_t RngStream::next_below(std::uint32_t bound) {
    // Multiply-shift; for the power-of-two bounds used on the hot paths this
    // keeps the high (good) generator bits.
    return static_cast<std::uint32_t>((std::uint64_t{next_u32()} * bound) >> 32);
}

}  // namespace lf
