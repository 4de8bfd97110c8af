#pragma once

#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lf/rng.hpp"

namespace lf {

using Coord2 = std::array<std::int32_t, 2>;
using Coord3 = std::array<std::int32_t, 3>;

inline bool is_pow2(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

/// Word-level bit access, either plain or via relaxed atomics. Parallel
/// schedulers guarantee that no two workers touch the same *site*; atomics
/// make the underlying read-modify-write of the shared 64-bit words safe.
template <bool Atomic>
struct BitOps {
    static std::uint64_t load(const std::uint64_t& w) {
        if constexpr (Atomic) {
            return std::atomic_ref<std::uint64_t>(const_cast<std::uint64_t&>(w))
                .load(std::memory_order_relaxed);
        } else {
            return w;
        }
    }
    static void fetch_xor(std::uint64_t& w, std::uint64_t mask) {
        if constexpr (Atomic) {
            std::atomic_ref<std::uint64_t>(w).fetch_xor(mask, std::memory_order_relaxed);
        } else {
            w ^= mask;
        }
    }
};

namespace detail {

inline std::size_t word_count(std::uint64_t bits) {
    return static_cast<std::size_t>((bits + 63) / 64);
}

}  // namespace detail

/// Slope state of the 2+1d octahedron surface on an L x L periodic grid.
/// Two bit planes hold sigma_x and sigma_y; bit 1 encodes slope +1, bit 0
/// encodes -1, so the deposition/detachment move is a four-bit XOR.
///
/// Closure invariants (periodic height function):
///   every row j:    sum_i sigma_x(i,j) = 0
///   every column i: sum_j sigma_y(i,j) = 0
class SlopeField {
public:
    explicit SlopeField(std::int32_t size);

    std::int32_t size() const { return size_; }
    std::int64_t sites() const { return std::int64_t{size_} * size_; }

    std::int64_t index(std::int32_t i, std::int32_t j) const {
        return std::int64_t{j} * size_ + i;
    }

    bool bit_x(std::int32_t i, std::int32_t j) const {
        std::int64_t idx = index(i, j);
        return (x_[static_cast<std::size_t>(idx >> 6)] >> (idx & 63)) & 1u;
    }
    bool bit_y(std::int32_t i, std::int32_t j) const {
        std::int64_t idx = index(i, j);
        return (y_[static_cast<std::size_t>(idx >> 6)] >> (idx & 63)) & 1u;
    }
    int slope_x(std::int32_t i, std::int32_t j) const { return bit_x(i, j) ? 1 : -1; }
    int slope_y(std::int32_t i, std::int32_t j) const { return bit_y(i, j) ? 1 : -1; }

    void set_bit_x(std::int32_t i, std::int32_t j, bool v);
    void set_bit_y(std::int32_t i, std::int32_t j, bool v);

    std::uint64_t* words_x() { return x_.data(); }
    std::uint64_t* words_y() { return y_.data(); }
    const std::uint64_t* words_x() const { return x_.data(); }
    const std::uint64_t* words_y() const { return y_.data(); }

    /// sum_i sigma_x(i,j) per row j.
    std::vector<std::int32_t> row_sums_x() const;
    /// sum_j sigma_y(i,j) per column i.
    std::vector<std::int32_t> col_sums_y() const;
    bool closure_holds() const;

    bool operator==(const SlopeField&) const = default;

private:
    std::int32_t size_;
    std::vector<std::uint64_t> x_, y_;
};

/// Checkerboard zigzag: sigma_x alternates with column parity, sigma_y with
/// row parity. This is the flattest slope-representable surface (a truly
/// flat plane has no +-1 slope encoding).
SlopeField make_flat_slopes(std::int32_t size);

/// Binary-alloy occupancy on the fcc lattice, stored as one bit per site of
/// the enclosing L x L x L simple-cubic grid (1 = species B). Only sites with
/// even x^y^z parity are fcc-valid; odd-parity bits stay zero.
class OccupancyLattice {
public:
    explicit OccupancyLattice(std::int32_t size);

    std::int32_t size() const { return size_; }
    /// Number of valid fcc sites, L^3/2. One MCS is this many attempts.
    std::int64_t valid_sites() const { return std::int64_t{size_} * size_ * size_ / 2; }

    std::int64_t index(std::int32_t x, std::int32_t y, std::int32_t z) const {
        return (std::int64_t{z} * size_ + y) * size_ + x;
    }

    bool is_b(std::int32_t x, std::int32_t y, std::int32_t z) const {
        std::int64_t idx = index(x, y, z);
        return (bits_[static_cast<std::size_t>(idx >> 6)] >> (idx & 63)) & 1u;
    }
    void set_b(std::int32_t x, std::int32_t y, std::int32_t z, bool v);

    std::uint64_t* words() { return bits_.data(); }
    const std::uint64_t* words() const { return bits_.data(); }

    std::int64_t count_b() const;

    bool operator==(const OccupancyLattice&) const = default;

private:
    std::int32_t size_;
    std::vector<std::uint64_t> bits_;
};

/// Eq-style fcc membership test on the simple-cubic embedding: a site is a
/// valid fcc coordinate iff the lowest bit of x^y^z is zero.
inline bool fcc_is_valid(Coord3 p) {
    return ((p[0] ^ p[1] ^ p[2]) & 1) == 0;
}

/// The twelve nearest fcc neighbors: all periodic offsets with two
/// coordinates +-1 and one coordinate 0. Rejects invalid-parity input.
std::array<Coord3, 12> fcc_neighbors(Coord3 p, std::int32_t size);

inline constexpr std::array<Coord3, 12> kFccOffsets = {{
    {1, 1, 0},  {1, -1, 0},  {-1, 1, 0},  {-1, -1, 0},
    {1, 0, 1},  {1, 0, -1},  {-1, 0, 1},  {-1, 0, -1},
    {0, 1, 1},  {0, 1, -1},  {0, -1, 1},  {0, -1, -1},
}};

/// Fill every valid fcc site with species B independently with probability c.
OccupancyLattice make_random_alloy(std::int32_t size, double concentration, RngStream& rng);

}  // namespace lf
