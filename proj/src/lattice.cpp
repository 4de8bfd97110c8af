#include "lf/lattice.hpp"

#include <cmath>
#include <string>

namespace lf {

namespace {

void check_size(std::int32_t size, const char* what) {
    if (size < 4 || !is_pow2(static_cast<std::uint64_t>(size))) {
        throw std::invalid_argument(std::string(what) +
                                    ": size must be a power of two >= 4, got " +
                                    std::to_string(size));
    }
}

}  // namespace

SlopeField::SlopeField(std::int32_t size) : size_(size) {
    check_size(size, "SlopeField");
    std::size_t words = detail::word_count(std::uint64_t{static_cast<std::uint64_t>(size)} * size);
    x_.assign(words, 0);
    y_.assign(words, 0);
}

void SlopeField::set_bit_x(std::int32_t i, std::int32_t j, bool v) {
    std::int64_t idx = index(i, j);
    std::uint64_t mask = std::uint64_t{1} << (idx & 63);
    auto& w = x_[static_cast<std::size_t>(idx >> 6)];
    w = v ? (w | mask) : (w & ~mask);
}

void SlopeField::set_bit_y(std::int32_t i, std::int32_t j, bool v) {
    std::int64_t idx = index(i, j);
    std::uint64_t mask = std::uint64_t{1} << (idx & 63);
    auto& w = y_[static_cast<std::size_t>(idx >> 6)];
    w = v ? (w | mask) : (w & ~mask);
}

std::vector<std::int32_t> SlopeField::row_sums_x() const {
    std::vector<std::int32_t> sums(static_cast<std::size_t>(size_), 0);
    for (std::int32_t j = 0; j < size_; ++j) {
        std::int32_t ones = 0;
        for (std::int32_t i = 0; i < size_; ++i) ones += bit_x(i, j);
        sums[static_cast<std::size_t>(j)] = 2 * ones - size_;
    }
    return sums;
}

std::vector<std::int32_t> SlopeField::col_sums_y() const {
    std::vector<std::int32_t> sums(static_cast<std::size_t>(size_), 0);
    for (std::int32_t j = 0; j < size_; ++j) {
        for (std::int32_t i = 0; i < size_; ++i) {
            sums[static_cast<std::size_t>(i)] += bit_y(i, j) ? 1 : -1;
        }
    }
    return sums;
}

bool SlopeField::closure_holds() const {
    for (auto s : row_sums_x()) {
        if (s != 0) return false;
    }
    for (auto s : col_sums_y()) {
        if (s != 0) return false;
    }
    return true;
}

SlopeField make_flat_slopes(std::int32_t size) {
    SlopeField f(size);
    // Column parity for sigma_x, row parity for sigma_y (1-based counting:
    // odd columns slope up). Alternating signs close both invariants.
    for (std::int32_t j = 0; j < size; ++j) {
        for (std::int32_t i = 0; i < size; ++i) {
            f.set_bit_x(i, j, (i & 1) == 0);
            f.set_bit_y(i, j, (j & 1) == 0);
        }
    }
    return f;
}

OccupancyLattice::OccupancyLattice(std::int32_t size) : size_(size) {
    check_size(size, "OccupancyLattice");
    std::uint64_t n = std::uint64_t{static_cast<std::uint64_t>(size)} * size * size;
    bits_.assign(detail::word_count(n), 0);
}

void OccupancyLattice::set_b(std::int32_t x, std::int32_t y, std::int32_t z, bool v) {
    std::int64_t idx = index(x, y, z);
    std::uint64_t mask = std::uint64_t{1} << (idx & 63);
    auto& w = bits_[static_cast<std::size_t>(idx >> 6)];
    w = v ? (w | mask) : (w & ~mask);
}

std::int64_t OccupancyLattice::count_b() const {
    std::int64_t n = 0;
    for (auto w : bits_) n += std::popcount(w);
    return n;
}

std::array<Coord3, 12> fcc_neighbors(Coord3 p, std::int32_t size) {
    if (!fcc_is_valid(p)) {
        throw std::invalid_argument("fcc_neighbors: site has odd parity");
    }
    std::int32_t mask = size - 1;
    std::array<Coord3, 12> out;
    for (std::size_t k = 0; k < kFccOffsets.size(); ++k) {
        out[k] = {(p[0] + kFccOffsets[k][0]) & mask,
                  (p[1] + kFccOffsets[k][1]) & mask,
                  (p[2] + kFccOffsets[k][2]) & mask};
    }
    return out;
}

OccupancyLattice make_random_alloy(std::int32_t size, double concentration, RngStream& rng) {
    if (!(concentration >= 0.0 && concentration <= 1.0)) {
        throw std::invalid_argument("make_random_alloy: concentration must be in [0,1]");
    }
    OccupancyLattice lat(size);
    auto threshold =
        static_cast<std::uint64_t>(std::llround(concentration * 4294967296.0));
    for (std::int32_t z = 0; z < size; ++z) {
        for (std::int32_t y = 0; y < size; ++y) {
            for (std::int32_t x = (y ^ z) & 1; x < size; x += 2) {
                if (std::uint64_t{rng.next_u32()} < threshold) lat.set_b(x, y, z, true);
            }
        }
    }
    return lat;
}

}  // namespace lf
