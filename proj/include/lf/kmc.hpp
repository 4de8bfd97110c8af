#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "lf/counters.hpp"
#include "lf/lattice.hpp"
#include "lf/rng.hpp"
#include "lf/write_log.hpp"

namespace lf {

enum class ActiveMode : std::uint8_t { b_only, both };

/// Metropolis exchange dynamics parameters. The effective jump frequency is
/// identically 1; eps is the dimensionless effective temperature.
struct KmcParams {
    double eps = 1.5;
    ActiveMode active_mode = ActiveMode::b_only;

    static constexpr double gamma = 1.0;

    void validate() const {
        if (!(eps >= 0.0)) throw std::invalid_argument("KmcParams: eps must be >= 0");
    }
};

enum class KmcOutcome : std::uint8_t { exchanged, rejected_species, rejected_prob };

/// Metropolis transition probability: 1 when the destination has at least as
/// many B neighbors, exp(-(n_i - n_f) * eps) otherwise.
inline double metropolis_prob(int n_i, int n_f, const KmcParams& params) {
    if (n_i < 0 || n_i > 12 || n_f < 0 || n_f > 12) {
        throw std::invalid_argument("metropolis_prob: neighbor counts must be in [0,12]");
    }
    if (n_f >= n_i) return KmcParams::gamma;
    return KmcParams::gamma * std::exp(-(n_i - n_f) * params.eps);
}

namespace detail {

template <bool Atomic>
inline bool occ_bit(const OccupancyLattice& lat, std::int32_t x, std::int32_t y,
                    std::int32_t z) {
    std::int64_t idx = lat.index(x, y, z);
    return (BitOps<Atomic>::load(lat.words()[idx >> 6]) >> (idx & 63)) & 1u;
}

/// B-occupied count among the 12 neighbors of p, excluding `excl`.
template <bool Atomic>
inline int b_neighbors_excluding(const OccupancyLattice& lat, Coord3 p, Coord3 excl) {
    const std::int32_t mask = lat.size() - 1;
    int n = 0;
    for (const auto& d : kFccOffsets) {
        const std::int32_t x = (p[0] + d[0]) & mask;
        const std::int32_t y = (p[1] + d[1]) & mask;
        const std::int32_t z = (p[2] + d[2]) & mask;
        if (x == excl[0] && y == excl[1] && z == excl[2]) continue;
        n += occ_bit<Atomic>(lat, x, y, z);
    }
    return n;
}

}  // namespace detail

/// Acceptance probability for swapping the B particle at b_pos with the A at
/// a_pos. Neighbor counts exclude the exchange partner on both sides, which
/// makes the forward/backward ratio exactly exp(-(n_i - n_f) * eps).
template <bool Atomic = false>
inline double exchange_probability(const OccupancyLattice& lat, Coord3 b_pos,
                                   Coord3 a_pos, const KmcParams& params) {
    const int n_i = detail::b_neighbors_excluding<Atomic>(lat, b_pos, a_pos);
    const int n_f = detail::b_neighbors_excluding<Atomic>(lat, a_pos, b_pos);
    return metropolis_prob(n_i, n_f, params);
}

namespace detail {

template <bool Atomic>
inline KmcOutcome kmc_attempt_impl(OccupancyLattice& lat, Coord3 site,
                                   const KmcParams& params, RngStream& rng,
                                   WriteCtx ctx = {}) {
    const std::int32_t mask = lat.size() - 1;
    const bool here_b = occ_bit<Atomic>(lat, site[0], site[1], site[2]);
    if (!here_b && params.active_mode == ActiveMode::b_only) {
        return KmcOutcome::rejected_species;
    }
    const auto& d = kFccOffsets[rng.next_below(12)];
    const Coord3 partner{(site[0] + d[0]) & mask, (site[1] + d[1]) & mask,
                         (site[2] + d[2]) & mask};
    const bool partner_b = occ_bit<Atomic>(lat, partner[0], partner[1], partner[2]);
    if (partner_b == here_b) return KmcOutcome::rejected_species;

    // When the attempt starts on the A site (both-active mode) the roles of
    // initial and final site are reversed; the rate is always evaluated from
    // the B particle's perspective.
    const Coord3 b_pos = here_b ? site : partner;
    const Coord3 a_pos = here_b ? partner : site;
    const double w = exchange_probability<Atomic>(lat, b_pos, a_pos, params);
    if (w < 1.0 && !(rng.next_real() < w)) return KmcOutcome::rejected_prob;

    const std::int64_t ib = lat.index(b_pos[0], b_pos[1], b_pos[2]);
    const std::int64_t ia = lat.index(a_pos[0], a_pos[1], a_pos[2]);
    BitOps<Atomic>::fetch_xor(lat.words()[ib >> 6], std::uint64_t{1} << (ib & 63));
    BitOps<Atomic>::fetch_xor(lat.words()[ia >> 6], std::uint64_t{1} << (ia & 63));
    if (ctx.log) {
        ctx.record(ib);
        ctx.record(ia);
    }
    return KmcOutcome::exchanged;
}

}  // namespace detail

/// One exchange attempt at `site` (must be fcc-valid): pick one of the twelve
/// neighbors uniformly, reject same-species pairs, otherwise swap with the
/// Metropolis probability.
inline KmcOutcome kmc_attempt(OccupancyLattice& lat, Coord3 site, const KmcParams& params,
                              RngStream& rng) {
    if (!fcc_is_valid(site)) {
        throw std::invalid_argument("kmc_attempt: site has odd parity");
    }
    return detail::kmc_attempt_impl<false>(lat, site, params, rng);
}

/// One Monte Carlo step: L^3/2 attempts at uniformly random valid sites.
Counters kmc_mcs_sequential(OccupancyLattice& lat, const KmcParams& params,
                            RngStream& rng, int steps = 1);

/// Mean number of A-occupied nearest neighbors per B particle; proportional
/// to the internal energy. Requires at least one B particle.
double open_bonds_per_particle(const OccupancyLattice& lat);

/// Kernel adapter for the decomposition schedulers.
template <bool Atomic>
struct KmcKernel {
    static constexpr int dims = 3;
    // Reads reach the neighbors of the exchange partner; writes touch the pair.
    static constexpr int read_lo = 2, read_hi = 2;
    static constexpr int write_lo = 1, write_hi = 1;

    OccupancyLattice* lattice;
    KmcParams params;

    std::array<std::int32_t, 3> extent() const {
        return {lattice->size(), lattice->size(), lattice->size()};
    }
    std::int64_t attempts_per_mcs() const { return lattice->valid_sites(); }
    std::int64_t box_attempts(std::array<std::int32_t, 3> ext) const {
        return std::int64_t{ext[0]} * ext[1] * ext[2] / 2;
    }
    /// Uniform draw over the fcc-valid sites of a (possibly wrapping) box.
    Coord3 draw_site(Coord3 lo, Coord3 ext, RngStream& rng) const {
        const std::int32_t mask = lattice->size() - 1;
        const std::int32_t x = (lo[0] + static_cast<std::int32_t>(rng.next_below(
                                            static_cast<std::uint32_t>(ext[0])))) &
                               mask;
        const std::int32_t y = (lo[1] + static_cast<std::int32_t>(rng.next_below(
                                            static_cast<std::uint32_t>(ext[1])))) &
                               mask;
        // z must satisfy z = x^y (mod 2); wrapping by a power of two keeps parity.
        const std::int32_t t = (x ^ y) & 1;
        const std::int32_t zfirst = lo[2] + (((lo[2] & 1) == t) ? 0 : 1);
        const std::int32_t nz = (ext[2] + (((lo[2] & 1) == t) ? 1 : 0)) / 2;
        const std::int32_t z =
            (zfirst + 2 * static_cast<std::int32_t>(
                             rng.next_below(static_cast<std::uint32_t>(nz)))) &
            mask;
        return {x, y, z};
    }
    bool attempt(Coord3 site, RngStream& rng, WriteCtx ctx = {}) const {
        return detail::kmc_attempt_impl<Atomic>(*lattice, site, params, rng, ctx) ==
               KmcOutcome::exchanged;
    }
};

}  // namespace lf
