#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lf/counters.hpp"
#include "lf/lattice.hpp"
#include "lf/rng.hpp"
#include "lf/write_log.hpp"

namespace lf {

/// Kawasaki rates of the octahedron model: p attaches, q detaches.
struct KpzParams {
    double p = 1.0;
    double q = 0.0;

    void validate() const {
        if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
            throw std::invalid_argument("KpzParams: p and q must lie in [0,1]");
        }
        if (p + q <= 0.0) {
            throw std::invalid_argument("KpzParams: p + q must be positive");
        }
    }
    /// Effective KPZ nonlinearity, 2p/(p+q) - 1.
    double lambda_eff() const { return 2.0 * p / (p + q) - 1.0; }
};

enum class KpzOutcome : std::uint8_t { deposited, detached, rejected };

/// Integer heights reconstructed from a slope field, anchored at h(0,0) = 0.
struct HeightField {
    std::int32_t size = 0;
    std::vector<std::int32_t> h;

    std::int32_t at(std::int32_t i, std::int32_t j) const {
        return h[static_cast<std::size_t>(j) * static_cast<std::size_t>(size) +
                 static_cast<std::size_t>(i)];
    }
};

namespace detail {

/// Flip one bit pair of a plane; the pair usually shares a word, in which
/// case a single XOR keeps the mutation one memory op.
template <bool Atomic>
inline void flip_pair(std::uint64_t* words, std::int64_t a, std::int64_t b) {
    std::int64_t wa = a >> 6, wb = b >> 6;
    std::uint64_t ma = std::uint64_t{1} << (a & 63);
    std::uint64_t mb = std::uint64_t{1} << (b & 63);
    if (wa == wb) {
        BitOps<Atomic>::fetch_xor(words[wa], ma | mb);
    } else {
        BitOps<Atomic>::fetch_xor(words[wa], ma);
        BitOps<Atomic>::fetch_xor(words[wb], mb);
    }
}

template <bool Atomic>
inline bool load_bit(const std::uint64_t* words, std::int64_t idx) {
    return (BitOps<Atomic>::load(words[idx >> 6]) >> (idx & 63)) & 1u;
}

/// Core update rule. The 2x2 stencil anchored at (i,j) inspects x-slopes at
/// columns i, i+1 of row j and y-slopes at rows j, j+1 of column i. Pattern
/// (-1,+1;-1,+1) deposits with probability p (all four slopes negate, the
/// local valley rises by 2); the mirrored pattern detaches with probability
/// q. `get_r` is only invoked when a pattern matches.
template <bool Atomic, class RProvider>
inline KpzOutcome kpz_attempt_impl(SlopeField& f, std::int32_t i, std::int32_t j,
                                   const KpzParams& params, RProvider&& get_r,
                                   WriteCtx ctx = {}) {
    const std::int32_t mask = f.size() - 1;
    const std::int32_t i1 = (i + 1) & mask;
    const std::int32_t j1 = (j + 1) & mask;
    const std::int64_t xa = f.index(i, j), xb = f.index(i1, j);
    const std::int64_t ya = f.index(i, j), yb = f.index(i, j1);

    const bool bx0 = load_bit<Atomic>(f.words_x(), xa);
    const bool bx1 = load_bit<Atomic>(f.words_x(), xb);
    const bool by0 = load_bit<Atomic>(f.words_y(), ya);
    const bool by1 = load_bit<Atomic>(f.words_y(), yb);

    KpzOutcome out;
    if (!bx0 && bx1 && !by0 && by1) {
        if (!(get_r() < params.p)) return KpzOutcome::rejected;
        out = KpzOutcome::deposited;
    } else if (bx0 && !bx1 && by0 && !by1) {
        if (!(get_r() < params.q)) return KpzOutcome::rejected;
        out = KpzOutcome::detached;
    } else {
        return KpzOutcome::rejected;
    }

    flip_pair<Atomic>(f.words_x(), xa, xb);
    flip_pair<Atomic>(f.words_y(), ya, yb);
    if (ctx.log) {
        const std::int64_t n = f.sites();
        ctx.record(xa);
        ctx.record(xb);
        ctx.record(n + ya);
        ctx.record(n + yb);
    }
    return out;
}

}  // namespace detail

/// Single update attempt with an externally supplied uniform r in [0,1).
inline KpzOutcome kpz_attempt(SlopeField& f, Coord2 site, const KpzParams& params,
                              double r) {
    return detail::kpz_attempt_impl<false>(f, site[0], site[1], params,
                                           [r] { return r; });
}

/// One Monte Carlo step: L^2 attempts at uniformly random sites.
Counters kpz_sweep_sequential(SlopeField& f, const KpzParams& params, RngStream& rng,
                              int sweeps = 1);

/// Heights from slopes: h(i,0) accumulates sigma_x along row 0, then each
/// column accumulates sigma_y. Throws if the field is not integrable (the
/// result would depend on the path).
HeightField reconstruct_heights(const SlopeField& f);

/// Squared interface width: the variance of the heights over all L^2 sites.
double interface_width(const HeightField& h);

/// Streaming variant that never materializes the height field.
double interface_width(const SlopeField& f);

/// Kernel adapter for the decomposition schedulers.
template <bool Atomic>
struct KpzKernel {
    static constexpr int dims = 2;
    // Stencil reach from the anchor, in sites per axis: nothing below, one above.
    static constexpr int read_lo = 0, read_hi = 1;
    static constexpr int write_lo = 0, write_hi = 1;

    SlopeField* field;
    KpzParams params;

    std::array<std::int32_t, 2> extent() const { return {field->size(), field->size()}; }
    std::int64_t attempts_per_mcs() const { return field->sites(); }
    std::int64_t box_attempts(std::array<std::int32_t, 2> ext) const {
        return std::int64_t{ext[0]} * ext[1];
    }
    Coord2 draw_site(Coord2 lo, Coord2 ext, RngStream& rng) const {
        const std::int32_t mask = field->size() - 1;
        return {(lo[0] + static_cast<std::int32_t>(rng.next_below(
                             static_cast<std::uint32_t>(ext[0])))) &
                    mask,
                (lo[1] + static_cast<std::int32_t>(rng.next_below(
                             static_cast<std::uint32_t>(ext[1])))) &
                    mask};
    }
    bool attempt(Coord2 site, RngStream& rng, WriteCtx ctx = {}) const {
        return detail::kpz_attempt_impl<Atomic>(*field, site[0], site[1], params,
                                                [&rng] { return rng.next_real(); },
                                                ctx) != KpzOutcome::rejected;
    }
};

}  // namespace lf
