#include "lf/kpz.hpp"

namespace lf {

Counters kpz_sweep_sequential(SlopeField& f, const KpzParams& params, RngStream& rng,
                              int sweeps) {
    params.validate();
    KpzKernel<false> kernel{&f, params};
    const auto L = static_cast<std::uint32_t>(f.size());
    Counters c;
    const std::int64_t attempts = f.sites() * sweeps;
    for (std::int64_t n = 0; n < attempts; ++n) {
        auto i = static_cast<std::int32_t>(rng.next_below(L));
        auto j = static_cast<std::int32_t>(rng.next_below(L));
        c.successes += kernel.attempt({i, j}, rng);
    }
    c.attempts = attempts;
    return c;
}

HeightField reconstruct_heights(const SlopeField& f) {
    const std::int32_t L = f.size();
    HeightField out{L, std::vector<std::int32_t>(static_cast<std::size_t>(f.sites()))};
    auto at = [&](std::int32_t i, std::int32_t j) -> std::int32_t& {
        return out.h[static_cast<std::size_t>(j) * static_cast<std::size_t>(L) +
                     static_cast<std::size_t>(i)];
    };

    at(0, 0) = 0;
    for (std::int32_t i = 1; i < L; ++i) at(i, 0) = at(i - 1, 0) + f.slope_x(i, 0);
    for (std::int32_t i = 0; i < L; ++i) {
        for (std::int32_t j = 1; j < L; ++j) at(i, j) = at(i, j - 1) + f.slope_y(i, j);
    }

    // Path independence: every slope must agree with the reconstructed height
    // differences, including the periodic wrap.
    const std::int32_t mask = L - 1;
    for (std::int32_t j = 0; j < L; ++j) {
        for (std::int32_t i = 0; i < L; ++i) {
            if (at(i, j) - at((i - 1) & mask, j) != f.slope_x(i, j) ||
                at(i, j) - at(i, (j - 1) & mask) != f.slope_y(i, j)) {
                throw std::runtime_error(
                    "reconstruct_heights: slope field violates closure; heights "
                    "would be path-dependent");
            }
        }
    }
    return out;
}

double interface_width(const HeightField& hf) {
    std::int64_t sum = 0, sum2 = 0;
    for (auto v : hf.h) {
        sum += v;
        sum2 += std::int64_t{v} * v;
    }
    const double n = static_cast<double>(hf.h.size());
    const double mean = static_cast<double>(sum) / n;
    return static_cast<double>(sum2) / n - mean * mean;
}

double interface_width(const SlopeField& f) {
    const std::int32_t L = f.size();
    std::vector<std::int32_t> h(static_cast<std::size_t>(L));
    h[0] = 0;
    for (std::int32_t i = 1; i < L; ++i) {
        h[static_cast<std::size_t>(i)] = h[static_cast<std::size_t>(i - 1)] + f.slope_x(i, 0);
    }
    std::int64_t sum = 0, sum2 = 0;
    for (std::int32_t j = 0; j < L; ++j) {
        for (std::int32_t i = 0; i < L; ++i) {
            auto& hi = h[static_cast<std::size_t>(i)];
            if (j > 0) hi += f.slope_y(i, j);
            sum += hi;
            sum2 += std::int64_t{hi} * hi;
        }
    }
    const double n = static_cast<double>(f.sites());
    const double mean = static_cast<double>(sum) / n;
    return static_cast<double>(sum2) / n - mean * mean;
}

}  // namespace lf
