#include "lf/kmc.hpp"

namespace lf {

Counters kmc_mcs_sequential(OccupancyLattice& lat, const KmcParams& params,
                            RngStream& rng, int steps) {
    params.validate();
    KmcKernel<false> kernel{&lat, params};
    const Coord3 lo{0, 0, 0};
    const Coord3 ext{lat.size(), lat.size(), lat.size()};
    Counters c;
    const std::int64_t attempts = lat.valid_sites() * steps;
    for (std::int64_t n = 0; n < attempts; ++n) {
        c.successes += kernel.attempt(kernel.draw_site(lo, ext, rng), rng);
    }
    c.attempts = attempts;
    return c;
}

double open_bonds_per_particle(const OccupancyLattice& lat) {
    const std::int32_t L = lat.size();
    const std::int32_t mask = L - 1;
    std::int64_t particles = 0, open = 0;
    for (std::int32_t z = 0; z < L; ++z) {
        for (std::int32_t y = 0; y < L; ++y) {
            for (std::int32_t x = (y ^ z) & 1; x < L; x += 2) {
                if (!lat.is_b(x, y, z)) continue;
                ++particles;
                for (const auto& d : kFccOffsets) {
                    open += !lat.is_b((x + d[0]) & mask, (y + d[1]) & mask,
                                      (z + d[2]) & mask);
                }
            }
        }
    }
    if (particles == 0) {
        throw std::domain_error("open_bonds_per_particle: no B particles in lattice");
    }
    return static_cast<double>(open) / static_cast<double>(particles);
}

}  // namespace lf
