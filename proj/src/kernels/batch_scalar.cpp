#include "olm/kernels.hpp"

namespace olm::kernels::detail {

void multiply_scalar(const KernelArgs& a) {
    const int cycles = a.n + a.delta;
    const int W = a.width;
    const std::uint64_t mask = (std::uint64_t(1) << (a.ib + W)) - 1;
    const std::uint64_t est_mask = (std::uint64_t(1) << (a.ib + a.t)) - 1;
    const auto est_half = std::uint64_t(1) << (a.ib + a.t - 1);

    for (std::size_t lane = a.begin; lane < a.end; ++lane) {
        std::uint64_t s = 0, c = 0;
        std::int64_t xv = 0, yv = 0, zv = 0;  // value · 2^n
        for (int cyc = 1; cyc <= cycles; ++cyc) {
            s = (s << 1) & mask;
            c = (c << 1) & mask;
            if (cyc <= a.n) {
                const std::size_t at = std::size_t(cyc - 1) * a.stride + lane;
                const int xi = a.x[at];
                const int yi = a.y[at];
                const int sh = a.n - cyc;
                yv += std::int64_t(yi) * (std::int64_t(1) << sh);
                const auto ta = std::uint64_t(yi * xv) & mask;
                const auto tb = std::uint64_t(xi * yv) & mask;
                const std::uint64_t s1 = s ^ c ^ ta;
                const std::uint64_t c1 = (((s & c) | (s & ta) | (c & ta)) << 1) & mask;
                s = (s1 ^ c1 ^ tb) & mask;
                c = (((s1 & c1) | (s1 & tb) | (c1 & tb)) << 1) & mask;
                xv += std::int64_t(xi) * (std::int64_t(1) << sh);
            }
            const int keep = a.keep[cyc - 1];
            if (keep < W) {
                const std::uint64_t low = (std::uint64_t(1) << (W - keep)) - 1;
                s &= ~low;
                c &= ~low;
            }
            if (cyc > a.delta) {
                const std::uint64_t e = ((s >> (W - a.t)) + (c >> (W - a.t))) & est_mask;
                // Two's complement quarters: [2,7] → +1, [-8,-3] → -1.
                int z = 0;
                if (e >= 2 && e < est_half) z = 1;
                else if (e >= est_half && e < est_mask - 1) z = -1;
                s = (s - (std::uint64_t(std::int64_t(z)) << W)) & mask;
                const int i = cyc - a.delta;
                zv += std::int64_t(z) * (std::int64_t(1) << (a.n - i));
                a.z[std::size_t(i - 1) * a.stride + lane] = std::int8_t(z);
            }
        }
        a.z_value[lane] = zv;
    }
}

}  // namespace olm::kernels::detail
