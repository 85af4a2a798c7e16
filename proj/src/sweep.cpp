#include "olm/sweep.hpp"

#include <algorithm>
#include <cmath>

namespace olm {

namespace {

constexpr std::size_t kChunk = 4096;

int128 abs128(int128 v) { return v < 0 ? -v : v; }

}  // namespace

double ErrorStats::max_error_ulps() const { return std::ldexp(double(max_error), -n); }

int128 product_error(const SDWord& x, const SDWord& y, const SDWord& z, int n) {
    const auto un = std::size_t(n);
    return abs128(x.scaled_value(un) * y.scaled_value(un) - (z.scaled_value(un) << n));
}

ErrorStats check_products(const MultiplierConfig& cfg, std::span<const OperandPair> pairs, kernels::Isa isa) {
    ErrorStats st;
    st.n = cfg.n;
    const auto un = std::size_t(cfg.n);
    const int128 bound = int128(1) << (cfg.n + 1);
    kernels::BatchOutput out;
    for (std::size_t base = 0; base < pairs.size(); base += kChunk) {
        const auto chunk = pairs.subspan(base, std::min(kChunk, pairs.size() - base));
        const kernels::DigitPlanes planes = kernels::pack(chunk, cfg.n);
        kernels::multiply_batch(isa, cfg, planes, out);
        for (std::size_t l = 0; l < chunk.size(); ++l) {
            const int128 xy = chunk[l].x.scaled_value(un) * chunk[l].y.scaled_value(un);
            const int128 err = abs128(xy - (int128(out.z_value[l]) << cfg.n));
            ++st.pairs;
            if (err > bound) ++st.violations;
            if (err > st.max_error || !st.worst) {
                st.max_error = std::max(st.max_error, err);
                if (err == st.max_error) st.worst = chunk[l];
            }
        }
    }
    return st;
}

}  // namespace olm
