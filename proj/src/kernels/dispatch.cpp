#include <algorithm>
#include <stdexcept>

#include "olm/kernels.hpp"

namespace olm::kernels {

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool available(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return true;
        case Isa::Avx2:
#if defined(OLM_HAVE_AVX2_KERNEL)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

std::vector<Isa> available_isas() {
    std::vector<Isa> v{Isa::Scalar};
    if (available(Isa::Avx2)) v.push_back(Isa::Avx2);
    return v;
}

Isa best_isa() { return available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

DigitPlanes pack(std::span<const OperandPair> pairs, int n) {
    DigitPlanes p;
    p.n = n;
    p.lanes = pairs.size();
    p.x.assign(std::size_t(n) * p.lanes, 0);
    p.y.assign(std::size_t(n) * p.lanes, 0);
    for (std::size_t l = 0; l < p.lanes; ++l) {
        const auto& pr = pairs[l];
        if (pr.x.size() > std::size_t(n) || pr.y.size() > std::size_t(n))
            throw std::invalid_argument("pack: operand longer than n digits");
        for (std::size_t i = 1; i <= std::size_t(n); ++i) {
            p.x[(i - 1) * p.lanes + l] = std::int8_t(pr.x.digit(i).value());
            p.y[(i - 1) * p.lanes + l] = std::int8_t(pr.y.digit(i).value());
        }
    }
    return p;
}

void multiply_batch(Isa isa, const MultiplierConfig& cfg, const DigitPlanes& in, BatchOutput& out,
                    std::span<const int> keep_depth) {
    if (!available(isa)) throw std::invalid_argument("multiply_batch: ISA not available");
    if (in.n != cfg.n) throw std::invalid_argument("multiply_batch: operand width differs from config");
    const int cycles = cfg.cycles();
    if (!keep_depth.empty() && keep_depth.size() != std::size_t(cycles))
        throw std::invalid_argument("multiply_batch: keep_depth needs one entry per cycle");

    std::vector<int> keep(std::size_t(cycles), cfg.mode == Mode::Truncated ? cfg.p : cfg.width());
    for (std::size_t c = 0; c < keep_depth.size(); ++c) keep[c] = std::max(0, std::min(keep[c], keep_depth[c]));

    out.z.assign(std::size_t(cfg.n) * in.lanes, 0);
    out.z_value.assign(in.lanes, 0);
    const detail::KernelArgs args{cfg.n,       cfg.width(), cfg.delta, cfg.t,       cfg.ib,
                                  keep.data(), in.lanes,    0,         in.lanes,    in.x.data(),
                                  in.y.data(), out.z.data(), out.z_value.data()};
    if (isa == Isa::Avx2) {
#if defined(OLM_HAVE_AVX2_KERNEL)
        detail::multiply_avx2(args);
        return;
#endif
    }
    detail::multiply_scalar(args);
}

}  // namespace olm::kernels
