#include "olm/residual.hpp"

#include <stdexcept>

namespace olm {

CarrySave compress42(std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d,
                     std::uint64_t mask) {
    std::uint64_t s1 = a ^ b ^ c;
    std::uint64_t c1 = (((a & b) | (a & c) | (b & c)) << 1) & mask;
    CarrySave out;
    out.sum = (s1 ^ c1 ^ d) & mask;
    out.carry = (((s1 & c1) | (s1 & d) | (c1 & d)) << 1) & mask;
    return out;
}

ResidualCS::ResidualCS(int ib, int frac_bits) : ib_(ib), w_(frac_bits) {
    if (ib < 1 || frac_bits < 0 || ib + frac_bits > 62)
        throw std::invalid_argument("ResidualCS: unsupported width");
    mask_ = (std::uint64_t(1) << (ib + frac_bits)) - 1;
}

ResidualCS ResidualCS::from_values(const ExactValue& s, const ExactValue& c, int ib, int frac_bits) {
    ResidualCS r(ib, frac_bits);
    auto load = [&](const ExactValue& v) {
        if (v.scale() > frac_bits) throw std::invalid_argument("ResidualCS: value finer than 2^-W");
        int128 num = v.numerator_at(frac_bits);
        int128 lim = int128(1) << (ib + frac_bits - 1);
        if (num < -lim || num >= lim) throw std::invalid_argument("ResidualCS: value outside word range");
        return r.from_signed(std::int64_t(num));
    };
    r.s_ = load(s);
    r.c_ = load(c);
    return r;
}

std::int64_t ResidualCS::to_signed(std::uint64_t v) const {
    int bits = ib_ + w_;
    std::uint64_t sign = std::uint64_t(1) << (bits - 1);
    return std::int64_t(v ^ sign) - std::int64_t(sign);
}

void ResidualCS::shift_left() {
    s_ = (s_ << 1) & mask_;
    c_ = (c_ << 1) & mask_;
}

void ResidualCS::add_terms(std::int64_t a, std::int64_t b) {
    CarrySave cs = compress42(s_, c_, from_signed(a), from_signed(b), mask_);
    s_ = cs.sum;
    c_ = cs.carry;
}

std::int64_t ResidualCS::chop_below(int keep) {
    if (keep >= w_) return 0;
    if (keep < 0) keep = 0;
    std::uint64_t low = (std::uint64_t(1) << (w_ - keep)) - 1;
    std::int64_t lost = std::int64_t(s_ & low) + std::int64_t(c_ & low);
    s_ &= ~low;
    c_ &= ~low;
    return lost;
}

void ResidualCS::subtract_integer(int z) {
    s_ = (s_ - (std::uint64_t(std::int64_t(z)) << w_)) & mask_;
}

std::int64_t residual_numerator(const ResidualCS& r) {
    int bits = r.total_bits();
    std::uint64_t mask = (std::uint64_t(1) << bits) - 1;
    std::uint64_t sum = (r.s_bits() + r.c_bits()) & mask;
    std::uint64_t sign = std::uint64_t(1) << (bits - 1);
    return std::int64_t(sum ^ sign) - std::int64_t(sign);
}

ExactValue residual_value(const ResidualCS& r) { return ExactValue(residual_numerator(r), r.frac_bits()); }

Estimate estimate(const ResidualCS& r, int t) {
    if (t > r.frac_bits()) throw std::invalid_argument("estimate: t exceeds residual width");
    int drop = r.frac_bits() - t;
    int bits = r.ib() + t;
    std::uint64_t mask = (std::uint64_t(1) << bits) - 1;
    std::uint64_t sum = ((r.s_bits() >> drop) + (r.c_bits() >> drop)) & mask;
    std::uint64_t sign = std::uint64_t(1) << (bits - 1);
    return Estimate{int(std::int64_t(sum ^ sign) - std::int64_t(sign)), t};
}

}  // namespace olm
