#include <immintrin.h>

#include <cstring>

#include "olm/kernels.hpp"

namespace olm::kernels::detail {

namespace {

inline __m256i load_digits(const std::int8_t* p) {
    std::int32_t packed;
    std::memcpy(&packed, p, sizeof(packed));
    return _mm256_cvtepi8_epi64(_mm_cvtsi32_si128(packed));
}

// digit ∈ {-1,0,1} times v.
inline __m256i digit_times(__m256i digit, __m256i v) {
    const __m256i pos = _mm256_cmpeq_epi64(digit, _mm256_set1_epi64x(1));
    const __m256i neg = _mm256_cmpeq_epi64(digit, _mm256_set1_epi64x(-1));
    const __m256i negv = _mm256_sub_epi64(_mm256_setzero_si256(), v);
    return _mm256_or_si256(_mm256_and_si256(pos, v), _mm256_and_si256(neg, negv));
}

inline __m256i majority(__m256i a, __m256i b, __m256i c) {
    return _mm256_or_si256(_mm256_or_si256(_mm256_and_si256(a, b), _mm256_and_si256(a, c)),
                           _mm256_and_si256(b, c));
}

inline __m256i xor3(__m256i a, __m256i b, __m256i c) { return _mm256_xor_si256(_mm256_xor_si256(a, b), c); }

}  // namespace

void multiply_avx2(const KernelArgs& a) {
    const int cycles = a.n + a.delta;
    const int W = a.width;
    const __m256i mask = _mm256_set1_epi64x(std::int64_t((std::uint64_t(1) << (a.ib + W)) - 1));
    const __m256i est_mask = _mm256_set1_epi64x((std::int64_t(1) << (a.ib + a.t)) - 1);
    const __m256i one = _mm256_set1_epi64x(1);
    const std::int64_t half = std::int64_t(1) << (a.ib + a.t - 1);
    const std::int64_t top = (std::int64_t(1) << (a.ib + a.t)) - 2;
    const __m256i lo_pos = _mm256_set1_epi64x(1);         // e > 1
    const __m256i hi_pos = _mm256_set1_epi64x(half);      // e < half
    const __m256i lo_neg = _mm256_set1_epi64x(half - 1);  // e > half-1
    const __m256i hi_neg = _mm256_set1_epi64x(top);       // e < 2^(ib+t) - 2
    const __m128i est_shift = _mm_cvtsi32_si128(W - a.t);
    const __m128i w_shift = _mm_cvtsi32_si128(W);

    std::size_t lane = a.begin;
    for (; lane + 4 <= a.end; lane += 4) {
        __m256i s = _mm256_setzero_si256(), c = _mm256_setzero_si256();
        __m256i xv = _mm256_setzero_si256(), yv = _mm256_setzero_si256(), zv = _mm256_setzero_si256();
        for (int cyc = 1; cyc <= cycles; ++cyc) {
            s = _mm256_and_si256(_mm256_slli_epi64(s, 1), mask);
            c = _mm256_and_si256(_mm256_slli_epi64(c, 1), mask);
            if (cyc <= a.n) {
                const std::size_t at = std::size_t(cyc - 1) * a.stride + lane;
                const __m256i xi = load_digits(a.x + at);
                const __m256i yi = load_digits(a.y + at);
                const __m128i sh = _mm_cvtsi32_si128(a.n - cyc);
                yv = _mm256_add_epi64(yv, _mm256_sll_epi64(yi, sh));
                const __m256i ta = _mm256_and_si256(digit_times(yi, xv), mask);
                const __m256i tb = _mm256_and_si256(digit_times(xi, yv), mask);
                const __m256i s1 = xor3(s, c, ta);
                const __m256i c1 = _mm256_and_si256(_mm256_slli_epi64(majority(s, c, ta), 1), mask);
                s = _mm256_and_si256(xor3(s1, c1, tb), mask);
                c = _mm256_and_si256(_mm256_slli_epi64(majority(s1, c1, tb), 1), mask);
                xv = _mm256_add_epi64(xv, _mm256_sll_epi64(xi, sh));
            }
            const int keep = a.keep[cyc - 1];
            if (keep < W) {
                const auto low = std::int64_t((std::uint64_t(1) << (W - keep)) - 1);
                const __m256i lowv = _mm256_set1_epi64x(low);
                s = _mm256_andnot_si256(lowv, s);
                c = _mm256_andnot_si256(lowv, c);
            }
            if (cyc > a.delta) {
                const __m256i e = _mm256_and_si256(
                    _mm256_add_epi64(_mm256_srl_epi64(s, est_shift), _mm256_srl_epi64(c, est_shift)), est_mask);
                const __m256i pos = _mm256_and_si256(_mm256_cmpgt_epi64(e, lo_pos), _mm256_cmpgt_epi64(hi_pos, e));
                const __m256i neg = _mm256_and_si256(_mm256_cmpgt_epi64(e, lo_neg), _mm256_cmpgt_epi64(hi_neg, e));
                const __m256i z = _mm256_sub_epi64(_mm256_and_si256(pos, one), _mm256_and_si256(neg, one));
                s = _mm256_and_si256(_mm256_sub_epi64(s, _mm256_sll_epi64(z, w_shift)), mask);
                const int i = cyc - a.delta;
                zv = _mm256_add_epi64(zv, _mm256_sll_epi64(z, _mm_cvtsi32_si128(a.n - i)));
                alignas(32) std::int64_t lanes[4];
                _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), z);
                std::int8_t* out = a.z + std::size_t(i - 1) * a.stride + lane;
                for (int k = 0; k < 4; ++k) out[k] = std::int8_t(lanes[k]);
            }
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(a.z_value + lane), zv);
    }
    if (lane < a.end) {
        KernelArgs tail = a;
        tail.begin = lane;
        multiply_scalar(tail);
    }
}

}  // namespace olm::kernels::detail
