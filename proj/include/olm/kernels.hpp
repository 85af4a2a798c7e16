#pragma once
// Batched multiply kernels for verification sweeps.
//
// Every lane runs the same datapath as olm::multiply (same [4:2] adder,
// chop and estimate) on its own operand pair.  Operand registers are kept
// as plain two's-complement accumulators instead of OTFC pairs; both hold
// the same value each cycle.  The scalar kernel is the reference; vector
// variants must agree with it bit for bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "olm/config.hpp"
#include "olm/operand.hpp"

namespace olm::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view to_string(Isa isa);
/// Compiled in and supported by the running CPU.
bool available(Isa isa);
std::vector<Isa> available_isas();
Isa best_isa();

/// Operands in digit-major layout: digit c (1-based) of lane l lives at
/// index (c-1)*lanes + l.
struct DigitPlanes {
    int n = 0;
    std::size_t lanes = 0;
    std::vector<std::int8_t> x;
    std::vector<std::int8_t> y;
};

DigitPlanes pack(std::span<const OperandPair> pairs, int n);

struct BatchOutput {
    std::vector<std::int8_t> z;         // digit-major like the inputs
    std::vector<std::int64_t> z_value;  // Σ z_i 2^(n-i) per lane
};

/// keep_depth: optional per-cycle slice mask as in MultiplyOptions.
/// Throws std::invalid_argument when isa is unavailable or shapes mismatch.
void multiply_batch(Isa isa, const MultiplierConfig& cfg, const DigitPlanes& in, BatchOutput& out,
                    std::span<const int> keep_depth = {});

namespace detail {

struct KernelArgs {
    int n;
    int width;       // fractional bits W
    int delta;
    int t;
    int ib;
    const int* keep; // effective kept depth per cycle, n+δ entries
    std::size_t stride;
    std::size_t begin;
    std::size_t end;
    const std::int8_t* x;
    const std::int8_t* y;
    std::int8_t* z;
    std::int64_t* z_value;
};

void multiply_scalar(const KernelArgs& args);
void multiply_avx2(const KernelArgs& args);

}  // namespace detail

}  // namespace olm::kernels
