#pragma once
// Output-error sweeps against the exact product.

#include <cstdint>
#include <optional>
#include <span>

#include "olm/config.hpp"
#include "olm/kernels.hpp"
#include "olm/operand.hpp"
#include "olm/sdnum.hpp"

namespace olm {

struct ErrorStats {
    int n = 0;
    std::uint64_t pairs = 0;
    std::uint64_t violations = 0;
    int128 max_error = 0;  // max |x·y − z| in units of 2^-2n
    std::optional<OperandPair> worst;

    ExactValue max_error_value() const { return ExactValue(max_error, 2 * n); }
    /// Max error in units of 2^-n.
    double max_error_ulps() const;
    /// Every pair satisfied |x·y − z| ≤ 2^(1−n).
    bool pass() const { return violations == 0; }
};

/// Multiplies every pair on the batch kernel and checks the output bound.
ErrorStats check_products(const MultiplierConfig& cfg, std::span<const OperandPair> pairs,
                          kernels::Isa isa = kernels::best_isa());

/// |x·y − z|·2^(2n) for one pair, from the digit words alone.
int128 product_error(const SDWord& x, const SDWord& y, const SDWord& z, int n);

}  // namespace olm
