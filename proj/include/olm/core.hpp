#pragma once
// Bit-accurate radix-2 online multiplier (reference model).

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "olm/config.hpp"
#include "olm/residual.hpp"
#include "olm/sdnum.hpp"

namespace olm {

/// An algorithm invariant failed: the selection estimate left the domain of
/// the selection function, or the residual outgrew the datapath.
class ResidualBoundError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Output digit for an estimate in multiples of 1/4:
///   +1 on [1/2, 7/4], 0 on [-1/2, 1/4], -1 on [-2, -3/4].
/// Throws ResidualBoundError outside [-2, 7/4] or when t != 2.
SignedDigit selm(Estimate v_hat);

/// One row of the per-cycle trace.
struct CycleRecord {
    int cycle = 0;  // 1-based
    int j = 0;      // iteration index, -delta for the first cycle
    Stage stage = Stage::Init;
    SignedDigit x_in;
    SignedDigit y_in;
    ExactValue v;   // residual after the addition (and chop), before selection
    std::optional<Estimate> v_hat;
    std::optional<SignedDigit> z;
    ExactValue w;   // residual leaving the cycle, w[j+1]
    int retained = 0;         // deepest fractional position kept this cycle
    std::int64_t chopped = 0; // value discarded by the chop, units of 2^-W
};

/// Kept-depth value meaning "no extra slice masking".
inline constexpr int kKeepAll = -1;

class MultiplierState {
public:
    explicit MultiplierState(const MultiplierConfig& cfg);

    const MultiplierConfig& config() const { return cfg_; }
    int j() const { return j_; }
    /// Cycles completed so far.
    int cycle() const { return j_ + cfg_.delta; }
    bool done() const { return cycle() == cfg_.cycles(); }

    /// x[j], y[j] and z[j] in conventional form.
    const OtfcPair& x_reg() const { return x_reg_; }
    const OtfcPair& y_reg() const { return y_reg_; }
    const OtfcPair& z_reg() const { return z_reg_; }
    const ResidualCS& residual() const { return residual_; }
    /// Independently maintained single-word residual (chop losses included).
    ExactValue shadow_residual() const { return ExactValue(shadow_, cfg_.width()); }
    const std::vector<CycleRecord>& trace() const { return trace_; }

private:
    friend std::optional<SignedDigit> step(MultiplierState&, SignedDigit, SignedDigit, int);

    MultiplierConfig cfg_;
    int j_;
    OtfcPair x_reg_;
    OtfcPair y_reg_;
    OtfcPair z_reg_;
    ResidualCS residual_;
    std::int64_t shadow_ = 0;
    std::vector<CycleRecord> trace_;
};

/// Runs one cycle with input digits x_{j+1+δ}, y_{j+1+δ}.
///
/// y's digit is appended first so the second selector term sees y[j+1];
/// x's digit is appended after the addition.  The δ initialization cycles
/// return no digit and skip selection; the last δ cycles take zero inputs and
/// only shift.  In truncated mode positions deeper than p are chopped after
/// the addition; keep_depth, when not kKeepAll, chops further (slice masking).
///
/// Throws std::invalid_argument for nonzero inputs during the last δ cycles,
/// std::logic_error when the multiplication is already complete, and
/// ResidualBoundError on an invariant failure.
std::optional<SignedDigit> step(MultiplierState& state, SignedDigit x_in, SignedDigit y_in,
                                int keep_depth = kKeepAll);

/// residual == 2^j (x[j]·y[j] − z[j]) with the operands read from the OTFC
/// registers.  Holds at every cycle in full mode without masking.
bool scaled_residual_identity_holds(const MultiplierState& state);

struct MultiplyOptions {
    /// Per-cycle kept depth (cycles() entries) or empty.
    std::span<const int> keep_depth;
    /// Check the scaled-residual identity after every cycle (full mode only);
    /// a violation throws std::logic_error.
    bool check_identity = false;
};

struct MultiplyResult {
    SDWord z;
    std::vector<CycleRecord> trace;
};

/// Multiplies two operands of at most n digits over n + δ cycles.
MultiplyResult multiply(const SDWord& x, const SDWord& y, const MultiplierConfig& cfg,
                        const MultiplyOptions& options = {});

}  // namespace olm
