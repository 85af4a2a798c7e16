#pragma once
// Per-cycle active slice positions and slice-cycle totals.
//
// A slice is one fractional position of the residual datapath (1..n+δ).
// Truncated designs activate slices as the appended terms reach deeper and
// retire them once they can no longer influence any remaining selection;
// the full-precision design keeps every slice active in every cycle.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "olm/config.hpp"
#include "olm/operand.hpp"

namespace olm {

struct CycleActivity {
    int cycle = 0;
    Stage stage = Stage::Init;
    std::vector<int> positions;  // ascending, always a prefix 1..count
    int count = 0;
};

struct ActivityProfile {
    MultiplierConfig cfg;
    std::vector<CycleActivity> cycles;

    long total() const;
    int peak() const;
    /// Deepest active position per cycle, usable as MultiplyOptions::keep_depth.
    std::vector<int> keep_depths() const;
};

/// Deepest position any appended or shifted term can occupy after cycle c.
int activation_depth(const MultiplierConfig& cfg, int cycle);

/// Backward cone of influence: per cycle, the deepest position of the
/// residual that can still reach a selection estimate in that cycle or any
/// later one.  Each adder cycle widens the cone by the shift plus the
/// compressor carry reach; shift-only cycles widen it by one.
std::vector<int> retirement_depths(const MultiplierConfig& cfg);

ActivityProfile activity_profile(const MultiplierConfig& cfg);

struct SliceCycleTotals {
    long full_total = 0;
    long truncated_total = 0;
    double ratio = 0.0;
};

/// Totals of the full and truncated profiles for cfg.n.
SliceCycleTotals slice_cycle_totals(const MultiplierConfig& cfg);

struct ProfileMismatch {
    SDWord x;
    SDWord y;
    int first_cycle = 0;  // first cycle whose output digit differs
};

struct ProfileReport {
    std::uint64_t pairs = 0;
    std::uint64_t mismatches = 0;
    std::vector<ProfileMismatch> examples;  // first few only

    bool ok() const { return mismatches == 0; }
};

/// Runs each pair in cfg's mode twice, once as is and once with every slice
/// outside the profile zeroed, and compares the output digits.
ProfileReport verify_profile(const MultiplierConfig& cfg, std::span<const OperandPair> pairs);

/// `cycle,stage,count,positions` with positions joined by ';'.
void write_profile_csv(std::ostream& os, const ActivityProfile& profile);
void write_profile_text(std::ostream& os, const ActivityProfile& profile);

}  // namespace olm
