#pragma once
// Cycle-accurate unrolled pipeline: n+δ compute stages and an output register.

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "olm/config.hpp"
#include "olm/core.hpp"
#include "olm/operand.hpp"

namespace olm {

enum class Module : unsigned {
    CaReg = 1u << 0,     // operand append registers
    Selector = 1u << 1,  // digit-by-vector multiplexers
    Adder = 1u << 2,     // [4:2] carry-save adder
    V = 1u << 3,         // estimate CPA
    M = 1u << 4,         // integer-part digit subtraction
    Selm = 1u << 5,      // output digit selection
    Otfc = 1u << 6,      // on-the-fly conversion
};

std::string_view to_string(Module m);

class ModuleSet {
public:
    constexpr ModuleSet() = default;
    constexpr ModuleSet(std::initializer_list<Module> ms) {
        for (auto m : ms) bits_ |= unsigned(m);
    }
    constexpr bool contains(Module m) const { return (bits_ & unsigned(m)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    friend constexpr bool operator==(ModuleSet, ModuleSet) = default;

private:
    unsigned bits_ = 0;
};

enum class StageTag { Init, Recurrence, LastDelta, OutputReg };

std::string_view to_string(StageTag t);

struct StageDescriptor {
    int index = 0;  // 1-based
    StageTag tag = StageTag::Init;
    ModuleSet modules;
    std::vector<int> slice_positions;
};

/// n+δ+1 stage descriptors; compute stage s performs cycle s of the
/// recurrence with the slices of the activity profile for cfg's mode.
std::vector<StageDescriptor> stage_instantiation(const MultiplierConfig& cfg);

/// A core invariant failed inside the pipeline.
class PipelineError : public std::runtime_error {
public:
    PipelineError(const std::string& what, std::uint64_t stream_id, long cycle)
        : std::runtime_error(what), stream_id_(stream_id), cycle_(cycle) {}
    std::uint64_t stream_id() const { return stream_id_; }
    long cycle() const { return cycle_; }

private:
    std::uint64_t stream_id_;
    long cycle_;
};

/// One occupied stage in one cycle.
struct OccupancyRow {
    long cycle = 0;
    int stage = 0;
    std::uint64_t stream_id = 0;
    std::optional<SignedDigit> z;
    int active_count = 0;
};

struct Completion {
    std::uint64_t stream_id = 0;
    SDWord product;
    long cycle = 0;
};

class PipelineEngine {
public:
    explicit PipelineEngine(const MultiplierConfig& cfg);

    /// Advances one clock.  A present input enters stage 1 this cycle;
    /// std::nullopt injects a bubble.  Throws PipelineError.
    void tick(const std::optional<OperandPair>& input);

    long cycle() const { return cycle_; }
    bool idle() const;
    std::uint64_t accepted() const { return next_id_; }
    const MultiplierConfig& config() const { return cfg_; }
    const std::vector<StageDescriptor>& stages() const { return stages_; }
    const std::vector<Completion>& completed() const { return completed_; }
    const std::vector<OccupancyRow>& occupancy() const { return occupancy_; }

private:
    struct InFlight {
        std::uint64_t id;
        SDWord x;
        SDWord y;
        MultiplierState state;
        std::vector<SignedDigit> z;
    };

    MultiplierConfig cfg_;
    std::vector<StageDescriptor> stages_;
    std::vector<std::optional<InFlight>> slots_;  // slot i holds the element in stage i+1
    std::vector<Completion> completed_;
    std::vector<OccupancyRow> occupancy_;
    long cycle_ = 0;
    std::uint64_t next_id_ = 0;
};

struct PipelineStats {
    int n = 0;
    int delta = 0;
    std::size_t k = 0;
    long fill_latency = 0;  // cycle of the first completion
    long total_cycles = 0;  // cycle of the last completion
    double throughput = 0;  // products per cycle over the whole run
};

struct PipelineResult {
    std::vector<SDWord> products;      // in stream order
    std::vector<long> completion_cycle;
    PipelineStats stats;
    std::vector<OccupancyRow> trace;
};

/// Feeds one pair per cycle, then bubbles until the pipeline drains.
PipelineResult pipeline_run(std::span<const OperandPair> pairs, const MultiplierConfig& cfg);

/// Per-cycle occupancy of everything the engine has run so far.
std::vector<OccupancyRow> pipeline_trace(const PipelineEngine& engine);

/// `cycle,stage,stream_id,z_digit,active_count`
void write_pipeline_csv(std::ostream& os, std::span<const OccupancyRow> rows);
/// JSON object with n, delta, k, fill_latency, total_cycles, throughput.
void write_pipeline_stats(std::ostream& os, const PipelineStats& stats);

}  // namespace olm
