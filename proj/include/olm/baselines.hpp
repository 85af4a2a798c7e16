#pragma once
// Conventional comparison multipliers: cycle formulas and behavioral models.

#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "olm/sdnum.hpp"

namespace olm {

enum class MultiplierKind { SerialParallel, Array, OnlineSequential, OnlinePipelined };

std::string_view to_string(MultiplierKind k);

/// Cycles to multiply k operand pairs of n bits:
///   serial-parallel (n+1)k, array nk, online (n+δ+1)k,
///   pipelined online (n+δ+1)+(k−1).
/// Throws std::invalid_argument for n < 1 or k < 1.
long cycle_count(MultiplierKind kind, int n, long k, int delta = 3);

struct BaselineProduct {
    ExactValue product;
    int cycles = 0;
};

/// Shift-add over the bits of b, least significant first: one load cycle
/// plus n add/shift cycles.  a and b are n-bit unsigned fraction numerators.
BaselineProduct serial_parallel_multiply(std::uint64_t a, std::uint64_t b, int n);

/// Sums the n partial-product rows a·b_i·2^-i through ripple-carry rows in a
/// single combinational pass; accounted as n cycles per vector.
BaselineProduct array_multiply(std::uint64_t a, std::uint64_t b, int n);

/// One row of the cycle-count comparison table.
struct CycleTableRow {
    std::string_view label;
    std::string_view formula;
    std::vector<long> cycles;  // one per n in cycle_table_widths
};

inline constexpr int kCycleTableWidths[] = {8, 16, 24, 32};

/// Serial-parallel, array, online, pipelined online and the truncated
/// pipelined design (same latency as the pipelined row), for k vectors.
std::vector<CycleTableRow> cycle_table(long k, int delta = 3);

void write_cycle_table_text(std::ostream& os, const std::vector<CycleTableRow>& rows, long k);
void write_cycle_table_csv(std::ostream& os, const std::vector<CycleTableRow>& rows);

}  // namespace olm
