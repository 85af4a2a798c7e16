#include "olm/baselines.hpp"

#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace olm {

std::string_view to_string(MultiplierKind k) {
    switch (k) {
        case MultiplierKind::SerialParallel: return "serial-parallel";
        case MultiplierKind::Array: return "array";
        case MultiplierKind::OnlineSequential: return "online";
        case MultiplierKind::OnlinePipelined: return "online-pipelined";
    }
    return "?";
}

long cycle_count(MultiplierKind kind, int n, long k, int delta) {
    if (n < 1 || k < 1) throw std::invalid_argument("cycle_count: n and k must be positive");
    switch (kind) {
        case MultiplierKind::SerialParallel: return (long(n) + 1) * k;
        case MultiplierKind::Array: return long(n) * k;
        case MultiplierKind::OnlineSequential: return (long(n) + delta + 1) * k;
        case MultiplierKind::OnlinePipelined: return (long(n) + delta + 1) + (k - 1);
    }
    throw std::invalid_argument("cycle_count: unknown kind");
}

namespace {

void check_operands(std::uint64_t a, std::uint64_t b, int n) {
    if (n < 1 || n > 62) throw std::invalid_argument("baseline multiply: n must be in [1, 62]");
    if ((a >> n) != 0 || (b >> n) != 0) throw std::invalid_argument("baseline multiply: operand wider than n bits");
}

}  // namespace

BaselineProduct serial_parallel_multiply(std::uint64_t a, std::uint64_t b, int n) {
    check_operands(a, b, n);
    // 2n-bit product register; the upper half accumulates, then both halves
    // shift right together.
    unsigned __int128 acc = 0;
    int cycles = 1;  // load
    for (int i = 0; i < n; ++i, ++cycles) {
        if ((b >> i) & 1u) acc += (unsigned __int128)a << n;
        acc >>= 1;
    }
    return {ExactValue(int128(acc), 2 * n), cycles};
}

BaselineProduct array_multiply(std::uint64_t a, std::uint64_t b, int n) {
    check_operands(a, b, n);
    // Row i adds a·b_i at weight 2^(n-i) (scale 2n); each row is a ripple
    // of full adders over the running sum.
    unsigned __int128 sum = 0;
    for (int i = 1; i <= n; ++i) {
        if (((b >> (n - i)) & 1u) == 0) continue;
        unsigned __int128 row = (unsigned __int128)a << (n - i);
        unsigned __int128 carry = 0;
        unsigned __int128 out = 0;
        for (int bit = 0; bit < 2 * n + 1; ++bit) {
            const unsigned __int128 x = (sum >> bit) & 1u;
            const unsigned __int128 y = (row >> bit) & 1u;
            out |= (x ^ y ^ carry) << bit;
            carry = (x & y) | (x & carry) | (y & carry);
        }
        sum = out;
    }
    return {ExactValue(int128(sum), 2 * n), n};
}

std::vector<CycleTableRow> cycle_table(long k, int delta) {
    struct Spec {
        std::string_view label;
        std::string_view formula;
        MultiplierKind kind;
    };
    static constexpr Spec specs[] = {
        {"Serial-Parallel", "(n+1)*k", MultiplierKind::SerialParallel},
        {"Array", "n*k", MultiplierKind::Array},
        {"Online", "(n+d+1)*k", MultiplierKind::OnlineSequential},
        {"Online (Pipelined)", "(n+d+1)+(k-1)", MultiplierKind::OnlinePipelined},
        {"Proposed", "(n+d+1)+(k-1)", MultiplierKind::OnlinePipelined},
    };
    std::vector<CycleTableRow> rows;
    for (const auto& s : specs) {
        CycleTableRow r{s.label, s.formula, {}};
        for (int n : kCycleTableWidths) r.cycles.push_back(cycle_count(s.kind, n, k, delta));
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_cycle_table_text(std::ostream& os, const std::vector<CycleTableRow>& rows, long k) {
    os << "Clock cycles for k = " << k << " vectors (d = 3)\n";
    os << std::left << std::setw(20) << "Multiplier" << std::setw(16) << "Cycles" << std::right;
    for (int n : kCycleTableWidths) os << std::setw(7) << ("n=" + std::to_string(n));
    os << '\n';
    for (const auto& r : rows) {
        os << std::left << std::setw(20) << r.label << std::setw(16) << r.formula << std::right;
        for (long c : r.cycles) os << std::setw(7) << c;
        os << '\n';
    }
}

void write_cycle_table_csv(std::ostream& os, const std::vector<CycleTableRow>& rows) {
    os << "multiplier,formula";
    for (int n : kCycleTableWidths) os << ",n" << n;
    os << '\n';
    for (const auto& r : rows) {
        os << '"' << r.label << "\"," << r.formula;
        for (long c : r.cycles) os << ',' << c;
        os << '\n';
    }
}

}  // namespace olm
