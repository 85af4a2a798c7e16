#pragma once

#include <string_view>

namespace olm {

enum class Mode { Full, Truncated };

std::string_view to_string(Mode m);
/// "full" / "truncated"; throws std::invalid_argument otherwise.
Mode parse_mode(std::string_view s);

/// Largest operand length the 64-bit datapath model supports.
inline constexpr int kMaxDigits = 48;

/// Working precision ⌈(2n + delta + t) / 3⌉.
constexpr int compute_p(int n, int delta, int t) { return (2 * n + delta + t + 2) / 3; }

struct MultiplierConfig {
    int n = 8;          // output digits
    int delta = 3;      // online delay
    int t = 2;          // fractional bits of the selection estimate
    int ib = 2;         // integer bits of the residual datapath
    Mode mode = Mode::Full;
    int p = 11;         // retained fractional residual positions

    /// Fractional width of the residual datapath, the deepest position any
    /// appended term can reach.
    int width() const { return n + delta; }
    int cycles() const { return n + delta; }

    friend bool operator==(const MultiplierConfig&, const MultiplierConfig&) = default;
};

/// Builds a validated configuration.  Only delta = 3, t = 2, ib = 2 are
/// supported by the radix-2 selection function; n must lie in
/// [delta + 1, kMaxDigits].  Throws std::invalid_argument.
MultiplierConfig make_config(int n, Mode mode, int delta = 3, int t = 2, int ib = 2);

enum class Stage { Init, Recurrence, LastDelta };

std::string_view to_string(Stage s);

/// Stage of 1-based cycle c: δ initialization cycles, n−δ recurrence cycles,
/// then δ cycles with zero inputs.
Stage stage_of_cycle(const MultiplierConfig& cfg, int cycle);

}  // namespace olm
