#include "olm/config.hpp"

#include <stdexcept>
#include <string>

namespace olm {

std::string_view to_string(Mode m) { return m == Mode::Full ? "full" : "truncated"; }

Mode parse_mode(std::string_view s) {
    if (s == "full") return Mode::Full;
    if (s == "truncated") return Mode::Truncated;
    throw std::invalid_argument("unknown mode: " + std::string(s));
}

MultiplierConfig make_config(int n, Mode mode, int delta, int t, int ib) {
    if (delta != 3 || t != 2 || ib != 2)
        throw std::invalid_argument("make_config: only delta=3, t=2, ib=2 are supported");
    if (n < delta + 1 || n > kMaxDigits)
        throw std::invalid_argument("make_config: n must be in [" + std::to_string(delta + 1) + ", " +
                                    std::to_string(kMaxDigits) + "], got " + std::to_string(n));
    MultiplierConfig cfg;
    cfg.n = n;
    cfg.delta = delta;
    cfg.t = t;
    cfg.ib = ib;
    cfg.mode = mode;
    cfg.p = mode == Mode::Truncated ? compute_p(n, delta, t) : n + delta;
    return cfg;
}

std::string_view to_string(Stage s) {
    switch (s) {
        case Stage::Init: return "init";
        case Stage::Recurrence: return "recurrence";
        case Stage::LastDelta: return "last_delta";
    }
    return "?";
}

Stage stage_of_cycle(const MultiplierConfig& cfg, int cycle) {
    if (cycle < 1 || cycle > cfg.cycles()) throw std::out_of_range("stage_of_cycle: cycle out of range");
    if (cycle <= cfg.delta) return Stage::Init;
    if (cycle <= cfg.n) return Stage::Recurrence;
    return Stage::LastDelta;
}

}  // namespace olm
