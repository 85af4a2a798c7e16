#include "olm/activity.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "olm/core.hpp"
#include "olm/residual.hpp"

namespace olm {

namespace {

constexpr std::size_t kMaxReportedMismatches = 8;

}  // namespace

long ActivityProfile::total() const {
    long s = 0;
    for (const auto& c : cycles) s += c.count;
    return s;
}

int ActivityProfile::peak() const {
    int m = 0;
    for (const auto& c : cycles) m = std::max(m, c.count);
    return m;
}

std::vector<int> ActivityProfile::keep_depths() const {
    std::vector<int> d;
    d.reserve(cycles.size());
    for (const auto& c : cycles) d.push_back(c.count);
    return d;
}

int activation_depth(const MultiplierConfig& cfg, int cycle) {
    // y[j+1]·x_{j+1+δ}·2^-δ has its last digit at position cycle + δ.
    return std::min(cfg.width(), cycle + cfg.delta);
}

std::vector<int> retirement_depths(const MultiplierConfig& cfg) {
    const int cycles = cfg.cycles();
    std::vector<int> needed(std::size_t(cycles) + 1, 0);
    int after = -1;  // depth needed after the last cycle: none
    for (int c = cycles; c >= 1; --c) {
        const Stage s = stage_of_cycle(cfg, c);
        const int here = s == Stage::Init ? after : std::max(cfg.t, after);
        needed[std::size_t(c)] = std::min(here, cfg.width());
        const int reach = s == Stage::LastDelta ? 1 : 1 + kCompressorCarryReach;
        after = here < 0 ? -1 : here + reach;
    }
    needed.erase(needed.begin());
    return needed;
}

ActivityProfile activity_profile(const MultiplierConfig& cfg) {
    ActivityProfile prof;
    prof.cfg = cfg;
    const auto retire = retirement_depths(cfg);
    for (int c = 1; c <= cfg.cycles(); ++c) {
        CycleActivity a;
        a.cycle = c;
        a.stage = stage_of_cycle(cfg, c);
        if (cfg.mode == Mode::Full) {
            a.count = cfg.width();
        } else {
            a.count = std::min({activation_depth(cfg, c), cfg.p, retire[std::size_t(c - 1)]});
            a.count = std::max(a.count, 0);
        }
        a.positions.resize(std::size_t(a.count));
        for (int i = 0; i < a.count; ++i) a.positions[std::size_t(i)] = i + 1;
        prof.cycles.push_back(std::move(a));
    }
    return prof;
}

SliceCycleTotals slice_cycle_totals(const MultiplierConfig& cfg) {
    SliceCycleTotals t;
    t.full_total = activity_profile(make_config(cfg.n, Mode::Full)).total();
    t.truncated_total = activity_profile(make_config(cfg.n, Mode::Truncated)).total();
    t.ratio = double(t.truncated_total) / double(t.full_total);
    return t;
}

ProfileReport verify_profile(const MultiplierConfig& cfg, std::span<const OperandPair> pairs) {
    const auto keep = activity_profile(cfg).keep_depths();
    ProfileReport rep;
    for (const auto& pr : pairs) {
        const auto ref = multiply(pr.x, pr.y, cfg);
        MultiplyOptions opts;
        opts.keep_depth = keep;
        const auto masked = multiply(pr.x, pr.y, cfg, opts);
        ++rep.pairs;
        if (ref.z == masked.z) continue;
        ++rep.mismatches;
        if (rep.examples.size() < kMaxReportedMismatches) {
            int first = 0;
            for (std::size_t i = 0; i < ref.trace.size(); ++i) {
                if (ref.trace[i].z != masked.trace[i].z) {
                    first = ref.trace[i].cycle;
                    break;
                }
            }
            rep.examples.push_back({pr.x, pr.y, first});
        }
    }
    return rep;
}

void write_profile_csv(std::ostream& os, const ActivityProfile& profile) {
    os << "cycle,stage,count,positions\n";
    for (const auto& c : profile.cycles) {
        os << c.cycle << ',' << to_string(c.stage) << ',' << c.count << ',';
        for (std::size_t i = 0; i < c.positions.size(); ++i) os << (i ? ";" : "") << c.positions[i];
        os << '\n';
    }
}

void write_profile_text(std::ostream& os, const ActivityProfile& profile) {
    const int width = profile.cfg.width();
    os << "cycle  stage        count  slices 1.." << width << '\n';
    for (const auto& c : profile.cycles) {
        os << std::setw(5) << c.cycle << "  " << std::left << std::setw(11) << to_string(c.stage) << std::right
           << "  " << std::setw(5) << c.count << "  ";
        for (int i = 1; i <= width; ++i) os << (i <= c.count ? '#' : '.');
        os << '\n';
    }
}

}  // namespace olm
