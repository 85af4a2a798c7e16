#include "olm/pipeline.hpp"

#include <ostream>

#include <json.hpp>

#include "olm/activity.hpp"

namespace olm {

std::string_view to_string(Module m) {
    switch (m) {
        case Module::CaReg: return "CA-REG";
        case Module::Selector: return "SELECTOR";
        case Module::Adder: return "ADDER";
        case Module::V: return "V";
        case Module::M: return "M";
        case Module::Selm: return "SELM";
        case Module::Otfc: return "OTFC";
    }
    return "?";
}

std::string_view to_string(StageTag t) {
    switch (t) {
        case StageTag::Init: return "init";
        case StageTag::Recurrence: return "recurrence";
        case StageTag::LastDelta: return "last_delta";
        case StageTag::OutputReg: return "output_reg";
    }
    return "?";
}

std::vector<StageDescriptor> stage_instantiation(const MultiplierConfig& cfg) {
    using enum Module;
    const ActivityProfile prof = activity_profile(cfg);
    std::vector<StageDescriptor> stages;
    stages.reserve(std::size_t(cfg.cycles()) + 1);
    for (const auto& a : prof.cycles) {
        StageDescriptor d;
        d.index = a.cycle;
        d.slice_positions = a.positions;
        switch (a.stage) {
            case Stage::Init:
                d.tag = StageTag::Init;
                d.modules = {CaReg, Selector, Adder, Otfc};
                break;
            case Stage::Recurrence:
                d.tag = StageTag::Recurrence;
                d.modules = {CaReg, Selector, Adder, V, M, Selm, Otfc};
                break;
            case Stage::LastDelta:
                d.tag = StageTag::LastDelta;
                d.modules = {V, M, Selm, Otfc};
                break;
        }
        stages.push_back(std::move(d));
    }
    StageDescriptor out;
    out.index = cfg.cycles() + 1;
    out.tag = StageTag::OutputReg;
    stages.push_back(std::move(out));
    return stages;
}

PipelineEngine::PipelineEngine(const MultiplierConfig& cfg)
    : cfg_(cfg), stages_(stage_instantiation(cfg)), slots_(stages_.size()) {}

bool PipelineEngine::idle() const {
    for (const auto& s : slots_)
        if (s) return false;
    return true;
}

void PipelineEngine::tick(const std::optional<OperandPair>& input) {
    ++cycle_;
    for (std::size_t i = slots_.size() - 1; i > 0; --i) slots_[i] = std::move(slots_[i - 1]);
    slots_[0].reset();
    if (input) {
        const auto n = std::size_t(cfg_.n);
        slots_[0].emplace(InFlight{next_id_++, input->x.padded(n), input->y.padded(n), MultiplierState(cfg_), {}});
    }

    const std::size_t out_slot = slots_.size() - 1;
    for (std::size_t i = 0; i < slots_.size(); ++i) {
        if (!slots_[i]) continue;
        InFlight& f = *slots_[i];
        const StageDescriptor& st = stages_[i];
        OccupancyRow row{cycle_, st.index, f.id, std::nullopt, int(st.slice_positions.size())};
        if (i == out_slot) {
            completed_.push_back({f.id, SDWord(std::move(f.z)), cycle_});
            slots_[i].reset();
        } else {
            const bool inputs = st.tag == StageTag::Init || st.tag == StageTag::Recurrence;
            const auto c = std::size_t(st.index);
            const SignedDigit xi = inputs ? f.x.digit(c) : SignedDigit::zero();
            const SignedDigit yi = inputs ? f.y.digit(c) : SignedDigit::zero();
            try {
                if (auto d = step(f.state, xi, yi, int(st.slice_positions.size()))) {
                    f.z.push_back(*d);
                    row.z = *d;
                }
            } catch (const ResidualBoundError& e) {
                throw PipelineError(std::string(e.what()) + " (stream " + std::to_string(f.id) + ", cycle " +
                                        std::to_string(cycle_) + ")",
                                    f.id, cycle_);
            }
        }
        occupancy_.push_back(row);
    }
}

PipelineResult pipeline_run(std::span<const OperandPair> pairs, const MultiplierConfig& cfg) {
    PipelineEngine eng(cfg);
    std::size_t fed = 0;
    while (fed < pairs.size() || !eng.idle()) {
        if (fed < pairs.size()) eng.tick(pairs[fed++]);
        else eng.tick(std::nullopt);
    }
    PipelineResult res;
    res.products.resize(pairs.size());
    res.completion_cycle.resize(pairs.size());
    for (const auto& c : eng.completed()) {
        res.products[c.stream_id] = c.product;
        res.completion_cycle[c.stream_id] = c.cycle;
    }
    res.stats.n = cfg.n;
    res.stats.delta = cfg.delta;
    res.stats.k = pairs.size();
    if (!pairs.empty()) {
        res.stats.fill_latency = res.completion_cycle.front();
        res.stats.total_cycles = res.completion_cycle.back();
        res.stats.throughput = double(pairs.size()) / double(res.stats.total_cycles);
    }
    res.trace = pipeline_trace(eng);
    return res;
}

std::vector<OccupancyRow> pipeline_trace(const PipelineEngine& engine) { return engine.occupancy(); }

void write_pipeline_csv(std::ostream& os, std::span<const OccupancyRow> rows) {
    os << "cycle,stage,stream_id,z_digit,active_count\n";
    for (const auto& r : rows) {
        os << r.cycle << ',' << r.stage << ',' << r.stream_id << ',';
        if (r.z) os << r.z->value();
        os << ',' << r.active_count << '\n';
    }
}

void write_pipeline_stats(std::ostream& os, const PipelineStats& stats) {
    nlohmann::ordered_json j;
    j["n"] = stats.n;
    j["delta"] = stats.delta;
    j["k"] = stats.k;
    j["fill_latency"] = stats.fill_latency;
    j["total_cycles"] = stats.total_cycles;
    j["throughput"] = stats.throughput;
    os << j.dump(2) << '\n';
}

}  // namespace olm
