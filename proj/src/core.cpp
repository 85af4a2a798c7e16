#include "olm/core.hpp"

#include <algorithm>
#include <string>

namespace olm {

SignedDigit selm(Estimate v_hat) {
    if (v_hat.t != 2) throw ResidualBoundError("selm: estimate must have t = 2 fractional bits");
    const int q = v_hat.units;  // quarters
    if (q < -8 || q > 7)
        throw ResidualBoundError("selm: estimate " + v_hat.value().to_decimal() + " outside [-2, 7/4]");
    if (q >= 2) return SignedDigit::one();
    if (q >= -2) return SignedDigit::zero();
    return SignedDigit::minus_one();
}

MultiplierState::MultiplierState(const MultiplierConfig& cfg)
    : cfg_(cfg), j_(-cfg.delta), residual_(cfg.ib, cfg.width()) {
    trace_.reserve(std::size_t(cfg.cycles()));
}

std::optional<SignedDigit> step(MultiplierState& st, SignedDigit x_in, SignedDigit y_in, int keep_depth) {
    const MultiplierConfig& cfg = st.cfg_;
    const int c = st.cycle() + 1;
    if (c > cfg.cycles()) throw std::logic_error("step: multiplication already complete");
    const Stage stage = stage_of_cycle(cfg, c);
    const int W = cfg.width();

    CycleRecord rec;
    rec.cycle = c;
    rec.j = st.j_;
    rec.stage = stage;
    rec.x_in = x_in;
    rec.y_in = y_in;

    st.y_reg_ = otfc_update(st.y_reg_, y_in);  // y[j+1]
    if (stage == Stage::LastDelta) {
        if (x_in.value() != 0 || y_in.value() != 0)
            throw std::invalid_argument("step: input digits must be zero in the last delta cycles");
        st.residual_.shift_left();
        st.shadow_ *= 2;
    } else {
        // x[j] holds c-1 digits, y[j+1] holds c; both terms carry the 2^-δ shift.
        const auto xq = std::int64_t(st.x_reg_.q_numerator());
        const auto yq = std::int64_t(st.y_reg_.q_numerator());
        const std::int64_t a = y_in.value() * (xq << (W - (c - 1) - cfg.delta));
        const std::int64_t b = x_in.value() * (yq << (W - c - cfg.delta));
        st.residual_.shift_left();
        st.residual_.add_terms(a, b);
        st.shadow_ = 2 * st.shadow_ + a + b;
    }
    st.x_reg_ = otfc_update(st.x_reg_, x_in);  // x[j+1]

    int keep = cfg.mode == Mode::Truncated ? cfg.p : W;
    if (keep_depth != kKeepAll) keep = std::min(keep, keep_depth);
    rec.retained = std::clamp(keep, 0, W);
    rec.chopped = st.residual_.chop_below(keep);
    st.shadow_ -= rec.chopped;

    if (residual_numerator(st.residual_) != st.shadow_)
        throw ResidualBoundError("step: residual " + ExactValue(st.shadow_, W).to_decimal() +
                                 " overflowed the datapath at cycle " + std::to_string(c));
    rec.v = ExactValue(st.shadow_, W);

    std::optional<SignedDigit> out;
    if (stage != Stage::Init) {
        const Estimate e = estimate(st.residual_, cfg.t);
        const std::int64_t gap = st.shadow_ - (std::int64_t(e.units) << (W - cfg.t));
        if (gap < 0 || gap >= (std::int64_t(2) << (W - cfg.t)))
            throw ResidualBoundError("step: estimate " + e.value().to_decimal() + " too far from residual " +
                                     rec.v.to_decimal() + " at cycle " + std::to_string(c));
        const SignedDigit z = selm(e);
        st.residual_.subtract_integer(z.value());
        st.shadow_ -= std::int64_t(z.value()) << W;
        st.z_reg_ = otfc_update(st.z_reg_, z);
        rec.v_hat = e;
        rec.z = z;
        out = z;
    }
    rec.w = ExactValue(st.shadow_, W);
    st.trace_.push_back(std::move(rec));
    ++st.j_;
    return out;
}

bool scaled_residual_identity_holds(const MultiplierState& st) {
    const ExactValue rhs = (st.x_reg().q() * st.y_reg().q() - st.z_reg().q()).shifted(st.j());
    return residual_value(st.residual()) == rhs;
}

MultiplyResult multiply(const SDWord& x, const SDWord& y, const MultiplierConfig& cfg,
                        const MultiplyOptions& options) {
    const auto n = std::size_t(cfg.n);
    const SDWord xp = x.padded(n);
    const SDWord yp = y.padded(n);
    if (!options.keep_depth.empty() && options.keep_depth.size() != std::size_t(cfg.cycles()))
        throw std::invalid_argument("multiply: keep_depth needs one entry per cycle");
    if (options.check_identity && (cfg.mode != Mode::Full || !options.keep_depth.empty()))
        throw std::invalid_argument("multiply: the scaled-residual identity is exact only in full mode");

    MultiplierState st(cfg);
    std::vector<SignedDigit> z;
    z.reserve(n);
    for (int c = 1; c <= cfg.cycles(); ++c) {
        const auto i = std::size_t(c);
        const SignedDigit xi = c <= cfg.n ? xp.digit(i) : SignedDigit::zero();
        const SignedDigit yi = c <= cfg.n ? yp.digit(i) : SignedDigit::zero();
        const int keep = options.keep_depth.empty() ? kKeepAll : options.keep_depth[i - 1];
        if (auto d = step(st, xi, yi, keep)) z.push_back(*d);
        if (options.check_identity && !scaled_residual_identity_holds(st))
            throw std::logic_error("multiply: scaled residual identity violated at cycle " + std::to_string(c));
    }
    return MultiplyResult{SDWord(std::move(z)), st.trace()};
}

}  // namespace olm
