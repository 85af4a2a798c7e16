#include <doctest.h>

#include <random>
#include <stdexcept>

#include "olm/core.hpp"
#include "olm/operand.hpp"
#include "oracle.hpp"

using namespace olm;

TEST_SUITE("core") {

TEST_CASE("selection intervals") {
    CHECK(selm(Estimate{2, 2}).value() == 1);   // 1/2
    CHECK(selm(Estimate{7, 2}).value() == 1);   // 7/4
    CHECK(selm(Estimate{1, 2}).value() == 0);   // 1/4
    CHECK(selm(Estimate{-2, 2}).value() == 0);  // -1/2
    CHECK(selm(Estimate{-3, 2}).value() == -1); // -3/4
    CHECK(selm(Estimate{-8, 2}).value() == -1); // -2
    CHECK_THROWS_AS(selm(Estimate{8, 2}), ResidualBoundError);
    CHECK_THROWS_AS(selm(Estimate{-9, 2}), ResidualBoundError);
    CHECK_THROWS_AS(selm(Estimate{0, 3}), ResidualBoundError);
}

TEST_CASE("zero operands keep a zero residual") {
    for (Mode m : {Mode::Full, Mode::Truncated}) {
        const auto cfg = make_config(8, m);
        MultiplierState st(cfg);
        for (int c = 1; c <= cfg.cycles(); ++c) {
            const auto z = step(st, SignedDigit::zero(), SignedDigit::zero());
            CHECK(z.has_value() == (c > cfg.delta));
            if (z) CHECK(z->value() == 0);
            CHECK(residual_value(st.residual()).is_zero());
        }
        CHECK(st.done());
    }
}

TEST_CASE("one half squared") {
    const auto half = SDWord::from_ints({1, 0, 0, 0, 0, 0, 0, 0});
    for (Mode m : {Mode::Full, Mode::Truncated}) {
        const auto r = multiply(half, half, make_config(8, m));
        REQUIRE(r.z.size() == 8);
        CHECK(oracle::within_bound(half, half, r.z, 8));
    }
}

TEST_CASE("zero multiplicand gives a zero product") {
    const auto y = parse_operand("0.11010011", 8);
    for (Mode m : {Mode::Full, Mode::Truncated})
        CHECK(oracle::scaled(multiply(SDWord::zeros(8), y, make_config(8, m)).z, 8) == 0);
}

TEST_CASE("random products meet the error bound") {
    for (int n : {4, 5, 9, 12, 20, 33, 48})
        for (Mode m : {Mode::Full, Mode::Truncated}) {
            const auto cfg = make_config(n, m);
            for (auto kind : {OperandClass::Conventional, OperandClass::SignedDigit})
                for (const auto& pr : random_pairs(n, 300, std::uint64_t(n), kind))
                    REQUIRE(oracle::within_bound(pr.x, pr.y, multiply(pr.x, pr.y, cfg).z, n));
        }
}

TEST_CASE("full mode keeps the scaled residual identity") {
    const auto cfg = make_config(16, Mode::Full);
    MultiplyOptions opt;
    opt.check_identity = true;
    for (const auto& pr : random_pairs(16, 300, 4, OperandClass::SignedDigit))
        CHECK_NOTHROW(multiply(pr.x, pr.y, cfg, opt));
    CHECK_THROWS_AS(multiply(SDWord::zeros(16), SDWord::zeros(16), make_config(16, Mode::Truncated), opt),
                    std::invalid_argument);
}

TEST_CASE("trace shape") {
    const auto cfg = make_config(8, Mode::Truncated);
    const auto pr = random_pairs(8, 1, 2, OperandClass::SignedDigit).front();
    const auto r = multiply(pr.x, pr.y, cfg);
    REQUIRE(r.trace.size() == 11);
    for (const auto& rec : r.trace) {
        CHECK(rec.j == rec.cycle - 1 - cfg.delta);
        CHECK(rec.v_hat.has_value() == (rec.stage != Stage::Init));
        CHECK(rec.z.has_value() == (rec.stage != Stage::Init));
        CHECK(rec.retained == cfg.p);
        CHECK(rec.chopped >= 0);
        if (rec.v_hat) {
            const auto gap = rec.v - rec.v_hat->value();
            CHECK(gap >= ExactValue());
            CHECK(gap < ExactValue(1, 1));
        }
    }
}

TEST_CASE("multiplication is deterministic") {
    const auto cfg = make_config(24, Mode::Truncated);
    for (const auto& pr : random_pairs(24, 50, 6, OperandClass::SignedDigit)) {
        const auto a = multiply(pr.x, pr.y, cfg);
        const auto b = multiply(pr.x, pr.y, cfg);
        CHECK(a.z == b.z);
    }
}

TEST_CASE("step error paths") {
    const auto cfg = make_config(4, Mode::Full);
    MultiplierState st(cfg);
    for (int c = 1; c <= cfg.n; ++c) step(st, SignedDigit::one(), SignedDigit::one());
    CHECK_THROWS_AS(step(st, SignedDigit::one(), SignedDigit::zero()), std::invalid_argument);
    for (int c = cfg.n + 1; c <= cfg.cycles(); ++c) step(st, SignedDigit::zero(), SignedDigit::zero());
    CHECK_THROWS_AS(step(st, SignedDigit::zero(), SignedDigit::zero()), std::logic_error);

    const std::vector<int> short_mask(3, 4);
    MultiplyOptions opt;
    opt.keep_depth = short_mask;
    CHECK_THROWS_AS(multiply(SDWord::zeros(4), SDWord::zeros(4), cfg, opt), std::invalid_argument);
    CHECK_THROWS_AS(multiply(SDWord::zeros(5), SDWord::zeros(4), cfg), std::invalid_argument);
}

TEST_CASE("a starved datapath trips the invariant checks") {
    // With no fractional slices kept the chops drag the residual below the
    // selection domain; the core must report that instead of wrapping.
    const auto cfg = make_config(12, Mode::Full);
    const std::vector<int> none(std::size_t(cfg.cycles()), 0);
    MultiplyOptions opt;
    opt.keep_depth = none;
    int tripped = 0;
    for (const auto& pr : random_pairs(12, 200, 10, OperandClass::SignedDigit)) {
        try {
            multiply(pr.x, pr.y, cfg, opt);
        } catch (const ResidualBoundError&) {
            ++tripped;
        }
    }
    CHECK(tripped > 0);
}

}  // TEST_SUITE
