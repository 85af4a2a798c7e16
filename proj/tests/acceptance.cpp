// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.  All tolerances are exact (zero), pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "olm/activity.hpp"
#include "olm/baselines.hpp"
#include "olm/core.hpp"
#include "olm/pipeline.hpp"
#include "olm/sweep.hpp"
#include "oracle.hpp"

using namespace olm;

namespace {

// Pinned tolerances and sizes.
constexpr std::uint64_t kAllowedViolations = 0;
constexpr std::uint64_t kAllowedMismatches = 0;
constexpr std::size_t kRandomPairs = 100000;   // per n, per mode, per operand class
constexpr std::size_t kProfileRandom = 10000;
constexpr std::size_t kOtfcSequences = 10000;
constexpr int kOtfcMaxLength = 64;
constexpr std::uint64_t kSeed = 20240611;

struct Verdict {
    bool pass = false;
    std::string detail;
};

std::string pct(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

Verdict exhaustive_n8() {
    const auto pairs = exhaustive_pairs(8);
    std::ostringstream d;
    bool ok = pairs.size() == 65536;
    for (Mode m : {Mode::Full, Mode::Truncated}) {
        const auto cfg = make_config(8, m);
        const ErrorStats st = check_products(cfg, pairs);
        // Cross-check the batch kernel's verdict with the independent oracle.
        const auto worst = st.worst;
        ok = ok && st.violations == kAllowedViolations && st.pairs == 65536;
        ok = ok && worst && oracle::product_error(worst->x, worst->y, multiply(worst->x, worst->y, cfg).z, 8) == st.max_error;
        d << to_string(m) << " max=" << st.max_error_value().to_string() << " ";
    }
    d << "bound=2^-7";
    return {ok, d.str()};
}

Verdict random_wide() {
    bool ok = true;
    std::ostringstream d;
    for (int n : {16, 24, 32})
        for (Mode m : {Mode::Full, Mode::Truncated}) {
            const auto cfg = make_config(n, m);
            double worst = 0;
            for (auto kind : {OperandClass::Conventional, OperandClass::SignedDigit}) {
                const auto pairs = random_pairs(n, kRandomPairs, kSeed + std::uint64_t(n), kind);
                const ErrorStats st = check_products(cfg, pairs);
                ok = ok && st.violations == kAllowedViolations && st.pairs == kRandomPairs;
                worst = std::max(worst, st.max_error_ulps());
                // Oracle spot check on the reference core.
                for (std::size_t i = 0; i < pairs.size(); i += 997)
                    ok = ok && oracle::within_bound(pairs[i].x, pairs[i].y,
                                                    multiply(pairs[i].x, pairs[i].y, cfg).z, n);
            }
            d << "n=" << n << "/" << to_string(m) << ":" << pct(worst) << "ulp ";
        }
    d << "(" << 2 * kRandomPairs << " pairs each, bound 2 ulp)";
    return {ok, d.str()};
}

Verdict working_precision() {
    const int expect[][2] = {{8, 7}, {16, 13}, {24, 18}, {32, 23}};
    bool ok = true;
    std::ostringstream d;
    for (auto [n, p] : expect) {
        const int got = compute_p(n, 3, 2);
        ok = ok && got == p && got == oracle::working_precision(n, 3, 2) && make_config(n, Mode::Truncated).p == p;
        d << "n=" << n << ":p=" << got << " ";
    }
    return {ok, d.str()};
}

Verdict cycle_table_k8() {
    std::ostringstream out, err;
    const int code = cli::run({"table3", "--k", "8", "--format", "csv"}, out, err);
    const std::vector<std::string> expect = {
        "multiplier,formula,n8,n16,n24,n32",
        "\"Serial-Parallel\",(n+1)*k,72,136,200,264",
        "\"Array\",n*k,64,128,192,256",
        "\"Online\",(n+d+1)*k,96,160,224,288",
        "\"Online (Pipelined)\",(n+d+1)+(k-1),19,27,35,43",
        "\"Proposed\",(n+d+1)+(k-1),19,27,35,43",
    };
    std::vector<std::string> got;
    std::istringstream in(out.str());
    for (std::string l; std::getline(in, l);) got.push_back(l);
    const bool ok = code == 0 && got == expect;
    return {ok, ok ? "20 cells exact" : "table differs:\n" + out.str()};
}

Verdict pipeline_equivalence() {
    bool ok = true;
    std::ostringstream d;
    constexpr std::size_t k = 8;
    for (int n : {8, 16, 24, 32})
        for (Mode m : {Mode::Full, Mode::Truncated}) {
            const auto cfg = make_config(n, m);
            const auto pairs = random_pairs(n, k, kSeed + 5 * std::uint64_t(n), OperandClass::Conventional);
            const auto res = pipeline_run(pairs, cfg);
            for (std::size_t i = 0; i < k; ++i) ok = ok && res.products[i] == multiply(pairs[i].x, pairs[i].y, cfg).z;
            ok = ok && res.stats.fill_latency == n + 3 + 1 && res.stats.total_cycles == long(n + 3 + 1 + k - 1);
            if (m == Mode::Truncated) d << "n=" << n << ":" << res.stats.fill_latency << "/" << res.stats.total_cycles << " ";
        }
    d << "(first/total cycles)";
    return {ok, d.str()};
}

Verdict residual_invariants() {
    const auto pairs = exhaustive_pairs(8);
    bool ok = true;
    long estimates = 0;
    int lo = 100, hi = -100;
    for (Mode m : {Mode::Full, Mode::Truncated}) {
        const auto cfg = make_config(8, m);
        MultiplyOptions opt;
        opt.check_identity = m == Mode::Full;
        for (const auto& pr : pairs) {
            MultiplyResult r;
            try {
                r = multiply(pr.x, pr.y, cfg, opt);
            } catch (const std::exception&) {
                ok = false;
                continue;
            }
            for (const auto& rec : r.trace)
                if (rec.v_hat) {
                    ++estimates;
                    lo = std::min(lo, rec.v_hat->units);
                    hi = std::max(hi, rec.v_hat->units);
                }
        }
    }
    ok = ok && lo >= -8 && hi <= 7;
    return {ok, std::to_string(estimates) + " estimates in [" + std::to_string(lo) + "/4, " + std::to_string(hi) +
                    "/4], full-mode identity checked every cycle"};
}

Verdict profile_soundness() {
    const auto cfg8 = make_config(8, Mode::Truncated);
    const auto r8 = verify_profile(cfg8, exhaustive_pairs(8));
    const auto cfg16 = make_config(16, Mode::Truncated);
    const auto r16 = verify_profile(cfg16, random_pairs(16, kProfileRandom, kSeed, OperandClass::Conventional));
    const bool ok = r8.mismatches == kAllowedMismatches && r16.mismatches == kAllowedMismatches &&
                    r8.pairs == 65536 && r16.pairs == kProfileRandom;
    return {ok, "n=8: " + std::to_string(r8.mismatches) + "/" + std::to_string(r8.pairs) + ", n=16: " +
                    std::to_string(r16.mismatches) + "/" + std::to_string(r16.pairs) + " mismatches"};
}

Verdict savings_trend() {
    std::ostringstream d;
    bool ok = true;
    double prev = 2.0;
    for (int n : {8, 16, 24, 32}) {
        const auto t = slice_cycle_totals(make_config(n, Mode::Truncated));
        ok = ok && t.ratio < prev && t.ratio > 0;
        prev = t.ratio;
        d << "n=" << n << ":" << pct(t.ratio) << " ";
    }
    return {ok, d.str() + "(truncated/full slice-cycles)"};
}

Verdict otfc_properties() {
    std::mt19937_64 rng(kSeed);
    std::uniform_int_distribution<int> len(1, kOtfcMaxLength);
    bool ok = true;
    long prefixes = 0;
    for (std::size_t s = 0; s < kOtfcSequences; ++s) {
        const auto d = oracle::random_digits(rng, std::size_t(len(rng)));
        OtfcPair p;
        oracle::i128 expect = 0;  // Σ d_i 2^(j-i)
        for (std::size_t j = 1; j <= d.size(); ++j) {
            p = otfc_update(p, SignedDigit::from_int(d[j - 1]));
            expect = 2 * expect + d[j - 1];
            ok = ok && p.digits() == int(j) && p.q_numerator() == expect && p.qm_numerator() == expect - 1;
            ok = ok && p.qm() == p.q() - ExactValue(1, int(j));
            ++prefixes;
        }
    }
    return {ok, std::to_string(kOtfcSequences) + " sequences, " + std::to_string(prefixes) + " prefixes"};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"exhaustive n=8, full and truncated, |x*y - z| <= 2^-7", exhaustive_n8},
        {"random n=16/24/32, both modes, |x*y - z| <= 2^(1-n)", random_wide},
        {"working precision p = 7, 13, 18, 23", working_precision},
        {"cycle table for k=8, every cell", cycle_table_k8},
        {"pipeline products and latency, k=8", pipeline_equivalence},
        {"estimate range and full-mode residual identity", residual_invariants},
        {"activity-profile masked simulation", profile_soundness},
        {"truncated/full slice-cycle ratio strictly decreasing", savings_trend},
        {"OTFC value(QM) = value(Q) - 2^-j and prefix exactness", otfc_properties},
    };
    int failed = 0;
    int idx = 0;
    for (const auto& [name, fn] : criteria) {
        ++idx;
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!v.pass) ++failed;
        std::printf("criterion %d: %s  %s  [%s] (%.1fs)\n", idx, v.pass ? "PASS" : "FAIL", name.c_str(),
                    v.detail.c_str(), secs);
    }
    std::printf("acceptance: %d/%zu criteria passed\n", int(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
