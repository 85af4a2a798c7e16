#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "olm/activity.hpp"
#include "olm/baselines.hpp"
#include "olm/config.hpp"
#include "olm/core.hpp"
#include "olm/operand.hpp"
#include "olm/pipeline.hpp"
#include "olm/sweep.hpp"

namespace olm::cli {

namespace {

constexpr int kMaxExhaustiveDigits = 10;

/// Flags shared by all commands; each command registers the ones it uses.
struct RunConfig {
    int n = 8;
    std::string mode = "both";
    long k = 8;
    std::uint64_t seed = 1;
    std::string sweep = "random";
    std::size_t trials = 10000;
    std::string x;
    std::string y;
    std::string out;
    std::string format = "csv";
};

/// Usage-level failure: reported on err, exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Mode> modes_of(const std::string& m) {
    if (m == "both") return {Mode::Full, Mode::Truncated};
    return {parse_mode(m)};
}

/// Output sink: the named file, or the fallback stream when path is empty.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw UsageError("cannot open output file " + path);
        os_ = file_.get();
    }
    std::ostream& stream() { return *os_; }
    void finish() {
        if (file_) {
            file_->close();
            if (!*file_) throw UsageError("write to output file failed");
        }
    }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_;
};

std::string ulps(const ErrorStats& st) {
    std::ostringstream s;
    s << std::setprecision(6) << st.max_error_ulps();
    return s.str();
}

void report_line(std::ostream& out, Mode mode, std::string_view label, const ErrorStats& st) {
    out << "  " << std::left << std::setw(10) << to_string(mode) << std::setw(14) << label << std::right
        << " pairs=" << st.pairs << "  max_error=" << st.max_error_value().to_string() << " (" << ulps(st)
        << " x 2^-" << st.n << ")  bound=2^-" << (st.n - 1) << "  " << (st.pass() ? "PASS" : "FAIL") << '\n';
}

int cmd_verify(const RunConfig& rc, std::ostream& out) {
    const auto modes = modes_of(rc.mode);
    for (Mode m : modes) (void)make_config(rc.n, m);

    struct SubSweep {
        std::string label;
        std::vector<OperandPair> pairs;
    };
    std::vector<SubSweep> subs;
    if (rc.sweep == "exhaustive") {
        if (rc.n > kMaxExhaustiveDigits)
            throw UsageError("exhaustive sweep is limited to n <= " + std::to_string(kMaxExhaustiveDigits));
        subs.push_back({"exhaustive", exhaustive_pairs(rc.n)});
    } else if (rc.sweep == "random") {
        if (rc.trials == 0) throw UsageError("--trials must be positive");
        subs.push_back({"conventional", random_pairs(rc.n, rc.trials, rc.seed, OperandClass::Conventional)});
        subs.push_back({"signed-digit", random_pairs(rc.n, rc.trials, rc.seed + 1, OperandClass::SignedDigit)});
    } else if (rc.sweep == "fixed") {
        if (rc.x.empty() || rc.y.empty()) throw UsageError("fixed sweep needs --x and --y");
        subs.push_back({"fixed", {{parse_operand(rc.x, std::size_t(rc.n)), parse_operand(rc.y, std::size_t(rc.n))}}});
    } else {
        throw UsageError("unknown sweep kind: " + rc.sweep);
    }

    out << "verify n=" << rc.n << " mode=" << rc.mode << " sweep=" << rc.sweep;
    if (rc.sweep == "random") out << " trials=" << rc.trials << " seed=" << rc.seed;
    out << '\n';

    bool ok = true;
    for (Mode m : modes) {
        const MultiplierConfig cfg = make_config(rc.n, m);
        for (const auto& sub : subs) {
            const ErrorStats st = check_products(cfg, sub.pairs);
            report_line(out, m, sub.label, st);
            ok = ok && st.pass();
            if (rc.sweep == "fixed") {
                const auto& pr = sub.pairs.front();
                out << "    x=" << pr.x.to_string() << " y=" << pr.y.to_string()
                    << " z=" << multiply(pr.x, pr.y, cfg).z.to_string() << '\n';
            } else if (!st.pass() && st.worst) {
                out << "    worst: x=" << st.worst->x.to_string() << " y=" << st.worst->y.to_string() << '\n';
            }
        }
    }
    out << "result: " << (ok ? "PASS" : "FAIL") << '\n';
    return ok ? kExitPass : kExitFail;
}

int cmd_table3(const RunConfig& rc, std::ostream& out) {
    if (rc.k < 1) throw UsageError("--k must be at least 1");
    const auto rows = cycle_table(rc.k);
    Sink sink(rc.out, out);
    if (rc.format == "csv") write_cycle_table_csv(sink.stream(), rows);
    else write_cycle_table_text(sink.stream(), rows, rc.k);
    sink.finish();
    return kExitPass;
}

int cmd_profile(const RunConfig& rc, std::ostream& out, std::ostream& err) {
    const std::string mode = rc.mode == "both" ? "truncated" : rc.mode;
    const MultiplierConfig cfg = make_config(rc.n, parse_mode(mode));
    const ActivityProfile prof = activity_profile(cfg);
    Sink sink(rc.out, out);
    if (rc.format == "text") write_profile_text(sink.stream(), prof);
    else write_profile_csv(sink.stream(), prof);
    sink.finish();
    const SliceCycleTotals tot = slice_cycle_totals(cfg);
    std::ostream& summary = rc.out.empty() ? err : out;
    summary << "slice-cycles n=" << cfg.n << " p=" << compute_p(cfg.n, cfg.delta, cfg.t)
            << " full=" << tot.full_total << " truncated=" << tot.truncated_total << " ratio=" << std::fixed
            << std::setprecision(6) << tot.ratio << '\n';
    return kExitPass;
}

int cmd_trace(const RunConfig& rc, std::ostream& out) {
    const std::string mode = rc.mode == "both" ? "full" : rc.mode;
    const MultiplierConfig cfg = make_config(rc.n, parse_mode(mode));
    if (rc.x.empty() || rc.y.empty()) throw UsageError("trace needs --x and --y");
    const SDWord x = parse_operand(rc.x, std::size_t(rc.n));
    const SDWord y = parse_operand(rc.y, std::size_t(rc.n));
    const auto res = multiply(x, y, cfg);
    const auto active = activity_profile(cfg).keep_depths();

    Sink sink(rc.out, out);
    std::ostream& os = sink.stream();
    const bool text = rc.format == "text";
    if (text)
        os << std::setw(4) << "j" << std::setw(5) << "x_in" << std::setw(5) << "y_in" << std::setw(24) << "residual"
           << std::setw(8) << "v_hat" << std::setw(4) << "z" << std::setw(8) << "active" << '\n';
    else
        os << "j,x_in,y_in,residual,v_hat,z,active_count\n";
    for (const auto& r : res.trace) {
        const std::string vh = r.v_hat ? r.v_hat->value().to_decimal() : "";
        const std::string z = r.z ? std::to_string(r.z->value()) : "";
        const int act = active[std::size_t(r.cycle - 1)];
        if (text)
            os << std::setw(4) << r.j << std::setw(5) << r.x_in.value() << std::setw(5) << r.y_in.value()
               << std::setw(24) << r.w.to_decimal() << std::setw(8) << vh << std::setw(4) << z << std::setw(8)
               << act << '\n';
        else
            os << r.j << ',' << r.x_in.value() << ',' << r.y_in.value() << ',' << r.w.to_decimal() << ',' << vh
               << ',' << z << ',' << act << '\n';
    }
    sink.finish();
    return kExitPass;
}

int cmd_pipeline(const RunConfig& rc, std::ostream& out) {
    const std::string mode = rc.mode == "both" ? "truncated" : rc.mode;
    const MultiplierConfig cfg = make_config(rc.n, parse_mode(mode));
    if (rc.k < 0) throw UsageError("--k must be non-negative");
    const auto pairs = random_pairs(rc.n, std::size_t(rc.k), rc.seed, OperandClass::Conventional);
    const PipelineResult res = pipeline_run(pairs, cfg);

    bool ok = true;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        ok = ok && res.products[i] == multiply(pairs[i].x, pairs[i].y, cfg).z;

    if (!rc.out.empty()) {
        Sink sink(rc.out, out);
        write_pipeline_csv(sink.stream(), res.trace);
        sink.finish();
    }
    write_pipeline_stats(out, res.stats);
    if (!ok) out << "pipeline products differ from sequential multiply\n";
    return ok ? kExitPass : kExitFail;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Radix-2 online multiplier model: verification sweeps, traces, activity profiles, cycle tables",
                 "olmul"};
    app.require_subcommand(1);
    RunConfig rc;

    auto add_n = [&](CLI::App* c) { c->add_option("--n", rc.n, "Operand/product digits")->capture_default_str(); };
    auto add_out = [&](CLI::App* c) { c->add_option("--out", rc.out, "Output file (default stdout)"); };
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", rc.format, "Output format")->check(CLI::IsMember({"csv", "text"}))->capture_default_str();
    };
    const char* operand_help =
        "Operand: binary fraction 0.b1b2... or signed-digit string over {+,0,-} (MSD first, zero-padded to n)";

    auto* verify = app.add_subcommand("verify", "Check |x*y - z| <= 2^(1-n) against the exact product");
    add_n(verify);
    verify->add_option("--mode", rc.mode, "full | truncated | both")->check(CLI::IsMember({"full", "truncated", "both"}));
    verify->add_option("--sweep", rc.sweep, "exhaustive (n <= 10) | random | fixed")
        ->check(CLI::IsMember({"exhaustive", "random", "fixed"}));
    verify->add_option("--trials", rc.trials, "Pairs per random sub-sweep");
    verify->add_option("--seed", rc.seed, "Random seed");
    verify->add_option("--x", rc.x, operand_help);
    verify->add_option("--y", rc.y, operand_help);

    auto* table3 = app.add_subcommand("table3", "Cycle counts to process k vectors");
    table3->add_option("--k", rc.k, "Number of vectors")->capture_default_str();
    add_out(table3);
    add_format(table3);

    auto* profile = app.add_subcommand("profile", "Per-cycle active slice positions (CSV: cycle,stage,count,positions)");
    add_n(profile);
    add_out(profile);
    add_format(profile);

    auto* trace = app.add_subcommand("trace", "Per-cycle trace of one multiplication");
    add_n(trace);
    trace->add_option("--x", rc.x, operand_help)->required();
    trace->add_option("--y", rc.y, operand_help)->required();
    add_out(trace);
    add_format(trace);

    auto* pipe = app.add_subcommand("pipeline", "Stream k random pairs through the pipeline; print stats as JSON");
    add_n(pipe);
    pipe->add_option("--k", rc.k, "Stream length")->capture_default_str();
    pipe->add_option("--seed", rc.seed, "Random seed");
    pipe->add_option("--out", rc.out, "Occupancy CSV (cycle,stage,stream_id,z_digit,active_count)");

    // Mode defaults differ per command; registered last so the help shows them.
    std::string profile_mode = "truncated", trace_mode = "full", pipe_mode = "truncated";
    profile->add_option("--mode", profile_mode, "full | truncated")->check(CLI::IsMember({"full", "truncated"}));
    trace->add_option("--mode", trace_mode, "full | truncated")->check(CLI::IsMember({"full", "truncated"}));
    pipe->add_option("--mode", pipe_mode, "full | truncated")->check(CLI::IsMember({"full", "truncated"}));

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*verify) return cmd_verify(rc, out);
        if (*table3) return cmd_table3(rc, out);
        if (*profile) {
            rc.mode = profile_mode;
            return cmd_profile(rc, out, err);
        }
        if (*trace) {
            rc.mode = trace_mode;
            return cmd_trace(rc, out);
        }
        if (*pipe) {
            rc.mode = pipe_mode;
            return cmd_pipeline(rc, out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResidualBoundError& e) {
        err << "internal invariant failure: " << e.what() << '\n';
        return kExitFail;
    } catch (const PipelineError& e) {
        err << "internal invariant failure: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}

}  // namespace olm::cli
