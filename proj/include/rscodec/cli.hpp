#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rscodec/gao.hpp"
#include "rscodec/gs.hpp"
#include "rscodec/io.hpp"
#include "rscodec/patterns.hpp"
#include "rscodec/wb.hpp"

namespace rscodec::cli {

// Exit codes: 0 success, 1 decode failures present, 2 usage/format error,
// 3 internal invariant violation (including decoder disagreements).

constexpr std::uint64_t kDefaultBudget = 10'000'000;

inline std::uint64_t exhaustive_budget() {
    const char* env = std::getenv("RSCODEC_BUDGET");
    if (!env || !*env) return kDefaultBudget;
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        throw ParseError("RSCODEC_BUDGET must be a decimal integer");
    return v;
}

inline CodeParams load_params(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open parameter file '" + path + "'");
    return read_code_params(f);
}

inline CodeParams sibling_params(const CodeParams& C, Method method) {
    return make_code(C.field, C.k, C.b, method);
}

inline Word encode_word(const CodeParams& C, const Message& msg) {
    return C.method == Method::spectral ? encode_spectral(C, msg) : encode_systematic(C, msg);
}

// ---------------------------------------------------------------------------

struct GenParamsOpts {
    unsigned p = 0, m = 1, k = 0, b = 1;
    std::vector<unsigned> prim_poly;
    std::optional<unsigned> alpha;
    std::string method;
    std::string out_path;
};

inline int cmd_gen_params(const GenParamsOpts& o, std::ostream& out) {
    std::optional<elem> alpha;
    if (o.alpha) {
        if (*o.alpha > 0xffff) throw BadCodeParamsError("alpha out of range");
        alpha = static_cast<elem>(*o.alpha);
    }
    Field field = make_field(o.p, o.m, o.prim_poly, alpha);
    CodeParams C = make_code(std::move(field), o.k, o.b, method_from_string(o.method));
    if (o.out_path.empty()) {
        write_code_params(out, C);
    } else {
        std::ofstream f(o.out_path);
        if (!f) throw ParseError("cannot open '" + o.out_path + "' for writing");
        write_code_params(f, C);
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct EncodeOpts {
    std::string params_path;
    bool binary = false;
};

inline int cmd_encode(const EncodeOpts& o, std::istream& in, std::ostream& out) {
    CodeParams C = load_params(o.params_path);
    WordReader reader(in, C.k, C.field.q(), o.binary);
    WordWriter writer(out, C.field.q(), o.binary);
    while (auto msg = reader.next()) writer.write(encode_word(C, *msg));
    return 0;
}

// ---------------------------------------------------------------------------

struct CorruptOpts {
    std::string params_path;
    unsigned errors = 0;
    std::uint64_t seed = 0;
    std::string positions = "any";
    std::string pattern_out;
    bool binary = false;
};

inline PositionFilter filter_from_string(const std::string& s) {
    if (s == "any") return PositionFilter::any;
    if (s == "message") return PositionFilter::message;
    if (s == "parity") return PositionFilter::parity;
    throw ParseError("unknown position filter '" + s + "'");
}

inline int cmd_corrupt(const CorruptOpts& o, std::istream& in, std::ostream& out,
                       std::ostream& err) {
    CodeParams C = load_params(o.params_path);
    if (o.errors > C.n) throw BadCodeParamsError("--errors exceeds n");
    PositionFilter filter = filter_from_string(o.positions);
    SplitMix64 rng(o.seed);
    WordReader reader(in, C.n, C.field.q(), o.binary);
    WordWriter writer(out, C.field.q(), o.binary);

    std::ofstream sidecar_file;
    std::ostream* log = &err;
    if (!o.pattern_out.empty()) {
        sidecar_file.open(o.pattern_out);
        if (!sidecar_file) throw ParseError("cannot open '" + o.pattern_out + "' for writing");
        log = &sidecar_file;
    }

    std::size_t index = 0;
    while (auto word = reader.next()) {
        ErrorPattern pat = random_pattern(C, rng, o.errors, filter);
        writer.write(apply_errors(C, *word, pat));
        *log << index;
        for (const auto& e : pat.entries) *log << ' ' << e.pos << ':' << e.value;
        *log << '\n';
        ++index;
    }
    return 0;
}

// ---------------------------------------------------------------------------

struct DecodeOpts {
    std::string params_path;
    std::string algo;
    std::optional<unsigned> t_max;
    bool trace_keyeq = false;
    bool binary = false;
};

namespace detail {

inline void dump_euclid(std::ostream& err, std::size_t word, const std::vector<EuclidStep>& steps) {
    for (std::size_t j = 0; j < steps.size(); ++j) {
        err << "keyeq word=" << word << " euclid[" << j << "].r: " << poly_to_text(steps[j].remainder)
            << '\n';
        err << "keyeq word=" << word << " euclid[" << j << "].v: " << poly_to_text(steps[j].multiplier)
            << '\n';
    }
}

inline void dump_wb_trace(std::ostream& err, std::size_t word, const WbTrace& t) {
    err << "keyeq word=" << word << " S: " << poly_to_text(t.S) << '\n';
    err << "keyeq word=" << word << " p: " << poly_to_text(t.p) << '\n';
    err << "keyeq word=" << word << " L: " << poly_to_text(t.L) << '\n';
    dump_euclid(err, word, t.euclid);
    err << "keyeq word=" << word << " N: " << poly_to_text(t.N) << '\n';
    err << "keyeq word=" << word << " Wm: " << poly_to_text(t.Wm) << '\n';
}

inline void dump_gao_trace(std::ostream& err, std::size_t word, const GaoTrace& t) {
    err << "keyeq word=" << word << " T: " << poly_to_text(t.T) << '\n';
    dump_euclid(err, word, t.euclid);
    err << "keyeq word=" << word << " P: " << poly_to_text(t.P) << '\n';
    err << "keyeq word=" << word << " W: " << poly_to_text(t.W) << '\n';
}

inline void dump_gs_trace(std::ostream& err, std::size_t word, const GsTrace& t) {
    for (const auto& at : t.attempts) {
        err << "keyeq word=" << word << " attempt e=" << at.e << " status=" << to_string(at.status);
        if (at.solve_status != SolveStatus::inconsistent)
            err << " W: " << poly_to_text(at.W) << " P: " << poly_to_text(at.P);
        err << '\n';
    }
}

}  // namespace detail

inline int cmd_decode(const DecodeOpts& o, std::istream& in, std::ostream& out,
                      std::ostream& err) {
    CodeParams C = load_params(o.params_path);
    WordReader reader(in, C.n, C.field.q(), o.binary);
    WordWriter writer(out, C.field.q(), o.binary);
    const unsigned t_max = o.t_max.value_or((C.d - 1) / 2);

    std::size_t index = 0;
    std::size_t failures = 0;
    while (auto word = reader.next()) {
        DecodeResult res = DecodeResult::failure(FailureReason::KeyEquationUnsolvable);
        if (o.algo == "gao") {
            GaoTrace trace;
            res = decode_gao(C, *word, o.trace_keyeq ? &trace : nullptr);
            if (o.trace_keyeq) detail::dump_gao_trace(err, index, trace);
        } else if (o.algo == "wb") {
            WbTrace trace;
            res = decode_wb(C, *word, o.trace_keyeq ? &trace : nullptr);
            if (o.trace_keyeq) detail::dump_wb_trace(err, index, trace);
        } else if (o.algo == "gs") {
            GsTrace trace;
            res = decode_gs(C, *word, t_max, o.trace_keyeq ? &trace : nullptr);
            if (o.trace_keyeq) detail::dump_gs_trace(err, index, trace);
        } else {
            throw ParseError("unknown decoder '" + o.algo + "'");
        }
        if (res.ok()) {
            writer.write(res.value().message);
        } else {
            out << "FAIL " << to_string(res.reason()) << '\n';
            ++failures;
        }
        ++index;
    }
    return failures ? 1 : 0;
}

// ---------------------------------------------------------------------------

struct DiffTestOpts {
    std::string params_path;
    std::uint64_t trials = 0;
    bool exhaustive = false;
    std::uint64_t seed = 0;
};

struct LegReport {
    std::string name;
    bool ran = false;
    std::string skip_reason;
    std::uint64_t trials = 0, agreements = 0, disagreements = 0, both_failed = 0;
};

namespace detail {

// Outcomes agree when both succeed with the same message (and codeword) or
// both fail; failure reasons are not compared.
inline void tally_gao_vs_gs(const CodeParams& Cspec, const Word& R, LegReport& rep) {
    ++rep.trials;
    DecodeResult rg = decode_gao(Cspec, R);
    DecodeResult rs = decode_gs(Cspec, R, (Cspec.d - 1) / 2);
    bool agree;
    if (rg.ok() != rs.ok()) {
        agree = false;
    } else if (!rg.ok()) {
        agree = true;
        ++rep.both_failed;
    } else {
        agree = rg.value().message == rs.value().message && rg.value().codeword == rs.value().codeword;
    }
    agree ? ++rep.agreements : ++rep.disagreements;
}

// Same received word fed to both decoders; messages are compared after
// transcoding between the two coding conventions (the corrected codewords
// must match symbol for symbol).
inline void tally_gao_vs_wb(const CodeParams& Cspec, const CodeParams& Crem, const Word& R,
                            LegReport& rep) {
    ++rep.trials;
    DecodeResult rw = decode_wb(Crem, R);
    DecodeResult rg = decode_gao(Cspec, R);
    bool agree;
    if (rw.ok() != rg.ok()) {
        agree = false;
    } else if (!rw.ok()) {
        agree = true;
        ++rep.both_failed;
    } else {
        agree = rw.value().codeword == rg.value().codeword &&
                rw.value().message == message_part(Crem, rg.value().codeword);
    }
    agree ? ++rep.agreements : ++rep.disagreements;
}

inline void print_leg(std::ostream& out, const std::string& mode, const LegReport& rep) {
    out << "diff-test leg=" << rep.name;
    if (!rep.ran) {
        out << " skipped (" << rep.skip_reason << ")\n";
        return;
    }
    out << " mode=" << mode << " trials=" << rep.trials << " agreements=" << rep.agreements
        << " disagreements=" << rep.disagreements << " both_failed=" << rep.both_failed << '\n';
}

}  // namespace detail

inline int cmd_diff_test(const DiffTestOpts& o, std::ostream& out) {
    if (o.exhaustive == (o.trials > 0))
        throw ParseError("diff-test needs exactly one of --trials N or --exhaustive");
    CodeParams C = load_params(o.params_path);
    CodeParams Cspec = C.method == Method::spectral ? C : sibling_params(C, Method::spectral);
    CodeParams Crem = C.method == Method::remainder ? C : sibling_params(C, Method::remainder);
    const unsigned t = (C.d - 1) / 2;

    LegReport gs_leg;
    gs_leg.name = "gao-vs-gs";
    LegReport wb_leg;
    wb_leg.name = "gao-vs-wb";
    // The wb leg compares decoders across coding conventions on the same
    // received word, which requires the two methods to generate the same
    // code; that holds exactly for b = 1.
    const bool wb_leg_possible = C.b == 1;
    if (!wb_leg_possible) wb_leg.skip_reason = "b != 1";

    if (o.exhaustive) {
        const std::uint64_t messages = count_messages(C.field.q(), C.k);
        std::uint64_t total = rscodec::detail::sat_mul(messages, count_patterns(C.n, t, C.field.q()));
        if (wb_leg_possible)
            total = rscodec::detail::sat_add(
                total, rscodec::detail::sat_mul(messages, count_patterns(C.k, t, C.field.q())));
        const std::uint64_t budget = exhaustive_budget();
        if (total > budget)
            throw BudgetExceededError("exhaustive sweep needs " + std::to_string(total) +
                                      " decode pairs, budget is " + std::to_string(budget) +
                                      " (override with RSCODEC_BUDGET)");
        gs_leg.ran = true;
        for_each_message(Cspec, [&](const Message& msg) {
            Word cw = encode_spectral(Cspec, msg);
            for_each_pattern(Cspec, t, PositionFilter::any, [&](const ErrorPattern& pat) {
                detail::tally_gao_vs_gs(Cspec, apply_errors(Cspec, cw, pat), gs_leg);
                return true;
            });
            return true;
        });
        if (wb_leg_possible) {
            wb_leg.ran = true;
            for_each_message(Crem, [&](const Message& msg) {
                Word cw = encode_systematic(Crem, msg);
                for_each_pattern(Crem, t, PositionFilter::message, [&](const ErrorPattern& pat) {
                    detail::tally_gao_vs_wb(Cspec, Crem, apply_errors(Crem, cw, pat), wb_leg);
                    return true;
                });
                return true;
            });
        }
    } else {
        SplitMix64 rng(o.seed);
        gs_leg.ran = true;
        for (std::uint64_t i = 0; i < o.trials; ++i) {
            Message msg = random_message(Cspec, rng);
            ErrorPattern pat =
                random_pattern(Cspec, rng, static_cast<unsigned>(rng.below(t + 1)), PositionFilter::any);
            detail::tally_gao_vs_gs(Cspec, apply_errors(Cspec, encode_spectral(Cspec, msg), pat),
                                    gs_leg);
        }
        if (wb_leg_possible) {
            wb_leg.ran = true;
            for (std::uint64_t i = 0; i < o.trials; ++i) {
                Message msg = random_message(Crem, rng);
                ErrorPattern pat = random_pattern(Crem, rng, static_cast<unsigned>(rng.below(t + 1)),
                                                  PositionFilter::message);
                detail::tally_gao_vs_wb(Cspec, Crem,
                                        apply_errors(Crem, encode_systematic(Crem, msg), pat), wb_leg);
            }
        }
    }

    const std::string mode = o.exhaustive ? "exhaustive" : "random";
    detail::print_leg(out, mode, gs_leg);
    detail::print_leg(out, mode, wb_leg);
    return (gs_leg.disagreements || wb_leg.disagreements) ? 3 : 0;
}

// ---------------------------------------------------------------------------

struct BenchOpts {
    std::string params_path;
    unsigned trials = 10;
};

namespace detail {

template <typename DecodeFn>
inline void bench_algo(std::ostream& out, const char* name, const CodeParams& C, unsigned trials,
                       unsigned errors, DecodeFn&& decode) {
    SplitMix64 rng(0xb37c5);
    std::vector<Word> words;
    words.reserve(trials);
    for (unsigned i = 0; i < trials; ++i) {
        Word cw = encode_word(C, random_message(C, rng));
        words.push_back(apply_errors(C, cw, random_pattern(C, rng, errors)));
    }
    unsigned ok = 0;  // consumed so the decode loop cannot be optimized away
    const auto start = std::chrono::steady_clock::now();
    for (const Word& w : words) ok += decode(w).ok();
    const auto stop = std::chrono::steady_clock::now();
    const double total_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    out << "bench algo=" << name << " n=" << C.n << " trials=" << trials << " ok=" << ok
        << " total_ms=" << total_ms << " per_decode_us=" << (total_ms * 1000.0 / trials) << '\n';
}

}  // namespace detail

inline int cmd_bench(const BenchOpts& o, std::ostream& out) {
    CodeParams C = load_params(o.params_path);
    if (o.trials < 1) throw ParseError("--trials must be >= 1");
    CodeParams Cspec = C.method == Method::spectral ? C : sibling_params(C, Method::spectral);
    CodeParams Crem = C.method == Method::remainder ? C : sibling_params(C, Method::remainder);
    const unsigned t = std::min(2u, (C.d - 1) / 2);
    const unsigned t_max = (C.d - 1) / 2;

    detail::bench_algo(out, "gao", Cspec, o.trials, t,
                       [&](const Word& w) { return decode_gao(Cspec, w); });
    detail::bench_algo(out, "wb", Crem, o.trials, t,
                       [&](const Word& w) { return decode_wb(Crem, w); });
    detail::bench_algo(out, "gs", Cspec, o.trials, t,
                       [&](const Word& w) { return decode_gs(Cspec, w, t_max); });
    out << "note: quadratic-time transforms and Euclid throughout; fast-transform and "
           "fast-GCD variants are out of scope\n";
    return 0;
}

// ---------------------------------------------------------------------------

/// Full argument-to-exit-code surface of the rscodec tool; main() forwards
/// argv here so tests can drive the exact CLI behavior on streams.
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"Reed-Solomon codec workbench: parameter generation, coding, corruption, "
                 "decoding, differential testing, benchmarking"};
    app.require_subcommand(1);

    GenParamsOpts gp;
    auto* gen = app.add_subcommand("gen-params", "Build and write a code parameter file");
    gen->add_option("--p", gp.p, "prime characteristic")->required();
    gen->add_option("--m", gp.m, "extension degree (default 1)");
    gen->add_option("--prim-poly", gp.prim_poly,
                    "construction polynomial c0..cm, low degree first (m >= 2 only)");
    gen->add_option("--alpha", gp.alpha, "primitive element (required for m = 1)");
    gen->add_option("--k", gp.k, "message symbols")->required();
    gen->add_option("--b", gp.b, "first generator root exponent (default 1)");
    gen->add_option("--method", gp.method, "spectral | remainder")->required();
    gen->add_option("--out", gp.out_path, "output file (default stdout)");

    EncodeOpts eo;
    auto* enc = app.add_subcommand("encode", "Encode k-symbol words from stdin");
    enc->add_option("--params", eo.params_path, "parameter file")->required();
    enc->add_flag("--binary", eo.binary, "fixed-width big-endian symbol streams");

    CorruptOpts co;
    auto* cor = app.add_subcommand("corrupt", "Inject seeded random errors into n-symbol words");
    cor->add_option("--params", co.params_path, "parameter file")->required();
    cor->add_option("--errors", co.errors, "errors per word")->required();
    cor->add_option("--seed", co.seed, "RNG seed (default 0)");
    cor->add_option("--positions", co.positions, "any | message | parity (default any)");
    cor->add_option("--pattern-out", co.pattern_out,
                    "sidecar file for injected (position:value) pairs (default stderr)");
    cor->add_flag("--binary", co.binary, "fixed-width big-endian symbol streams");

    DecodeOpts dopt;
    auto* dec = app.add_subcommand("decode", "Decode n-symbol words from stdin");
    dec->add_option("--params", dopt.params_path, "parameter file")->required();
    dec->add_option("--algo", dopt.algo, "gao | wb | gs")->required();
    dec->add_option("--tmax", dopt.t_max, "gs only: largest locator degree to sweep");
    dec->add_flag("--trace-keyeq", dopt.trace_keyeq,
                  "dump intermediate polynomials as labeled text lines on stderr");
    dec->add_flag("--binary", dopt.binary, "fixed-width big-endian symbol streams");

    DiffTestOpts dt;
    auto* diff = app.add_subcommand("diff-test", "Cross-decoder agreement sweeps");
    diff->add_option("--params", dt.params_path, "parameter file")->required();
    diff->add_option("--trials", dt.trials, "number of seeded random trials per leg");
    diff->add_flag("--exhaustive", dt.exhaustive, "sweep all messages x all patterns");
    diff->add_option("--seed", dt.seed, "RNG seed (default 0)");

    BenchOpts bo;
    auto* ben = app.add_subcommand("bench", "Wall-clock per decode for each algorithm");
    ben->add_option("--params", bo.params_path, "parameter file")->required();
    ben->add_option("--trials", bo.trials, "decodes per algorithm (default 10)");

    std::vector<const char*> argv;
    argv.push_back("rscodec");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (gen->parsed()) return cmd_gen_params(gp, out);
        if (enc->parsed()) return cmd_encode(eo, in, out);
        if (cor->parsed()) return cmd_corrupt(co, in, out, err);
        if (dec->parsed()) return cmd_decode(dopt, in, out, err);
        if (diff->parsed()) return cmd_diff_test(dt, out);
        if (ben->parsed()) return cmd_bench(bo, out);
    } catch (const InternalError& e) {
        err << e.what() << '\n';
        return 3;
    } catch (const CodecError& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "InternalError: " << e.what() << '\n';
        return 3;
    }
    return 2;
}

}  // namespace rscodec::cli
