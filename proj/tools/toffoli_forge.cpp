// SPDX-License-Identifier: MIT
#include "tforge/analysis.hpp"
#include "tforge/circuit.hpp"
#include "tforge/sim.hpp"
#include "tforge/synthesis.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace tforge;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Options {
    int n = 0;
    std::string method = "static";
    std::string mode = "worst";
    std::string format;
    std::string output;
    std::string input;
    std::string range = "4:16";
    bool check_paper = false;
    double tolerance = 1e-10;
    std::uint64_t seed = 1;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

SynthesisMethod parse_method(const std::string& s) {
    auto m = method_from_name(s);
    if (!m) throw UsageError("unknown method '" + s + "' (static|ccix|mixed)");
    return *m;
}

AccountingMode parse_mode(const std::string& s) {
    auto m = mode_from_name(s);
    if (!m) throw UsageError("unknown mode '" + s + "' (worst|best|static)");
    return *m;
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << text;
    if (!f) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

SynthesisResult build(const Options& o) {
    if (o.n < 2) throw UsageError("--n must be at least 2");
    return synthesize({o.n, parse_method(o.method)});
}

int controls_of(const Circuit& c) {
    int n = 0;
    for (const auto& r : c.roles())
        if (r && r->role == Role::Control) ++n;
    return n;
}

int cmd_synth(const Options& o) {
    auto res = build(o);
    const std::string fmt = o.format.empty() ? "canonical" : o.format;
    std::string text;
    if (fmt == "qasm")
        text = to_qasm(res.circuit);
    else if (fmt == "canonical")
        text = to_canonical(res.circuit);
    else
        throw UsageError("synth supports --format qasm|canonical");
    write_out(o.output, text);
    const auto rep = analyze(res, parse_mode(o.mode));
    (o.output.empty() || o.output == "-" ? std::cerr : std::cout) << format_report(rep) << '\n';
    return kOk;
}

int cmd_analyze(const Options& o) {
    const AccountingMode mode = parse_mode(o.mode);
    ResourceReport rep;
    if (!o.input.empty()) {
        Circuit c = from_canonical(read_file(o.input));
        auto [cx, tc] = count_resources(c, mode);
        rep.cx = cx;
        rep.t_count = tc;
        rep.t_depth = t_depth(c, mode);
        rep.mode = mode;
        rep.n = controls_of(c);
        rep.method = parse_method(o.method);
    } else {
        rep = analyze(build(o), mode);
    }
    std::cout << format_report(rep) << '\n';
    return kOk;
}

int cmd_verify(const Options& o) {
    VerifyOptions vo;
    vo.tolerance = o.tolerance;
    vo.seed = o.seed;
    vo.threads = default_threads();
    VerificationReport rep;
    if (!o.input.empty()) {
        rep = verify_circuit(from_canonical(read_file(o.input)), vo);
        rep.method = parse_method(o.method);
    } else {
        rep = verify_cnx(build(o), vo);
    }
    std::cout << "n=" << rep.n << " method=" << method_name(rep.method) << " inputs=" << rep.basis_inputs
              << (rep.exhaustive ? " (exhaustive)" : " (sampled)") << " random_states=" << rep.random_states
              << '\n';
    std::cout << std::scientific << std::setprecision(3) << "max_deviation=" << rep.max_deviation << '\n';
    std::cout << std::fixed << std::setprecision(6);
    for (const auto& [key, ph] : rep.per_branch_phase)
        std::cout << "branch " << (key.empty() ? "-" : key) << " phase=" << ph.real() << (ph.imag() < 0 ? "" : "+")
                  << ph.imag() << "i\n";
    std::cout << (rep.passed ? "PASS" : "FAIL") << '\n';
    return rep.passed ? kOk : kCheckFailed;
}

int cmd_bench(const Options& o) {
    int lo = 0, hi = 0;
    char colon = 0;
    std::istringstream rs(o.range);
    if (!(rs >> lo >> colon >> hi) || colon != ':' || !rs.eof()) throw UsageError("--range expects a:b");
    if (lo < 4 || hi < lo) throw UsageError("--range needs 4 <= a <= b");
    if (!o.format.empty() && o.format != "csv") throw UsageError("bench supports --format csv");
    const auto rows = compare_table(lo, hi, default_threads());
    write_out(o.output, to_csv(rows));
    if (!o.check_paper) return kOk;
    int bad = 0;
    for (const auto& row : rows) {
        for (const auto& d : diff_reference(row)) {
            std::cerr << "mismatch: " << d << '\n';
            ++bad;
        }
    }
    std::cerr << (bad ? "reference check FAILED: " : "reference check passed: ") << bad << " mismatching values\n";
    return bad ? kCheckFailed : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toffoli-forge: one-clean-ancilla multi-controlled Toffoli synthesis"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sc) {
        sc->add_option("--n", o.n, "number of controls");
        sc->add_option("--method", o.method, "static|ccix|mixed");
        sc->add_option("--mode", o.mode, "worst|best|static accounting");
    };
    auto* synth = app.add_subcommand("synth", "synthesize a CnX circuit");
    add_common(synth);
    synth->add_option("--format", o.format, "qasm|canonical");
    synth->add_option("-o,--output", o.output, "output file");

    auto* an = app.add_subcommand("analyze", "resource counts and scheduled T-depth");
    add_common(an);
    an->add_option("--input", o.input, "canonical circuit file");

    auto* ver = app.add_subcommand("verify", "check a circuit against the CnX oracle");
    add_common(ver);
    ver->add_option("--input", o.input, "canonical circuit file");
    ver->add_option("--tolerance", o.tolerance, "amplitude tolerance");
    ver->add_option("--seed", o.seed, "seed for sampled inputs");

    auto* bench = app.add_subcommand("bench", "comparison table as CSV");
    bench->add_option("--range", o.range, "a:b");
    bench->add_option("--format", o.format, "csv");
    bench->add_option("-o,--output", o.output, "output file");
    bench->add_flag("--check-paper", o.check_paper, "compare with the published reference rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*synth) return cmd_synth(o);
        if (*an) return cmd_analyze(o);
        if (*ver) {
            if (o.input.empty() && o.n < 2) throw UsageError("verify needs --n >= 2 or --input");
            return cmd_verify(o);
        }
        if (*bench) return cmd_bench(o);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const CircuitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    return kUsage;
}
