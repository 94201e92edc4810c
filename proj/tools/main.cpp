// qhash: command-line driver for the quantum hashing laboratory.
//
// Exit codes: 0 success / target met, 1 target not met (or signature rejected),
// 2 usage or input error.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qhash/qhash.hpp"
#include "report.hpp"

#ifndef QHASH_FIXTURES_DIR
#define QHASH_FIXTURES_DIR "fixtures/paper-tables"
#endif

namespace fs = std::filesystem;
using namespace qhash;
using qhash::cli::Format;
using qhash::cli::Report;
using Json = Report::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTargetMissed = 1;
constexpr int kExitUsage = 2;

struct Common {
    std::uint64_t seed = 1;
    std::uint64_t shots = 10000;
    std::string format = "text";
    std::string keyset;
    std::string out;
};

Format format_of(const Common& c) { return c.format == "json" ? Format::Json : Format::Text; }

void add_format(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}
void add_seed(CLI::App* cmd, Common& c) { cmd->add_option("--seed", c.seed, "RNG seed (echoed in the report)"); }
void add_shots(CLI::App* cmd, Common& c) {
    cmd->add_option("--shots", c.shots, "Number of shots")->check(CLI::PositiveNumber);
}
void add_keyset(CLI::App* cmd, Common& c, bool required = true) {
    auto* opt = cmd->add_option("--keyset", c.keyset, "Key-set file");
    if (required) opt->required();
}

void emit(const Report& r, const Common& c) { r.write(std::cout, format_of(c)); }

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

// ---------------------------------------------------------------- bias

int cmd_bias(const Common& c) {
    const auto ks = load_keyset(c.keyset);
    const auto p = bias_profile(ks);
    Report r;
    r.field("command", "bias");
    r.field("keyset", c.keyset);
    r.field("N", ks.modulus());
    r.field("d", ks.size());
    r.field("epsilon_declared", ks.epsilon_field());
    r.field("delta", p.delta);
    r.field("lambda", p.lambda);
    r.field("worst_shift_delta", p.worst_shift_delta);
    r.field("worst_shift_lambda", p.worst_shift_lambda);
    emit(r, c);
    return kExitOk;
}

// ---------------------------------------------------------------- verify-tables

struct TableOptions {
    std::string fixtures = QHASH_FIXTURES_DIR;
    std::uint64_t max_n = 16384;
    double bound = 0.01;
    double rounding = 5e-4;
};

int cmd_verify_tables(const Common& c, const TableOptions& o) {
    Report r;
    r.field("command", "verify-tables");
    r.field("fixtures", o.fixtures);
    r.field("max_N", o.max_n);
    r.field("bound", o.bound);
    std::vector<fs::path> files;
    if (fs::is_directory(o.fixtures)) {
        for (const auto& e : fs::directory_iterator(o.fixtures))
            if (e.path().extension() == ".keyset") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    if (files.empty()) std::cerr << "warning: no .keyset fixtures found in '" << o.fixtures << "'\n";

    std::size_t passed = 0, failed = 0, skipped = 0, mismatched = 0;
    for (const auto& path : files) {
        KeySet ks = load_keyset(path.string());
        if (ks.modulus() > o.max_n) {
            ++skipped;
            continue;
        }
        const double delta = bias_profile(ks).delta;
        const auto printed = ks.declared_epsilon();
        const double bound = o.bound;
        const bool pass = delta <= bound;
        const bool rounding_ok = printed && std::abs(delta - *printed) <= o.rounding;
        pass ? ++passed : ++failed;
        if (!rounding_ok) ++mismatched;
        Json row = Json::object();
        row["row"] = path.filename().string();
        row["N"] = ks.modulus();
        row["d"] = ks.size();
        row["printed"] = ks.epsilon_field();
        row["recomputed"] = fixed(delta, 6);
        row["status"] = pass ? "PASS" : "FAIL";
        row["printed_match"] = rounding_ok ? "yes" : "no";
        r.record("rows", row);
    }
    r.line(Json::object({{"rows_checked", passed + failed},
                         {"passed", passed},
                         {"failed", failed},
                         {"skipped", skipped},
                         {"printed_mismatches", mismatched}}));
    emit(r, c);
    return failed == 0 ? kExitOk : kExitTargetMissed;
}

// ---------------------------------------------------------------- search

struct SearchOptions {
    std::uint64_t modulus = 0;
    std::optional<std::size_t> d;
    std::optional<double> epsilon;
    double target = 0.01;
    std::string mode = "ga";
    std::size_t attempts = kDefaultSampleAttempts;
    bool progress = false;
    SearchConfig config;
};

int cmd_search(const Common& c, SearchOptions o) {
    CounterRng rng(c.seed);
    SearchOutcome outcome{KeySet(2, {0}), 1, 0, false};
    double target = 0;
    if (o.mode == "random") {
        if (!o.epsilon) throw std::invalid_argument("--epsilon is required for --mode random");
        target = *o.epsilon;
        outcome = sample_random_keyset(o.modulus, target, o.attempts, rng);
    } else {
        if (!o.d) throw std::invalid_argument("--d is required for --mode ga");
        target = o.epsilon.value_or(o.target);
        o.config.rng_seed = c.seed;
        SearchProgress progress;
        if (o.progress)
            progress = [](std::size_t g, double best) { std::cerr << "gen " << g << " best_delta " << best << '\n'; };
        outcome = ga_search(o.modulus, *o.d, target, o.config, rng, progress);
    }
    outcome.keyset.set_epsilon_field(Json(outcome.achieved_delta).dump());
    if (!c.out.empty()) save_keyset(outcome.keyset, c.out);

    Report r;
    r.field("command", "search");
    r.field("mode", o.mode);
    r.field("seed", c.seed);
    r.field("N", o.modulus);
    r.field("d", outcome.keyset.size());
    r.field("target", target);
    r.field("achieved_delta", outcome.achieved_delta);
    r.field("generations_used", outcome.generations_used);
    r.field("target_met", outcome.target_met);
    if (!c.out.empty()) r.field("out", c.out);
    emit(r, c);
    return outcome.target_met ? kExitOk : kExitTargetMissed;
}

// ---------------------------------------------------------------- hash / inner

void check_message(const HashParams& p, std::uint64_t m, const char* name) {
    if (m >= p.modulus())
        throw std::invalid_argument(std::string(name) + " must lie in [0, " + std::to_string(p.modulus()) + ")");
}

int cmd_hash(const Common& c, std::uint64_t message, bool dump_state) {
    const HashParams params(load_keyset(c.keyset));
    check_message(params, message, "--message");
    const auto psi = hash_state(params, message);
    Report r;
    r.field("command", "hash");
    r.field("keyset", c.keyset);
    r.field("N", params.modulus());
    r.field("d", params.d());
    r.field("qubits", params.qubits());
    r.field("message", message);
    r.field("norm", psi.amplitudes().norm());
    if (dump_state) {
        for (Eigen::Index i = 0; i < psi.dimension(); ++i) {
            if (format_of(c) == Format::Json) {
                r.record("state", Json::object({{"index", i}, {"re", psi[i].real()}, {"im", psi[i].imag()}}));
            } else {
                r.raw(std::to_string(i) + " " + Json(psi[i].real()).dump() + " " + Json(psi[i].imag()).dump() + "\n");
            }
        }
    }
    emit(r, c);
    return kExitOk;
}

int cmd_inner(const Common& c, std::uint64_t m1, std::uint64_t m2) {
    const HashParams params(load_keyset(c.keyset));
    check_message(params, m1, "--m1");
    check_message(params, m2, "--m2");
    const double analytic = hash_inner_product(params.keyset(), m1, m2);
    const auto a = hash_state(params, m1);
    const auto b = hash_state(params, m2);
    Report r;
    r.field("command", "inner");
    r.field("keyset", c.keyset);
    r.field("m1", m1);
    r.field("m2", m2);
    r.field("analytic", analytic);
    r.field("state", inner_product(a, b).real());
    r.field("swap_accept_probability", swap_test_accept_probability(a, b));
    r.field("reverse_accept_probability", reverse_test_accept_probability(params, m1, m2));
    emit(r, c);
    return kExitOk;
}

// ---------------------------------------------------------------- swap / reverse

double three_sigma(double p, std::uint64_t shots) { return 3 * std::sqrt(p * (1 - p) / static_cast<double>(shots)); }

int cmd_swap(const Common& c, std::uint64_t m1, std::uint64_t m2) {
    const HashParams params(load_keyset(c.keyset));
    check_message(params, m1, "--m1");
    check_message(params, m2, "--m2");
    CounterRng rng(c.seed);
    const auto a = hash_state(params, m1);
    const auto b = hash_state(params, m2);
    const double predicted = swap_test_accept_probability(a, b);
    const auto counts = swap_test(a, b, c.shots, rng);
    Report r;
    r.field("command", "swap-test");
    r.field("keyset", c.keyset);
    r.field("m1", m1);
    r.field("m2", m2);
    r.field("seed", c.seed);
    r.field("shots", c.shots);
    r.field("accepted", counts.accepted);
    r.field("rejected", counts.rejected);
    r.field("rate", counts.accept_rate());
    r.field("predicted", predicted);
    r.field("three_sigma", three_sigma(predicted, c.shots));
    emit(r, c);
    return kExitOk;
}

int cmd_reverse(const Common& c, std::uint64_t claimed, std::uint64_t actual) {
    const HashParams params(load_keyset(c.keyset));
    check_message(params, claimed, "--claimed");
    check_message(params, actual, "--message");
    CounterRng rng(c.seed);
    const auto psi = hash_state(params, actual);
    std::uint64_t accepted = 0;
    for (std::uint64_t shot = 0; shot < c.shots; ++shot) accepted += reverse_test(params, claimed, psi, rng).accepted;
    const double predicted = reverse_test_accept_probability(params, claimed, actual);
    Report r;
    r.field("command", "reverse-test");
    r.field("keyset", c.keyset);
    r.field("claimed", claimed);
    r.field("message", actual);
    r.field("seed", c.seed);
    r.field("shots", c.shots);
    r.field("accepted", accepted);
    r.field("rate", static_cast<double>(accepted) / static_cast<double>(c.shots));
    r.field("predicted", predicted);
    r.field("three_sigma", three_sigma(predicted, c.shots));
    emit(r, c);
    return kExitOk;
}

// ---------------------------------------------------------------- circuit-check

struct CircuitOptions {
    std::uint64_t modulus = 32;
    std::size_t d = 15;
    std::uint64_t trials = 100;
    std::optional<std::uint64_t> dump_message;
};

int cmd_circuit_check(const Common& c, const CircuitOptions& o) {
    CounterRng rng(c.seed);
    std::optional<KeySet> fixed_keys;
    if (!c.keyset.empty()) fixed_keys = load_keyset(c.keyset);
    const std::uint64_t modulus = fixed_keys ? fixed_keys->modulus() : o.modulus;
    if (!fixed_keys && (o.d == 0 || modulus < 2)) throw std::invalid_argument("need --modulus >= 2 and --d >= 1");

    Report r;
    r.field("command", "circuit-check");
    if (fixed_keys) r.field("keyset", c.keyset);
    r.field("N", modulus);
    r.field("d", fixed_keys ? fixed_keys->size() : o.d);
    r.field("seed", c.seed);
    r.field("trials", o.trials);

    if (o.dump_message) {
        const HashParams params(fixed_keys ? *fixed_keys : KeySet(modulus, std::vector<std::uint64_t>(o.d, 1)));
        check_message(params, *o.dump_message, "--dump-circuit");
        r.raw(format_circuit(build_hash_circuit(params, *o.dump_message)));
    }

    double worst = 0;
    for (std::uint64_t t = 0; t < o.trials; ++t) {
        auto trial_rng = rng.split(t);
        std::vector<std::uint64_t> keys;
        if (fixed_keys) {
            keys = fixed_keys->keys();
        } else {
            keys.resize(o.d);
            for (auto& k : keys) k = trial_rng.below(modulus);
        }
        const HashParams params(KeySet(modulus, std::move(keys)));
        const std::uint64_t m = trial_rng.below(modulus);
        const auto via_circuit = simulate_circuit(build_hash_circuit(params, m));
        const auto analytic = hash_state(params, m);
        worst = std::max(worst, (via_circuit.amplitudes() - analytic.amplitudes()).cwiseAbs().maxCoeff());
    }
    const bool ok = worst < 1e-10;
    r.field("max_deviation", worst);
    r.field("tolerance", 1e-10);
    r.field("status", ok ? "PASS" : "FAIL");
    emit(r, c);
    return ok ? kExitOk : kExitTargetMissed;
}

// ---------------------------------------------------------------- fingerprint

struct FingerprintOptions {
    int n = 4;
    int m = 12;
    std::string code_file;
    std::string u;
    std::string v;
};

int cmd_fingerprint(const Common& c, const FingerprintOptions& o) {
    CounterRng rng(c.seed);
    const LinearCode code = o.code_file.empty() ? random_linear_code(o.n, o.m, rng) : load_code(o.code_file);
    if (!c.out.empty()) save_code(code, c.out);
    Report r;
    r.field("command", "fingerprint");
    r.field("seed", c.seed);
    if (!o.code_file.empty()) r.field("code", o.code_file);
    r.field("n", code.n());
    r.field("m", code.m());
    if (const auto dist = min_distance(code)) {
        r.field("min_distance", *dist);
        r.field("resistance", fingerprint_resistance(code));
    } else {
        r.field("min_distance", "unavailable");
    }
    if (!o.u.empty() || !o.v.empty()) {
        const BitVector u = parse_bits(o.u.empty() ? std::string(static_cast<std::size_t>(code.n()), '0') : o.u);
        const BitVector v = parse_bits(o.v.empty() ? std::string(static_cast<std::size_t>(code.n()), '0') : o.v);
        const auto fu = fingerprint_state(code, u);
        const auto fv = fingerprint_state(code, v);
        r.field("u", format_bits(u));
        r.field("v", format_bits(v));
        r.field("codeword_u", format_bits(encode(code, u)));
        r.field("codeword_v", format_bits(encode(code, v)));
        r.field("analytic_inner", fingerprint_inner_product(code, u, v));
        r.field("state_inner", inner_product(fu, fv).real());
        const double p = swap_test_accept_probability(fu, fv);
        const auto counts = swap_test(fu, fv, c.shots, rng);
        r.field("shots", c.shots);
        r.field("swap_predicted", p);
        r.field("swap_rate", counts.accept_rate());
        std::uint64_t accepted = 0;
        for (std::uint64_t s = 0; s < c.shots; ++s) accepted += fingerprint_reverse_test(code, u, fv, rng).accepted;
        r.field("reverse_predicted", std::norm(inner_product(fu, fv)));
        r.field("reverse_rate", static_cast<double>(accepted) / static_cast<double>(c.shots));
    }
    if (!c.out.empty()) r.field("out", c.out);
    emit(r, c);
    return kExitOk;
}

// ---------------------------------------------------------------- signatures

struct SignOptions {
    std::uint64_t level = 0;
    int bit = 0;
    std::size_t recipients = 1;
    std::uint64_t signature = 0;
    std::uint64_t trials = 10000;
    bool log = true;
};

ProtocolParams protocol(const Common& c, const SignOptions& o) {
    HashParams hp(load_keyset(c.keyset));
    const std::uint64_t level = o.level ? o.level : hp.modulus();
    return ProtocolParams(std::move(hp), level, o.recipients);
}

int cmd_sign(const Common& c, const SignOptions& o) {
    const auto params = protocol(c, o);
    CounterRng rng(c.seed);
    const auto kp = keygen(params, rng);
    const auto sig = sign(kp, o.bit);
    Report r;
    r.field("command", "sign");
    r.field("keyset", c.keyset);
    r.field("L", params.security_level);
    r.field("seed", c.seed);
    r.field("recipients", params.recipients);
    r.field("public_key_qubits", params.hash.qubits());
    r.field("x0", kp.private_key[0]);
    r.field("x1", kp.private_key[1]);
    r.field("bit", o.bit);
    r.field("signature", sig);
    if (!c.out.empty()) {
        std::ofstream f(c.out);
        f << "bit " << o.bit << "\nsignature " << sig << "\nseed " << c.seed << "\nL " << params.security_level << '\n';
        r.field("out", c.out);
    }
    emit(r, c);
    return kExitOk;
}

int cmd_verify(const Common& c, const SignOptions& o) {
    const auto params = protocol(c, o);
    // The verifier's public copy is regenerated from the signer's seed.
    CounterRng keygen_rng(c.seed);
    const auto kp = keygen(params, keygen_rng);
    CounterRng verify_rng = CounterRng(c.seed).split(1);
    const auto result = verify(params, kp.public_copies.front(), o.bit, o.signature, verify_rng);
    Report r;
    r.field("command", "verify");
    r.field("keyset", c.keyset);
    r.field("L", params.security_level);
    r.field("seed", c.seed);
    r.field("bit", o.bit);
    r.field("signature", o.signature);
    r.field("outcome", result.record.outcome);
    r.field("outcome_probability", result.record.probability);
    r.field("accept_probability", reverse_test_accept_probability(
                                      params.hash, private_to_message(params, o.signature),
                                      private_to_message(params, kp.private_key[static_cast<std::size_t>(o.bit)])));
    r.field("accepted", result.accepted ? 1 : 0);
    emit(r, c);
    return result.accepted ? kExitOk : kExitTargetMissed;
}

int cmd_forge(const Common& c, const SignOptions& o) {
    const auto params = protocol(c, o);
    CounterRng rng(c.seed);
    const auto report = forgery_experiment(params, o.trials, rng);
    Report r;
    r.field("command", "forge-experiment");
    r.field("keyset", c.keyset);
    r.field("L", params.security_level);
    r.field("seed", c.seed);
    r.field("trials", o.trials);
    if (o.log) {
        for (std::size_t t = 0; t < report.trials.size(); ++t) {
            const auto& tr = report.trials[t];
            r.record("log", Json::object({{"trial", t},
                                          {"bit", tr.bit},
                                          {"guess", tr.guess},
                                          {"accepted", tr.accepted ? 1 : 0}}));
        }
    }
    r.field("three_sigma", three_sigma(report.predicted, o.trials));
    r.line(Json::object({{"rate", report.rate}, {"predicted", report.predicted}}));
    emit(r, c);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum hashing laboratory: epsilon-biased key sets, hash states, equality tests, signatures"};
    app.require_subcommand(1);
    Common c;

    auto* bias = app.add_subcommand("bias", "Character-sum bias profile of a key set");
    add_keyset(bias, c, false);
    bias->add_option("file", c.keyset, "Key-set file (alternative to --keyset)");
    add_format(bias, c);

    TableOptions table;
    auto* tables = app.add_subcommand("verify-tables", "Recompute delta(K) for the published table fixtures");
    tables->add_option("--fixtures", table.fixtures, "Fixture directory");
    tables->add_option("--max-N", table.max_n, "Largest modulus to check (2^20 for the full run)");
    tables->add_option("--bound", table.bound, "Pass threshold on delta(K)");
    tables->add_option("--rounding", table.rounding, "Tolerance for matching the printed value");
    add_format(tables, c);

    SearchOptions search;
    auto* srch = app.add_subcommand("search", "Search for a low-bias key set");
    srch->add_option("--modulus,-N", search.modulus, "Modulus N")->required()->check(CLI::Range(2ULL, 1ULL << 24));
    srch->add_option("--d", search.d, "Key-set size (ga mode)");
    srch->add_option("--epsilon", search.epsilon, "Target bias (random mode sizes the set from it)");
    srch->add_option("--target", search.target, "Target bias for ga mode when --epsilon is absent");
    srch->add_option("--mode", search.mode, "random|ga")->check(CLI::IsMember({"random", "ga"}));
    srch->add_option("--attempts", search.attempts, "Random draws before giving up");
    srch->add_option("--population", search.config.population_size);
    srch->add_option("--generations", search.config.generations);
    srch->add_option("--mutation", search.config.mutation_rate);
    srch->add_option("--crossover", search.config.crossover_rate);
    srch->add_option("--elitism", search.config.elitism_count);
    srch->add_flag("--progress", search.progress, "Stream `gen <g> best_delta <v>` to stderr");
    srch->add_option("--out", c.out, "Output key-set file");
    add_seed(srch, c);
    add_format(srch, c);

    std::uint64_t message = 0, m1 = 0, m2 = 0, claimed = 0;
    bool dump_state = false;
    auto* hash = app.add_subcommand("hash", "Build the hash state of a message");
    add_keyset(hash, c);
    hash->add_option("--message,-M", message)->required();
    hash->add_flag("--dump-state", dump_state, "Print `<index> <re> <im>` per basis state");
    add_format(hash, c);

    auto* inner = app.add_subcommand("inner", "Inner product of two hash states");
    add_keyset(inner, c);
    inner->add_option("--m1", m1)->required();
    inner->add_option("--m2", m2)->required();
    add_format(inner, c);

    auto* swap = app.add_subcommand("swap-test", "Sampled SWAP-test between two hash states");
    add_keyset(swap, c);
    swap->add_option("--m1", m1)->required();
    swap->add_option("--m2", m2)->required();
    add_seed(swap, c);
    add_shots(swap, c);
    add_format(swap, c);

    auto* reverse = app.add_subcommand("reverse-test", "Sampled REVERSE-test of a claimed message");
    add_keyset(reverse, c);
    reverse->add_option("--claimed", claimed)->required();
    reverse->add_option("--message", message)->required();
    add_seed(reverse, c);
    add_shots(reverse, c);
    add_format(reverse, c);

    CircuitOptions circuit;
    auto* check = app.add_subcommand("circuit-check", "Compare the rotation circuit with the analytic hash");
    add_keyset(check, c, false);
    check->add_option("--modulus,-N", circuit.modulus, "Modulus for random key sets");
    check->add_option("--d", circuit.d, "Size of random key sets");
    check->add_option("--trials", circuit.trials)->check(CLI::PositiveNumber);
    check->add_option("--dump-circuit", circuit.dump_message, "Also print the circuit for this message");
    add_seed(check, c);
    add_format(check, c);

    FingerprintOptions fp;
    auto* finger = app.add_subcommand("fingerprint", "Quantum fingerprints over a random linear code");
    finger->add_option("--n", fp.n, "Message bits")->check(CLI::Range(1, 30));
    finger->add_option("--m", fp.m, "Codeword bits")->check(CLI::Range(1, 1 << 20));
    finger->add_option("--code", fp.code_file, "Load the generator from a code file");
    finger->add_option("--u", fp.u, "First message as a bit string");
    finger->add_option("--v", fp.v, "Second message as a bit string");
    finger->add_option("--out", c.out, "Write the generator to a code file");
    add_seed(finger, c);
    add_shots(finger, c);
    add_format(finger, c);

    SignOptions so;
    auto* sgn = app.add_subcommand("sign", "Generate a key pair and sign one bit");
    add_keyset(sgn, c);
    sgn->add_option("--L", so.level, "Security level (default N)");
    sgn->add_option("--bit", so.bit)->required()->check(CLI::Range(0, 1));
    sgn->add_option("--recipients", so.recipients)->check(CLI::PositiveNumber);
    sgn->add_option("--out", c.out, "Write the signature record");
    add_seed(sgn, c);
    add_format(sgn, c);

    auto* ver = app.add_subcommand("verify", "Verify a signature against the public key of --seed");
    add_keyset(ver, c);
    ver->add_option("--L", so.level, "Security level (default N)");
    ver->add_option("--bit", so.bit)->required()->check(CLI::Range(0, 1));
    ver->add_option("--signature", so.signature)->required();
    add_seed(ver, c);
    add_format(ver, c);

    auto* forge = app.add_subcommand("forge-experiment", "Uniform-guess forgery against the signature scheme");
    add_keyset(forge, c);
    forge->add_option("--L", so.level, "Security level (default N)");
    forge->add_option("--trials", so.trials)->check(CLI::PositiveNumber);
    forge->add_flag("!--no-log", so.log, "Omit per-trial lines");
    add_seed(forge, c);
    add_format(forge, c);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*bias) {
            if (c.keyset.empty()) throw std::invalid_argument("a key-set file is required");
            return cmd_bias(c);
        }
        if (*tables) return cmd_verify_tables(c, table);
        if (*srch) return cmd_search(c, search);
        if (*hash) return cmd_hash(c, message, dump_state);
        if (*inner) return cmd_inner(c, m1, m2);
        if (*swap) return cmd_swap(c, m1, m2);
        if (*reverse) return cmd_reverse(c, claimed, message);
        if (*check) return cmd_circuit_check(c, circuit);
        if (*finger) return cmd_fingerprint(c, fp);
        if (*sgn) return cmd_sign(c, so);
        if (*ver) return cmd_verify(c, so);
        if (*forge) return cmd_forge(c, so);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
