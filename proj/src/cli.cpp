#include "qfa/cli.hpp"

#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qfa/errors.hpp"
#include "qfa/exact_rotation.hpp"
#include "qfa/family.hpp"
#include "qfa/oracle.hpp"
#include "qfa/promise.hpp"
#include "qfa/serialize.hpp"

namespace qfa {

namespace {

// Lengths are accepted up to a billion; the O(1) DFA formula and the integer
// exact path handle that for free. The general float simulator walks every
// step, so it gets a much lower cap instead of quietly accumulating error.
constexpr std::uint64_t kMaxInputLength = 1'000'000'000;
constexpr std::uint64_t kFloatStepCap = 1'000'000;

enum class Format { Plain, Csv, Json };

const std::map<std::string, Format> kTextFormats{{"plain", Format::Plain}, {"json", Format::Json}};
const std::map<std::string, Format> kTableFormats{
    {"plain", Format::Plain}, {"csv", Format::Csv}, {"json", Format::Json}};

const char* to_string(Classification c) {
    switch (c) {
        case Classification::Yes: return "Yes";
        case Classification::No: return "No";
        default: return "OutsidePromise";
    }
}

const char* to_string(ExactKind kind) {
    switch (kind) {
        case ExactKind::ExactlyAccept: return "accept";
        case ExactKind::ExactlyReject: return "reject";
        default: return "intermediate";
    }
}

std::string format_states(const std::set<std::uint32_t>& states) {
    std::string text = "{";
    for (auto state : states) {
        if (text.size() > 1) text += ',';
        text += std::to_string(state);
    }
    return text + "}";
}

struct SimulateArgs {
    std::string machine_path;
    std::optional<std::uint32_t> k;
    std::uint32_t l = 0;
    std::uint64_t length = 0;
    std::optional<std::uint64_t> n;
    Format format = Format::Plain;
};

int cmd_simulate(const SimulateArgs& args, std::ostream& out, std::ostream& err) {
    const auto promise_of = [&args](std::uint64_t period) {
        return to_string(classify(PromiseSpec{period}, args.length));
    };
    if (args.k) {
        const FamilyParams params{*args.k, args.l};
        const std::uint64_t n = params.period();
        const RotationMachine rotation{2 * n};
        const ExactOutcome outcome = exact_run(rotation, args.length);
        if (args.format == Format::Json) {
            out << nlohmann::json{{"n", n},
                                  {"length", args.length},
                                  {"exact", to_string(outcome.kind)},
                                  {"angle_index", outcome.angle.index},
                                  {"probability", outcome.probability},
                                  {"promise", promise_of(n)}}
                       .dump(2)
                << '\n';
            return 0;
        }
        if (outcome.kind == ExactKind::ExactlyAccept) {
            out << "exact: ACCEPT (prob 1), promise: " << promise_of(n) << '\n';
        } else if (outcome.kind == ExactKind::ExactlyReject) {
            out << "exact: REJECT (prob 0), promise: " << promise_of(n) << '\n';
        } else {
            out << "prob " << outcome.probability << ", promise: " << promise_of(n) << '\n';
        }
        return 0;
    }

    const Machine machine = load_machine(args.machine_path);
    if (const auto* quantum = std::get_if<Mcqfa>(&machine)) {
        if (args.length > kFloatStepCap) {
            err << "error: length " << args.length << " exceeds the float simulation cap of "
                << kFloatStepCap << " steps\n";
            return 2;
        }
        const QuantumRunResult result = run_mcqfa(*quantum, args.length);
        if (args.format == Format::Json) {
            nlohmann::json doc{{"length", args.length}, {"probability", result.accept_probability}};
            if (args.n) doc["promise"] = promise_of(*args.n);
            out << doc.dump(2) << '\n';
            return 0;
        }
        out << "prob " << result.accept_probability;
        if (args.n) out << ", promise: " << promise_of(*args.n);
        out << '\n';
        return 0;
    }

    const auto& dfa = std::get<UnaryDfa>(machine);
    const bool accepted = run_unary_dfa(dfa, args.length);
    if (args.format == Format::Json) {
        nlohmann::json doc{{"length", args.length},
                           {"accept", accepted},
                           {"state", state_after(dfa, args.length)}};
        if (args.n) doc["promise"] = promise_of(*args.n);
        out << doc.dump(2) << '\n';
        return 0;
    }
    out << "verdict: " << (accepted ? "accept" : "reject");
    if (args.n) out << ", promise: " << promise_of(*args.n);
    out << '\n';
    return 0;
}

struct VerifyArgs {
    std::string machine_path;
    std::optional<std::uint32_t> k;
    std::uint32_t l = 0;
    std::optional<std::uint64_t> n;
    std::uint64_t max_blocks = 16;
    double tolerance = 1e-9;
    Format format = Format::Plain;
};

int report_verify(Format format, std::uint64_t period, const nlohmann::json& detail,
                  std::optional<std::uint64_t> counterexample, std::ostream& out) {
    if (format == Format::Json) {
        nlohmann::json doc = detail;
        doc["n"] = period;
        doc["pass"] = !counterexample.has_value();
        doc["counterexample"] = counterexample ? nlohmann::json(*counterexample) : nlohmann::json(nullptr);
        out << doc.dump(2) << '\n';
    } else if (counterexample) {
        out << "FAIL: counterexample at length " << *counterexample << '\n';
    } else {
        out << "PASS: n=" << period;
        for (const auto& [key, value] : detail.items()) {
            out << ", " << key << "=" << (value.is_string() ? value.get<std::string>() : value.dump());
        }
        out << '\n';
    }
    return counterexample ? 1 : 0;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    if (args.k) {
        const FamilyParams params{*args.k, args.l};
        const std::uint64_t n = params.period();
        const auto quantum = family_counterexample(n, args.max_blocks);
        if (quantum) return report_verify(args.format, n, {}, quantum, out);
        nlohmann::json detail{{"blocks", args.max_blocks}};
        std::optional<std::uint64_t> classical;
        if (n <= (std::uint64_t{1} << 22)) {
            const UnaryDfa dfa = build_min_dfa(params);
            classical = dfa_counterexample(dfa, PromiseSpec{n});
            detail["dfa_states"] = total_states(dfa);
        } else {
            detail["dfa"] = "skipped (period too large to build explicitly)";
        }
        return report_verify(args.format, n, detail, classical, out);
    }

    const std::uint64_t n = *args.n;
    const Machine machine = load_machine(args.machine_path);
    if (const auto* quantum = std::get_if<Mcqfa>(&machine)) {
        const std::uint64_t max_length = args.max_blocks * n;
        if (max_length > kFloatStepCap) {
            err << "error: scanning " << max_length << " lengths exceeds the float simulation cap of "
                << kFloatStepCap << " steps\n";
            return 2;
        }
        const auto counterexample = mcqfa_counterexample(*quantum, PromiseSpec{n}, max_length, args.tolerance);
        nlohmann::json detail{{"max_length", max_length}, {"tolerance", args.tolerance}};
        return report_verify(args.format, n, detail, counterexample, out);
    }

    const auto& dfa = std::get<UnaryDfa>(machine);
    const auto counterexample = dfa_counterexample(dfa, PromiseSpec{n});
    nlohmann::json detail{{"dfa_states", total_states(dfa)}};
    return report_verify(args.format, n, detail, counterexample, out);
}

struct SearchArgs {
    std::uint64_t n = 1;
    std::uint32_t max_states = 1;
    unsigned threads = 0;
    Format format = Format::Plain;
};

int cmd_search(const SearchArgs& args, std::ostream& out) {
    const SearchReport report = min_dfa_search(args.n, args.max_states, args.threads);
    if (args.format == Format::Json) {
        out << to_json(report).dump(2) << '\n';
        return 0;
    }
    out << "n: " << report.period << '\n';
    out << "max_states: " << report.max_states << '\n';
    if (report.minimal_states) {
        out << "minimal_states: " << *report.minimal_states << '\n';
        out << "witness: tail=" << report.witness->tail_len << " cycle=" << report.witness->cycle_len
            << " accepting=" << format_states(report.witness->accepting) << '\n';
    } else {
        out << "minimal_states: none\n";
        out << "witness: none\n";
    }
    out << "machines_checked: " << report.machines_checked << '\n';
    return 0;
}

struct TableArgs {
    std::uint32_t k_max = 1;
    Format format = Format::Csv;
};

int cmd_table(const TableArgs& args, std::ostream& out) {
    const std::vector<FamilyRow> rows = family_table(args.k_max);
    if (args.format == Format::Json) {
        nlohmann::json doc = nlohmann::json::array();
        for (const auto& row : rows) {
            doc.push_back({{"k", row.k},
                           {"N", row.n},
                           {"qfa_states", row.qfa_states},
                           {"dfa_states", row.dfa_states},
                           {"provenance", to_string(row.provenance)}});
        }
        out << doc.dump(2) << '\n';
        return 0;
    }
    if (args.format == Format::Csv) {
        out << "k,N,qfa_states,dfa_states,provenance\n";
        for (const auto& row : rows) {
            out << row.k << ',' << row.n << ',' << row.qfa_states << ',' << row.dfa_states << ','
                << to_string(row.provenance) << '\n';
        }
        return 0;
    }
    out << std::left << std::setw(4) << "k" << std::setw(12) << "N" << std::setw(12) << "qfa_states"
        << std::setw(12) << "dfa_states" << "provenance\n";
    for (const auto& row : rows) {
        out << std::left << std::setw(4) << row.k << std::setw(12) << row.n << std::setw(12)
            << row.qfa_states << std::setw(12) << row.dfa_states << to_string(row.provenance) << '\n';
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Simulator and verifier for unary measure-once quantum automata"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Run one machine on a^m and print the outcome");
    auto* sim_file = simulate->add_option("machine", sim.machine_path, "Machine file (JSON)")
                         ->check(CLI::ExistingFile);
    auto* sim_k = simulate->add_option("--k", sim.k, "Family parameter k (period 2^k * (2l+1))")
                      ->check(CLI::Range(0u, 40u));
    simulate->add_option("--l", sim.l, "Family parameter l")->needs(sim_k)->check(CLI::Range(0u, 1u << 20));
    simulate->add_option("--length", sim.length, "Input length m")
        ->required()
        ->check(CLI::Range(std::uint64_t{0}, kMaxInputLength));
    simulate->add_option("--n", sim.n, "Promise period for classifying m")
        ->check(CLI::Range(std::uint64_t{1}, kMaxInputLength))
        ->excludes(sim_k)
        ->needs(sim_file);
    simulate->add_option("--format", sim.format, "Output format")
        ->transform(CLI::CheckedTransformer(kTextFormats, CLI::ignore_case));
    sim_file->excludes(sim_k);

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Check a machine against the promise, exit 1 on failure");
    auto* ver_k = verify->add_option("--k", ver.k, "Family parameter k")->check(CLI::Range(0u, 40u));
    verify->add_option("--l", ver.l, "Family parameter l")->needs(ver_k)->check(CLI::Range(0u, 1u << 20));
    auto* ver_file = verify->add_option("--machine", ver.machine_path, "Machine file to verify")
                         ->check(CLI::ExistingFile)
                         ->excludes(ver_k);
    auto* ver_n = verify->add_option("--n", ver.n, "Promise period for the machine file")
                      ->check(CLI::Range(std::uint64_t{1}, kMaxInputLength))
                      ->needs(ver_file);
    ver_file->needs(ver_n);
    verify->add_option("--max-blocks", ver.max_blocks, "Constrained multiples of N to check")
        ->check(CLI::Range(std::uint64_t{1}, kMaxInputLength));
    verify->add_option("--tolerance", ver.tolerance, "Float path tolerance")
        ->check(CLI::Range(0.0, 1.0));
    verify->add_option("--format", ver.format, "Output format")
        ->transform(CLI::CheckedTransformer(kTextFormats, CLI::ignore_case));

    SearchArgs sea;
    auto* search = app.add_subcommand("search", "Exhaustive minimal-DFA search for the promise");
    search->add_option("--n", sea.n, "Promise period")
        ->required()
        ->check(CLI::Range(std::uint64_t{1}, kMaxInputLength));
    search->add_option("--max-states", sea.max_states, "Largest machine size to try")
        ->required()
        ->check(CLI::Range(1u, kMaxSearchStates));
    search->add_option("--threads", sea.threads, "Worker threads (0 = auto)")->check(CLI::Range(0u, 64u));
    search->add_option("--format", sea.format, "Output format")
        ->transform(CLI::CheckedTransformer(kTextFormats, CLI::ignore_case));

    TableArgs tab;
    auto* table = app.add_subcommand("table", "Quantum vs classical state counts per family index");
    table->add_option("--k-max", tab.k_max, "Largest family index k")
        ->required()
        ->check(CLI::Range(1u, 40u));
    table->add_option("--format", tab.format, "Output format")
        ->transform(CLI::CheckedTransformer(kTableFormats, CLI::ignore_case));

    std::string output_path;
    for (auto* sub : {simulate, verify, search, table}) {
        sub->add_option("-o,--output", output_path, "Write the report here instead of stdout");
    }

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("qfa");
    for (const auto& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (simulate->parsed() && !sim.k && sim.machine_path.empty()) {
            throw std::invalid_argument("simulate needs a machine file or --k");
        }
        if (verify->parsed() && !ver.k && ver.machine_path.empty()) {
            throw std::invalid_argument("verify needs --k or --machine with --n");
        }

        std::ofstream file_out;
        if (!output_path.empty()) {
            file_out.open(output_path);
            if (!file_out) throw std::invalid_argument("cannot open output file: " + output_path);
        }
        std::ostream& sink = output_path.empty() ? out : file_out;
        sink << std::setprecision(12);

        if (simulate->parsed()) return cmd_simulate(sim, sink, err);
        if (verify->parsed()) return cmd_verify(ver, sink, err);
        if (search->parsed()) return cmd_search(sea, sink);
        return cmd_table(tab, sink);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvariantError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace qfa
