// qcl — command line front end for the qsv simulator.
//
//   qcl run <file> [--seed N] [--shots K] [--trace] [--tol T] [--format F]
//   qcl deutsch --oracle FF,FT [--seed N] [--trace] [--format F]
//   qcl verify <matrix-file> [--tol T] [--format F]
//
// Exit status: 0 on success, 1 on diagnostics or input errors, 2 on usage
// errors.

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qsv/qsv.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1;
constexpr int kExitUsage = 2;

struct RunArgs {
    std::string file;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> shots;
    bool trace = false;
    double tol = qsv::kDefaultTol;
    std::string format = "text";
};

struct DeutschArgs {
    std::string oracle;
    std::uint64_t seed = 0;
    bool trace = false;
    std::string format = "text";
};

struct VerifyArgs {
    std::string file;
    double tol = qsv::kDefaultTol;
    std::string format = "text";
};

int run_command(const RunArgs& args) {
    std::ifstream in(args.file);
    if (!in) {
        std::cerr << "error: cannot open '" << args.file << "'\n";
        return kExitDiagnostics;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();

    const qsv::qcl::ParseResult parsed = qsv::qcl::parse(buffer.str());
    if (!parsed.ok()) {
        std::cerr << qsv::qcl::format_diagnostics(parsed.diagnostics);
        return kExitDiagnostics;
    }
    const qsv::qcl::Program& program = *parsed.program;

    const std::filesystem::path base_dir =
        std::filesystem::path(args.file).parent_path();
    const auto problems = qsv::qcl::check(program, args.tol, base_dir);
    if (!problems.empty()) {
        std::cerr << qsv::qcl::format_diagnostics(problems);
        return kExitDiagnostics;
    }

    if (args.shots && !program.has_measure()) {
        std::cerr << "note: program has no measure directive; --shots ignored\n";
    }

    qsv::qcl::ExecOptions options;
    options.seed = args.seed;
    options.shots_override = args.shots;
    options.trace = args.trace;
    options.tol = args.tol;
    options.base_dir = base_dir;

    qsv::qcl::Report report = qsv::qcl::exec(program, options);
    report.program_name = args.file;

    if (args.format == "json") {
        std::cout << qsv::qcl::render_json(report) << "\n";
    } else {
        std::cout << qsv::qcl::render_text(report);
    }
    return kExitOk;
}

bool parse_oracle_bits(const std::string& text, int& ff, int& ft) {
    const std::size_t comma = text.find(',');
    if (comma == std::string::npos) return false;
    const std::string first = text.substr(0, comma);
    const std::string second = text.substr(comma + 1);
    auto parse_bit = [](const std::string& s, int& out) {
        if (s != "0" && s != "1") return false;
        out = (s == "1") ? 1 : 0;
        return true;
    };
    return parse_bit(first, ff) && parse_bit(second, ft);
}

int deutsch_command(const DeutschArgs& args) {
    int ff = 0;
    int ft = 0;
    if (!parse_oracle_bits(args.oracle, ff, ft)) {
        std::cerr << "error: --oracle expects two bits as FF,FT (e.g. 0,1)\n";
        return kExitUsage;
    }

    qsv::RandomSource rng(args.seed);
    const qsv::DeutschReport report =
        qsv::run_deutsch(qsv::OracleSpec(ff, ft), rng);

    if (args.format == "json") {
        nlohmann::ordered_json doc;
        doc["oracle"] = {{"f_false", ff}, {"f_true", ft}};
        doc["outcome"] = report.outcome;
        doc["outcome_name"] = qsv::basis_name4(report.outcome);
        doc["xor"] = report.xor_value;
        doc["probability"] =
            qsv::detail::round_significant(report.outcome_probability, 12);
        if (args.trace) {
            nlohmann::ordered_json trace;
            for (const auto& [label, state] : report.stages()) {
                trace[label] = qsv::qcl::report_detail::state_json(*state);
            }
            doc["trace"] = std::move(trace);
        }
        doc["seed"] = args.seed;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "oracle: F_False=" << ff << " F_True=" << ft << "\n"
                  << "outcome: " << report.outcome << " ("
                  << qsv::basis_name4(report.outcome) << ")\n"
                  << "xor: " << (report.xor_value ? "true" : "false") << "\n"
                  << "probability: "
                  << qsv::detail::format_significant(report.outcome_probability,
                                                     6)
                  << "\n";
        if (args.trace) {
            std::cout << "trace:\n";
            for (const auto& [label, state] : report.stages()) {
                std::cout << "  " << label << ": "
                          << qsv::qcl::report_detail::state_text(*state) << "\n";
            }
        }
        std::cout << "seed: " << args.seed << "\n";
    }
    return kExitOk;
}

int verify_command(const VerifyArgs& args) {
    qsv::Matrix matrix(1, 1);
    try {
        matrix = qsv::read_matrix_file(args.file);
    } catch (const qsv::MatrixParseError& e) {
        std::cerr << "error: " << args.file << ": " << e.what() << "\n";
        return kExitDiagnostics;
    } catch (const qsv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDiagnostics;
    }

    const double deviation = qsv::unit_deviation(matrix);
    const bool unit = deviation < args.tol;

    if (args.format == "json") {
        nlohmann::ordered_json doc;
        doc["file"] = args.file;
        doc["unit"] = unit;
        doc["max_deviation"] = qsv::detail::round_significant(deviation, 12);
        doc["tol"] = args.tol;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << (unit ? "unit" : "not unit") << ", max deviation "
                  << qsv::detail::format_significant(deviation, 6) << " (tol "
                  << qsv::detail::format_significant(args.tol, 6) << ")\n";
    }
    return unit ? kExitOk : kExitDiagnostics;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"qsv quantum state-vector simulator"};
    app.require_subcommand(1);

    RunArgs run_args;
    CLI::App* run = app.add_subcommand("run", "Parse, check and execute a circuit file");
    run->add_option("file", run_args.file, "Circuit file")->required();
    run->add_option("--seed", run_args.seed, "Random seed (default 0)");
    run->add_option("--shots", run_args.shots,
                    "Override the measure directive's shot count");
    run->add_flag("--trace", run_args.trace, "Record per-step state snapshots");
    run->add_option("--tol", run_args.tol, "Unit-check tolerance (default 1e-9)");
    run->add_option("--format", run_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    DeutschArgs deutsch_args;
    CLI::App* deutsch = app.add_subcommand(
        "deutsch", "Run the Deutsch-Jozsa circuit for an oracle FF,FT");
    deutsch->add_option("--oracle", deutsch_args.oracle,
                        "Oracle bits F_False,F_True (e.g. 0,1)")
        ->required();
    deutsch->add_option("--seed", deutsch_args.seed, "Random seed (default 0)");
    deutsch->add_flag("--trace", deutsch_args.trace,
                      "Print the intermediate states");
    deutsch->add_option("--format", deutsch_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand(
        "verify", "Check whether a matrix file holds a unit matrix");
    verify->add_option("file", verify_args.file, "Matrix file")->required();
    verify->add_option("--tol", verify_args.tol,
                       "Unit-check tolerance (default 1e-9)");
    verify->add_option("--format", verify_args.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "run 'qcl --help' for usage\n";
        return kExitUsage;
    }

    try {
        if (run->parsed()) return run_command(run_args);
        if (deutsch->parsed()) return deutsch_command(deutsch_args);
        if (verify->parsed()) return verify_command(verify_args);
    } catch (const qsv::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDiagnostics;
    }
    return kExitUsage;
}
