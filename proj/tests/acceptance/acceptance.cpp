// Acceptance suite: exercises the headline guarantees end to end and
// prints one PASS/FAIL line per criterion. Exits nonzero if any fail.
//
// Usage: acceptance [circuits-dir]   (default: ./circuits)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "qsv/qsv.hpp"
#include "../support/generators.hpp"

namespace {

using namespace qsv;
namespace fs = std::filesystem;

int failures = 0;

void criterion(int number, const std::string& title,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << "  " << number << ". " << title;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++failures;
}

double elapsed_seconds(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
}

const std::vector<OracleSpec> all_specs = {
    OracleSpec(0, 0), OracleSpec(0, 1), OracleSpec(1, 0), OracleSpec(1, 1)};

bool deutsch_determinism(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t runs = 0;
    for (const OracleSpec& spec : all_specs) {
        const bool expected = classical_oracle_xor(spec);
        for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
            RandomSource rng(seed * 4 + spec.f_false * 2 + spec.f_true);
            const DeutschReport report = run_deutsch(spec, rng);
            const std::size_t want = expected ? 4 : 2;
            if (report.outcome != want || report.xor_value != expected ||
                report.outcome_probability < 1.0 - 1e-9) {
                detail = "deviation at spec (" + std::to_string(spec.f_false) +
                         "," + std::to_string(spec.f_true) + "), seed " +
                         std::to_string(seed);
                return false;
            }
            ++runs;
        }
    }
    const double seconds = elapsed_seconds(start);
    detail = std::to_string(runs) + " runs in " +
             qsv::detail::format_significant(seconds, 3) + " s";
    return seconds < 1.0;
}

bool intermediate_states(std::string& detail) {
    const State hv = evolve(State::basis(4, 2), hadamard4());
    const double hv_expected[4] = {0.5, -0.5, 0.5, -0.5};
    for (std::size_t i = 1; i <= 4; ++i) {
        if (std::abs(hv.amplitude(i).re - hv_expected[i - 1]) > 1e-12 ||
            std::abs(hv.amplitude(i).im) > 1e-12) {
            detail = "HV component " + std::to_string(i);
            return false;
        }
    }
    for (const OracleSpec& spec : all_specs) {
        const State uhv = evolve(hv, oracle_matrix(spec));
        const State huhv = evolve(uhv, hadamard4());
        const double ff = spec.f_false;
        const double ft = spec.f_true;
        const double expected[4] = {0.0, 1.0 - ff - ft, 0.0, ft - ff};
        for (std::size_t i = 1; i <= 4; ++i) {
            if (std::abs(huhv.amplitude(i).re - expected[i - 1]) > 1e-12 ||
                std::abs(huhv.amplitude(i).im) > 1e-12) {
                detail = "HUHV component " + std::to_string(i) + " for (" +
                         std::to_string(spec.f_false) + "," +
                         std::to_string(spec.f_true) + ")";
                return false;
            }
        }
    }
    return true;
}

bool property_suites(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    testing::Rng rng(2026);
    std::uniform_int_distribution<std::size_t> dims(1, 8);

    for (int trial = 0; trial < 1000; ++trial) {
        const Matrix a = testing::random_matrix(rng, dims(rng), dims(rng));
        if (!approx_equal(a * identity(a.cols()), a, 1e-12)) {
            detail = "A*I deviated at trial " + std::to_string(trial);
            return false;
        }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = dims(rng);
        const Matrix a = testing::random_matrix(rng, dims(rng), n);
        const Matrix b = testing::random_matrix(rng, n, dims(rng));
        if (!approx_equal(dagger(a * b), dagger(b) * dagger(a), 1e-9)) {
            detail = "(AB)+ deviated at trial " + std::to_string(trial);
            return false;
        }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const Matrix v = testing::random_unit_column(rng, dims(rng));
        double sum = 0.0;
        for (std::size_t i = 1; i <= v.rows(); ++i) {
            const double mag = norm(v.at(i, 1));
            sum += mag * mag;
        }
        if (std::abs(sum - 1.0) > 1e-8) {
            detail = "column norm sum deviated at trial " +
                     std::to_string(trial);
            return false;
        }
    }
    const double seconds = elapsed_seconds(start);
    detail = "3x1000 instances in " +
             qsv::detail::format_significant(seconds, 3) + " s";
    return seconds < 5.0;
}

bool unitarity_oracles(std::string& detail) {
    if (!is_unit(hadamard4(), 1e-12)) {
        detail = "H failed at 1e-12";
        return false;
    }
    for (const OracleSpec& spec : all_specs) {
        if (!is_unit(oracle_matrix(spec), 1e-12)) {
            detail = "oracle (" + std::to_string(spec.f_false) + "," +
                     std::to_string(spec.f_true) + ") failed at 1e-12";
            return false;
        }
    }
    const Matrix product =
        testing::brute_force_multiply(hadamard4(), hadamard4());
    if (!approx_equal(product, identity(4), 1e-12)) {
        detail = "H*H != I (independent product)";
        return false;
    }
    return true;
}

bool measurement_statistics(std::string& detail) {
    const double s = 1.0 / std::sqrt(2.0);
    const State coin(Matrix(2, 1, {{s, 0.0}, {s, 0.0}}));

    const Histogram histogram = sample(coin, 10000, 20260809);
    const std::uint64_t heads = histogram.count(1) ? histogram.at(1) : 0;
    const double frequency = static_cast<double>(heads) / 10000.0;
    if (frequency < 0.485 || frequency > 0.515) {
        detail = "outcome-1 frequency " +
                 qsv::detail::format_significant(frequency, 6);
        return false;
    }

    RandomSource rng(7);
    const MeasurementRecord first = measure(coin, rng);
    for (int repeat = 0; repeat < 100; ++repeat) {
        if (measure(first.collapsed, rng).outcome != first.outcome) {
            detail = "collapse inconsistency at repeat " +
                     std::to_string(repeat);
            return false;
        }
    }
    detail = "frequency " + qsv::detail::format_significant(frequency, 4) +
             ", collapse 100/100";
    return true;
}

bool evolution_closure(std::string& detail) {
    testing::Rng rng(31337);
    const std::size_t dims[] = {2, 4, 8};
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t dim = dims[trial % 3];
        State state(testing::random_unit_column(rng, dim));
        const std::size_t hops = 1 + trial % 4;
        for (std::size_t hop = 0; hop < hops; ++hop) {
            Matrix u = testing::random_unit_matrix(rng, dim);
            if (dim == 4 && rng() % 2 == 0) {
                u = (rng() % 2 == 0)
                        ? hadamard4()
                        : oracle_matrix(all_specs[rng() % 4]);
            }
            if (!is_unit(u, 1e-9)) {
                detail = "generator produced a non-unit evolution";
                return false;
            }
            state = evolve(state, u, 1e-9);
        }
        try {
            State revalidated(state.column(), 1e-9);
        } catch (const NotUnit& e) {
            detail = "trial " + std::to_string(trial) + ": deviation " +
                     qsv::detail::format_significant(e.deviation(), 6);
            return false;
        }
    }
    return true;
}

struct Expectation {
    std::string stage; // "parse" or "check"
    std::string code;
    std::size_t line;
};

// Reads the "# expect: <stage> <Code> @<line>" annotation, if present.
std::optional<Expectation> read_expectation(const fs::path& file) {
    std::ifstream in(file);
    std::string first_line;
    std::getline(in, first_line);
    static const std::regex pattern(
        R"(#\s*expect:\s*(parse|check)\s+(\w+)\s+@(\d+))");
    std::smatch match;
    if (!std::regex_search(first_line, match, pattern)) return std::nullopt;
    return Expectation{match[1], match[2],
                       static_cast<std::size_t>(std::stoul(match[3]))};
}

std::string read_file(const fs::path& file) {
    std::ifstream in(file);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string mask_duration(std::string json) {
    static const std::regex pattern("\"duration_ms\": [^\n,}]+");
    return std::regex_replace(json, pattern, "\"duration_ms\": 0");
}

bool corpus_replay(const fs::path& circuits_dir, std::string& detail) {
    std::vector<fs::path> valid_files;
    std::vector<fs::path> bad_files;
    for (const auto& entry : fs::directory_iterator(circuits_dir)) {
        if (entry.path().extension() == ".qcl") {
            valid_files.push_back(entry.path());
        }
    }
    for (const auto& entry : fs::directory_iterator(circuits_dir / "bad")) {
        if (entry.path().extension() == ".qcl") {
            bad_files.push_back(entry.path());
        }
    }
    std::sort(valid_files.begin(), valid_files.end());
    std::sort(bad_files.begin(), bad_files.end());

    if (valid_files.size() + bad_files.size() < 15) {
        detail = "corpus has only " +
                 std::to_string(valid_files.size() + bad_files.size()) +
                 " files";
        return false;
    }

    for (const fs::path& file : valid_files) {
        const qcl::ParseResult parsed = qcl::parse(read_file(file));
        if (!parsed.ok()) {
            detail = file.filename().string() + " failed to parse";
            return false;
        }
        const qcl::ParseResult reparsed =
            qcl::parse(qcl::pretty_print(*parsed.program));
        if (!reparsed.ok() ||
            !qcl::structurally_equal(*parsed.program, *reparsed.program)) {
            detail = file.filename().string() + " pretty-print round trip";
            return false;
        }
        const auto diags =
            qcl::check(*parsed.program, kDefaultTol, file.parent_path());
        if (!diags.empty()) {
            detail = file.filename().string() + " failed check";
            return false;
        }
        qcl::ExecOptions options;
        options.seed = 12345;
        options.base_dir = file.parent_path();
        qcl::Report once = qcl::exec(*parsed.program, options);
        qcl::Report twice = qcl::exec(*parsed.program, options);
        once.program_name = twice.program_name = file.filename().string();
        if (mask_duration(qcl::render_json(once)) !=
            mask_duration(qcl::render_json(twice))) {
            detail = file.filename().string() + " replay differs";
            return false;
        }
    }

    for (const fs::path& file : bad_files) {
        const auto expectation = read_expectation(file);
        if (!expectation) {
            detail = file.filename().string() + " lacks an expect annotation";
            return false;
        }
        const qcl::ParseResult parsed = qcl::parse(read_file(file));
        std::vector<qcl::Diagnostic> diags = parsed.diagnostics;
        if (expectation->stage == "check") {
            if (!parsed.ok()) {
                detail = file.filename().string() +
                         " failed at parse but expected a check diagnostic";
                return false;
            }
            diags = qcl::check(*parsed.program, kDefaultTol,
                               file.parent_path());
        }
        if (diags.empty()) {
            detail = file.filename().string() + " produced no diagnostic";
            return false;
        }
        const qcl::Diagnostic& first = diags.front();
        if (qcl::to_string(first.code) != expectation->code ||
            first.line != expectation->line) {
            detail = file.filename().string() + " expected " +
                     expectation->code + " @" +
                     std::to_string(expectation->line) + ", got " +
                     qcl::to_string(first.code) + " @" +
                     std::to_string(first.line);
            return false;
        }
    }

    detail = std::to_string(valid_files.size()) + " valid + " +
             std::to_string(bad_files.size()) + " malformed files";
    return true;
}

} // namespace

int main(int argc, char** argv) {
    const fs::path circuits_dir = (argc > 1) ? argv[1] : "circuits";

    criterion(1, "Deutsch determinism over 1000 seeded runs per oracle",
              deutsch_determinism);
    criterion(2, "intermediate states HV and HUHV match the closed forms",
              intermediate_states);
    criterion(3, "algebra property suites on 1000 random instances each",
              property_suites);
    criterion(4, "H and all oracle matrices are unit; H*H = I independently",
              unitarity_oracles);
    criterion(5, "coin statistics within 3 sigma; collapse repeats 100/100",
              measurement_statistics);
    criterion(6, "evolution closure for 500 random states and unit products",
              evolution_closure);
    criterion(7, "circuit corpus parses, checks and replays byte-identically",
              [&](std::string& detail) {
                  return corpus_replay(circuits_dir, detail);
              });

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
