#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qsv/detail/format.hpp"
#include "qsv/deutsch.hpp"
#include "qsv/qcl/interpreter.hpp"

namespace qsv::qcl {

namespace report_detail {

inline std::string outcome_label(const Report& r, std::size_t outcome) {
    if (r.outcome_names) return " " + basis_name4(outcome);
    return "";
}

inline nlohmann::ordered_json state_json(const State& s) {
    nlohmann::ordered_json amplitudes = nlohmann::ordered_json::array();
    for (std::size_t i = 1; i <= s.dim(); ++i) {
        const Complex& z = s.amplitude(i);
        amplitudes.push_back({qsv::detail::round_significant(z.re, 12),
                              qsv::detail::round_significant(z.im, 12)});
    }
    return amplitudes;
}

inline std::string state_text(const State& s) {
    std::string out;
    for (std::size_t i = 1; i <= s.dim(); ++i) {
        if (i > 1) out += " ";
        out += qsv::detail::format_complex_brief(s.amplitude(i));
    }
    return out;
}

} // namespace report_detail

/// Human-readable report, numbers at 6 significant digits.
inline std::string render_text(const Report& r) {
    std::string out;
    if (!r.program_name.empty()) out += "program: " + r.program_name + "\n";
    out += "seed: " + std::to_string(r.seed) + "\n";
    out += "probabilities:\n";
    for (std::size_t i = 0; i < r.probabilities.size(); ++i) {
        out += "  " + std::to_string(i + 1) +
               report_detail::outcome_label(r, i + 1) + "  " +
               qsv::detail::format_significant(r.probabilities[i], 6) + "\n";
    }
    if (r.histogram) {
        out += "histogram (" + std::to_string(*r.shots) + " shots):\n";
        for (const auto& [outcome, count] : *r.histogram) {
            out += "  " + std::to_string(outcome) +
                   report_detail::outcome_label(r, outcome) + "  " +
                   std::to_string(count) + "\n";
        }
    }
    if (r.measurement) {
        out += "measurement: outcome " + std::to_string(r.measurement->outcome);
        if (r.outcome_names) {
            out += " (" + basis_name4(r.measurement->outcome) + ")";
        }
        out += "\n";
    }
    if (!r.trace.empty()) {
        out += "trace:\n";
        for (const auto& entry : r.trace) {
            out += "  " + entry.label + ": " +
                   report_detail::state_text(entry.state) + "\n";
        }
    }
    out += "duration_ms: " + qsv::detail::format_significant(r.duration_ms, 6) +
           "\n";
    return out;
}

/// Machine-readable report, numbers at 12 significant digits. Output is
/// byte-identical across runs with the same program, seed and shots,
/// except for the duration_ms value.
inline std::string render_json(const Report& r) {
    nlohmann::ordered_json doc;
    doc["program"] = r.program_name.empty()
                         ? nlohmann::ordered_json(nullptr)
                         : nlohmann::ordered_json(r.program_name);
    doc["seed"] = r.seed;
    if (r.shots) {
        doc["shots"] = *r.shots;
    } else {
        doc["shots"] = nullptr;
    }
    nlohmann::ordered_json probs = nlohmann::ordered_json::array();
    for (double p : r.probabilities) {
        probs.push_back(qsv::detail::round_significant(p, 12));
    }
    doc["probabilities"] = std::move(probs);
    if (r.outcome_names) {
        nlohmann::ordered_json labels;
        for (std::size_t i = 1; i <= r.probabilities.size(); ++i) {
            labels[std::to_string(i)] = basis_name4(i);
        }
        doc["labels"] = std::move(labels);
    }
    if (r.histogram) {
        nlohmann::ordered_json histogram;
        for (const auto& [outcome, count] : *r.histogram) {
            histogram[std::to_string(outcome)] = count;
        }
        doc["histogram"] = std::move(histogram);
    } else {
        doc["histogram"] = nullptr;
    }
    if (r.measurement) {
        nlohmann::ordered_json measurement;
        measurement["outcome"] = r.measurement->outcome;
        if (r.outcome_names) {
            measurement["name"] = basis_name4(r.measurement->outcome);
        }
        measurement["collapsed"] =
            report_detail::state_json(r.measurement->collapsed);
        doc["measurement"] = std::move(measurement);
    }
    if (!r.trace.empty()) {
        nlohmann::ordered_json trace = nlohmann::ordered_json::array();
        for (const auto& entry : r.trace) {
            nlohmann::ordered_json item;
            item["label"] = entry.label;
            item["state"] = report_detail::state_json(entry.state);
            trace.push_back(std::move(item));
        }
        doc["trace"] = std::move(trace);
    }
    doc["duration_ms"] = qsv::detail::round_significant(r.duration_ms, 12);
    return doc.dump(2);
}

} // namespace qsv::qcl
