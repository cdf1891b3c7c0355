#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include <json.hpp>

#include "topclose/top_k.hpp"

namespace topclose::cli {

struct InputInfo {
    std::string path;
    Count nodes = 0;
    Count arcs = 0;
    bool directed = false;

    friend bool operator==(const InputInfo &, const InputInfo &) = default;
};

struct ReportStats {
    std::optional<Count> visited_arcs;  // m_vis, engine runs only
    std::optional<Count> textbook_arcs; // m_tot
    std::optional<double> improvement_factor;
    std::optional<double> performance_ratio;
    std::optional<std::size_t> cut_vertices;
    std::optional<std::size_t> completed_vertices;
    std::optional<std::size_t> skipped_vertices;
    double preprocessing_seconds = 0.0;
    double total_seconds = 0.0;

    friend bool operator==(const ReportStats &, const ReportStats &) = default;
};

struct RunReport {
    std::string algorithm; // "engine" or "textbook"
    InputInfo input;
    std::size_t k = 0;
    unsigned threads = 1;
    TopKResult result;
    ReportStats stats;

    friend bool operator==(const RunReport &, const RunReport &) = default;
};

struct CompareReport {
    RunReport engine;
    RunReport textbook;
    bool match = false;

    friend bool operator==(const CompareReport &, const CompareReport &) = default;
};

void to_json(nlohmann::json &j, const RunReport &r);
void from_json(const nlohmann::json &j, RunReport &r);
void to_json(nlohmann::json &j, const CompareReport &r);
void from_json(const nlohmann::json &j, CompareReport &r);

/// 12 significant digits, always with a decimal point ("1.0", "0.666666666667").
std::string format_closeness(double value);

/// Rows of rank, label, closeness, farness, reachable count, tab separated.
void write_tsv(std::ostream &out, const TopKResult &result);
void write_tsv(std::ostream &out, const RunReport &report, bool with_stats);
void write_tsv(std::ostream &out, const CompareReport &report);

} // namespace topclose::cli
