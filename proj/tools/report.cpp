#include "report.hpp"

#include <charconv>
#include <ostream>

namespace topclose::cli {

namespace {

template <typename T>
nlohmann::json optional_json(const std::optional<T> &value) {
    return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const nlohmann::json &j, const char *key) {
    if (!j.contains(key) || j.at(key).is_null()) {
        return std::nullopt;
    }
    return j.at(key).get<T>();
}

} // namespace

void to_json(nlohmann::json &j, const RunReport &r) {
    nlohmann::json results = nlohmann::json::array();
    for (const auto &e : r.result.entries) {
        results.push_back({{"rank", e.rank},
                           {"vertex", e.vertex},
                           {"label", e.label},
                           {"closeness", e.closeness},
                           {"farness", e.farness},
                           {"reachable", e.reachable}});
    }
    j = nlohmann::json{
        {"algorithm", r.algorithm},
        {"input",
         {{"path", r.input.path}, {"nodes", r.input.nodes}, {"arcs", r.input.arcs}, {"directed", r.input.directed}}},
        {"k", r.k},
        {"threads", r.threads},
        {"results", std::move(results)},
        {"stats",
         {{"visited_arcs", optional_json(r.stats.visited_arcs)},
          {"textbook_arcs", optional_json(r.stats.textbook_arcs)},
          {"improvement_factor", optional_json(r.stats.improvement_factor)},
          {"performance_ratio", optional_json(r.stats.performance_ratio)},
          {"cut_vertices", optional_json(r.stats.cut_vertices)},
          {"completed_vertices", optional_json(r.stats.completed_vertices)},
          {"skipped_vertices", optional_json(r.stats.skipped_vertices)},
          {"preprocessing_seconds", r.stats.preprocessing_seconds},
          {"total_seconds", r.stats.total_seconds}}},
    };
}

void from_json(const nlohmann::json &j, RunReport &r) {
    r.algorithm = j.at("algorithm").get<std::string>();
    const auto &in = j.at("input");
    r.input.path = in.at("path").get<std::string>();
    r.input.nodes = in.at("nodes").get<Count>();
    r.input.arcs = in.at("arcs").get<Count>();
    r.input.directed = in.at("directed").get<bool>();
    r.k = j.at("k").get<std::size_t>();
    r.threads = j.at("threads").get<unsigned>();
    r.result = TopKResult{};
    r.result.k = r.k;
    for (const auto &e : j.at("results")) {
        r.result.entries.push_back(TopKEntry{e.at("rank").get<std::size_t>(), e.at("vertex").get<Vertex>(),
                                             e.at("label").get<std::string>(), e.at("closeness").get<double>(),
                                             e.at("farness").get<Count>(), e.at("reachable").get<Count>()});
    }
    const auto &s = j.at("stats");
    r.stats.visited_arcs = optional_from<Count>(s, "visited_arcs");
    r.stats.textbook_arcs = optional_from<Count>(s, "textbook_arcs");
    r.stats.improvement_factor = optional_from<double>(s, "improvement_factor");
    r.stats.performance_ratio = optional_from<double>(s, "performance_ratio");
    r.stats.cut_vertices = optional_from<std::size_t>(s, "cut_vertices");
    r.stats.completed_vertices = optional_from<std::size_t>(s, "completed_vertices");
    r.stats.skipped_vertices = optional_from<std::size_t>(s, "skipped_vertices");
    r.stats.preprocessing_seconds = s.at("preprocessing_seconds").get<double>();
    r.stats.total_seconds = s.at("total_seconds").get<double>();
}

void to_json(nlohmann::json &j, const CompareReport &r) {
    j = nlohmann::json{{"engine", r.engine}, {"textbook", r.textbook}, {"match", r.match}};
}

void from_json(const nlohmann::json &j, CompareReport &r) {
    r.engine = j.at("engine").get<RunReport>();
    r.textbook = j.at("textbook").get<RunReport>();
    r.match = j.at("match").get<bool>();
}

std::string format_closeness(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    std::string s(buf, res.ptr);
    if (s.find_first_of(".eEn") == std::string::npos) {
        s += ".0";
    }
    return s;
}

void write_tsv(std::ostream &out, const TopKResult &result) {
    for (const auto &e : result.entries) {
        out << e.rank << '\t' << e.label << '\t' << format_closeness(e.closeness) << '\t' << e.farness << '\t'
            << e.reachable << '\n';
    }
}

namespace {

template <typename T>
void stat_line(std::ostream &out, const char *key, const std::optional<T> &value) {
    out << "# " << key << '\t';
    if (value) {
        out << *value;
    } else {
        out << "NA";
    }
    out << '\n';
}

} // namespace

void write_tsv(std::ostream &out, const RunReport &report, bool with_stats) {
    write_tsv(out, report.result);
    if (!with_stats) {
        return;
    }
    stat_line(out, "visited_arcs", report.stats.visited_arcs);
    stat_line(out, "textbook_arcs", report.stats.textbook_arcs);
    stat_line(out, "improvement_factor", report.stats.improvement_factor);
    stat_line(out, "performance_ratio", report.stats.performance_ratio);
    stat_line(out, "cut_vertices", report.stats.cut_vertices);
    stat_line(out, "completed_vertices", report.stats.completed_vertices);
    stat_line(out, "skipped_vertices", report.stats.skipped_vertices);
    out << "# preprocessing_seconds\t" << report.stats.preprocessing_seconds << '\n';
    out << "# total_seconds\t" << report.stats.total_seconds << '\n';
}

void write_tsv(std::ostream &out, const CompareReport &report) {
    out << "# engine\n";
    write_tsv(out, report.engine.result);
    out << "# textbook\n";
    write_tsv(out, report.textbook.result);
    stat_line(out, "visited_arcs", report.engine.stats.visited_arcs);
    stat_line(out, "textbook_arcs", report.engine.stats.textbook_arcs);
    stat_line(out, "improvement_factor", report.engine.stats.improvement_factor);
    out << "# match\t" << (report.match ? "true" : "false") << '\n';
}

} // namespace topclose::cli
