#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "topclose/graph.hpp"

namespace topclose {

enum class Model { gnp, preferential_attachment, path, star, cycle };

std::optional<Model> parse_model(std::string_view name);
std::string_view model_name(Model model);

struct GeneratorParams {
    Model model = Model::gnp;
    std::size_t nodes = 0;
    double probability = 0.0;   // gnp
    std::size_t attachment = 1; // preferential attachment: arcs per new vertex
    bool directed = false;
    std::uint64_t seed = 0;
};

/// Deterministic for a fixed seed on every platform: randomness comes only
/// from the raw std::mt19937_64 stream. Throws UsageError on invalid
/// parameters.
Graph generate(const GeneratorParams &params);

Graph gnp(std::size_t n, double p, bool directed, std::uint64_t seed);
/// Barabasi-Albert growth from a (d+1)-clique; each new vertex links to d
/// distinct earlier vertices chosen proportionally to degree. Directed
/// graphs point new vertices at old ones.
Graph preferential_attachment(std::size_t n, std::size_t d, bool directed, std::uint64_t seed);
Graph path(std::size_t n, bool directed = false);
/// Vertex 0 is the centre; directed stars point outwards.
Graph star(std::size_t n, bool directed = false);
Graph cycle(std::size_t n, bool directed = false);

/// Vertices of b are shifted by a.node_count(). Labels are the new ids.
Graph disjoint_union(const Graph &a, const Graph &b);

} // namespace topclose
