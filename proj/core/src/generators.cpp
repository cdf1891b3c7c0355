#include "topclose/generators.hpp"

#include <algorithm>
#include <random>

namespace topclose {

namespace {

// Uniform in [0, 1) from the top 53 bits; std distributions are not
// reproducible across standard libraries.
double unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t below(std::mt19937_64 &rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

} // namespace

std::optional<Model> parse_model(std::string_view name) {
    if (name == "gnp") return Model::gnp;
    if (name == "pa" || name == "preferential-attachment") return Model::preferential_attachment;
    if (name == "path") return Model::path;
    if (name == "star") return Model::star;
    if (name == "cycle") return Model::cycle;
    return std::nullopt;
}

std::string_view model_name(Model model) {
    switch (model) {
    case Model::gnp: return "gnp";
    case Model::preferential_attachment: return "preferential-attachment";
    case Model::path: return "path";
    case Model::star: return "star";
    case Model::cycle: return "cycle";
    }
    return "unknown";
}

Graph generate(const GeneratorParams &params) {
    switch (params.model) {
    case Model::gnp: return gnp(params.nodes, params.probability, params.directed, params.seed);
    case Model::preferential_attachment:
        return preferential_attachment(params.nodes, params.attachment, params.directed, params.seed);
    case Model::path: return path(params.nodes, params.directed);
    case Model::star: return star(params.nodes, params.directed);
    case Model::cycle: return cycle(params.nodes, params.directed);
    }
    throw UsageError("unknown model");
}

Graph gnp(std::size_t n, double p, bool directed, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw UsageError("gnp probability must lie in [0, 1]");
    }
    std::mt19937_64 rng(seed);
    std::vector<Graph::Arc> arcs;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = directed ? 0 : u + 1; v < n; ++v) {
            if (u != v && unit(rng) < p) {
                arcs.emplace_back(u, v);
            }
        }
    }
    return Graph::from_arcs(n, std::move(arcs), directed);
}

Graph preferential_attachment(std::size_t n, std::size_t d, bool directed, std::uint64_t seed) {
    if (d < 1) {
        throw UsageError("attachment degree must be at least 1");
    }
    std::mt19937_64 rng(seed);
    std::vector<Graph::Arc> arcs;
    std::vector<Vertex> endpoints; // each vertex repeated once per incident edge
    const std::size_t core = std::min(n, d + 1);
    for (Vertex u = 0; u < core; ++u) {
        for (Vertex v = 0; v < u; ++v) {
            arcs.emplace_back(u, v);
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
    }
    std::vector<Vertex> chosen;
    for (auto u = static_cast<Vertex>(core); u < n; ++u) {
        chosen.clear();
        while (chosen.size() < d) {
            const Vertex t = endpoints[below(rng, endpoints.size())];
            if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) {
                chosen.push_back(t);
            }
        }
        for (Vertex t : chosen) {
            arcs.emplace_back(u, t);
            endpoints.push_back(u);
            endpoints.push_back(t);
        }
    }
    return Graph::from_arcs(n, std::move(arcs), directed);
}

Graph path(std::size_t n, bool directed) {
    std::vector<Graph::Arc> arcs;
    for (Vertex v = 1; v < n; ++v) {
        arcs.emplace_back(v - 1, v);
    }
    return Graph::from_arcs(n, std::move(arcs), directed);
}

Graph star(std::size_t n, bool directed) {
    std::vector<Graph::Arc> arcs;
    for (Vertex v = 1; v < n; ++v) {
        arcs.emplace_back(0, v);
    }
    return Graph::from_arcs(n, std::move(arcs), directed);
}

Graph cycle(std::size_t n, bool directed) {
    std::vector<Graph::Arc> arcs;
    for (Vertex v = 0; v < n && n > 1; ++v) {
        arcs.emplace_back(v, static_cast<Vertex>((v + 1) % n));
    }
    return Graph::from_arcs(n, std::move(arcs), directed);
}

Graph disjoint_union(const Graph &a, const Graph &b) {
    if (a.directed() != b.directed()) {
        throw UsageError("cannot join a directed and an undirected graph");
    }
    const auto shift = static_cast<Vertex>(a.node_count());
    std::vector<Graph::Arc> arcs = a.arcs();
    for (const auto &[u, v] : b.arcs()) {
        arcs.emplace_back(u + shift, v + shift);
    }
    return Graph::from_arcs(a.node_count() + b.node_count(), std::move(arcs), a.directed());
}

} // namespace topclose
