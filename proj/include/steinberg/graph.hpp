#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace steinberg {

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    std::string name;
    std::uint32_t src = 0;
    std::uint32_t dst = 0;
};

/// Finite directed graph. Vertex and edge names are unique across both sets.
class Graph {
public:
    Graph(std::vector<std::string> vertices, std::vector<Edge> edges);

    static Graph from_json_text(std::string_view text);
    static Graph from_json_file(const std::string& path);
    std::string to_json_text() const;

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    const std::string& vertex_name(std::uint32_t v) const { return vertices_[v]; }
    const Edge& edge(std::uint32_t e) const { return edges_[e]; }

    std::optional<std::uint32_t> vertex_index(std::string_view name) const;
    std::optional<std::uint32_t> edge_index(std::string_view name) const;

    const std::vector<std::uint32_t>& out_edges(std::uint32_t v) const { return out_[v]; }

    /// Rank of a vertex/edge in name order; used for canonical path ordering.
    std::uint32_t vertex_rank(std::uint32_t v) const { return vertex_rank_[v]; }
    std::uint32_t edge_rank(std::uint32_t e) const { return edge_rank_[e]; }

private:
    std::vector<std::string> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::uint32_t>> out_; // sorted by edge name
    std::vector<std::uint32_t> vertex_rank_;
    std::vector<std::uint32_t> edge_rank_;
};

/// Directed path: a composable edge sequence, or a trivial path at a vertex.
struct Path {
    std::uint32_t src = 0;
    std::uint32_t dst = 0;
    std::vector<std::uint32_t> edges;

    std::size_t length() const { return edges.size(); }
    bool trivial() const { return edges.empty(); }

    friend bool operator==(const Path&, const Path&) = default;
};

Path trivial_path(std::uint32_t v);
Path make_path(const Graph& g, const std::vector<std::uint32_t>& edges);
Path concat(const Graph& g, const Path& a, const Path& b);

/// Name-lexicographic order after length; total and canonical per graph.
int compare_paths(const Graph& g, const Path& a, const Path& b);

bool is_prefix(const Path& prefix, const Path& whole);
/// The path z with whole = prefix . z; requires is_prefix.
Path strip_prefix(const Graph& g, const Path& prefix, const Path& whole);

std::string path_name(const Graph& g, const Path& p);
/// Parses the dot-separated path syntax ("v" or "e1.e2"); nullopt when a
/// name is unknown or the edges do not compose.
std::optional<Path> parse_path(const Graph& g, std::string_view text, std::string* error);

/// Vertices emitting at least one edge ("regular": finite graphs have no
/// infinite emitters, so regular means non-sink).
std::vector<std::uint32_t> regular_vertices(const Graph& g);

/// All paths of length <= max_len ordered by length then name-lexicographic.
std::vector<Path> enumerate_paths(const Graph& g, std::size_t max_len);

/// Closed simple paths (no vertex revisited except the base), reported once
/// per base vertex on the cycle, ordered by length then edge names.
std::vector<Path> simple_cycles(const Graph& g);

/// Simple cycles c such that every vertex on c emits only its cycle edge.
std::vector<Path> cycles_without_exit(const Graph& g);

bool is_acyclic(const Graph& g);

/// The no-exit cycle through v, if any (at most one exists).
std::optional<Path> no_exit_cycle_at(const Graph& g, std::uint32_t v);

/// Longest simple cycle length; 0 for acyclic graphs.
std::size_t max_cycle_length(const Graph& g);

} // namespace steinberg
