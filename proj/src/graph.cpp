#include "steinberg/graph.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace steinberg {

using nlohmann::ordered_json;

Graph::Graph(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::set<std::string> names;
    for (const auto& v : vertices_)
        if (!names.insert(v).second) throw GraphError("duplicate name '" + v + "'");
    for (const auto& e : edges_) {
        if (!names.insert(e.name).second) throw GraphError("duplicate name '" + e.name + "'");
        if (e.src >= vertices_.size() || e.dst >= vertices_.size())
            throw GraphError("edge '" + e.name + "' has an unknown endpoint");
    }

    out_.resize(vertices_.size());
    for (std::uint32_t i = 0; i < edges_.size(); ++i) out_[edges_[i].src].push_back(i);
    for (auto& lst : out_)
        std::sort(lst.begin(), lst.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return edges_[a].name < edges_[b].name; });

    auto ranks = [](std::size_t n, auto name_of) {
        std::vector<std::uint32_t> order(n), rank(n);
        std::iota(order.begin(), order.end(), 0u);
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return name_of(a) < name_of(b); });
        for (std::uint32_t i = 0; i < n; ++i) rank[order[i]] = i;
        return rank;
    };
    vertex_rank_ = ranks(vertices_.size(), [&](std::uint32_t v) { return vertices_[v]; });
    edge_rank_ = ranks(edges_.size(), [&](std::uint32_t e) { return edges_[e].name; });
}

std::optional<std::uint32_t> Graph::vertex_index(std::string_view name) const {
    for (std::uint32_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i] == name) return i;
    return std::nullopt;
}

std::optional<std::uint32_t> Graph::edge_index(std::string_view name) const {
    for (std::uint32_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].name == name) return i;
    return std::nullopt;
}

Graph Graph::from_json_text(std::string_view text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw GraphError(std::string("graph json: ") + ex.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw GraphError("graph json: expected object with 'vertices' and 'edges'");

    std::vector<std::string> vertices;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw GraphError("graph json: vertex names must be strings");
        vertices.push_back(v.get<std::string>());
    }
    std::map<std::string, std::uint32_t> vidx;
    for (std::uint32_t i = 0; i < vertices.size(); ++i) vidx[vertices[i]] = i;

    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_object() || !e.contains("name") || !e.contains("src") || !e.contains("dst"))
            throw GraphError("graph json: each edge needs name/src/dst");
        auto s = vidx.find(e["src"].get<std::string>());
        auto d = vidx.find(e["dst"].get<std::string>());
        if (s == vidx.end() || d == vidx.end())
            throw GraphError("graph json: edge '" + e["name"].get<std::string>() +
                             "' references an unknown vertex");
        edges.push_back({e["name"].get<std::string>(), s->second, d->second});
    }
    return Graph(std::move(vertices), std::move(edges));
}

Graph Graph::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot read graph file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

std::string Graph::to_json_text() const {
    ordered_json j;
    j["vertices"] = vertices_;
    j["edges"] = ordered_json::array();
    for (const auto& e : edges_)
        j["edges"].push_back({{"name", e.name}, {"src", vertices_[e.src]}, {"dst", vertices_[e.dst]}});
    return j.dump();
}

Path trivial_path(std::uint32_t v) { return Path{v, v, {}}; }

Path make_path(const Graph& g, const std::vector<std::uint32_t>& edges) {
    if (edges.empty()) throw GraphError("make_path needs at least one edge");
    Path p;
    p.src = g.edge(edges.front()).src;
    p.dst = g.edge(edges.back()).dst;
    p.edges = edges;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (g.edge(edges[i]).dst != g.edge(edges[i + 1]).src)
            throw GraphError("edges do not compose at position " + std::to_string(i + 1));
    return p;
}

Path concat(const Graph& g, const Path& a, const Path& b) {
    if (a.dst != b.src)
        throw GraphError("paths do not compose: '" + path_name(g, a) + "' then '" +
                         path_name(g, b) + "'");
    Path p;
    p.src = a.src;
    p.dst = b.dst;
    p.edges = a.edges;
    p.edges.insert(p.edges.end(), b.edges.begin(), b.edges.end());
    return p;
}

int compare_paths(const Graph& g, const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
    if (a.trivial()) {
        if (g.vertex_rank(a.src) != g.vertex_rank(b.src))
            return g.vertex_rank(a.src) < g.vertex_rank(b.src) ? -1 : 1;
        return 0;
    }
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (g.edge_rank(a.edges[i]) != g.edge_rank(b.edges[i]))
            return g.edge_rank(a.edges[i]) < g.edge_rank(b.edges[i]) ? -1 : 1;
    }
    return 0;
}

bool is_prefix(const Path& prefix, const Path& whole) {
    if (prefix.src != whole.src || prefix.length() > whole.length()) return false;
    return std::equal(prefix.edges.begin(), prefix.edges.end(), whole.edges.begin());
}

Path strip_prefix(const Graph& g, const Path& prefix, const Path& whole) {
    if (!is_prefix(prefix, whole)) throw GraphError("strip_prefix: not a prefix");
    if (prefix.length() == whole.length()) return trivial_path(whole.dst);
    return make_path(g, {whole.edges.begin() + static_cast<std::ptrdiff_t>(prefix.length()),
                         whole.edges.end()});
}

std::string path_name(const Graph& g, const Path& p) {
    if (p.trivial()) return g.vertex_name(p.src);
    std::string s;
    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        if (i) s += '.';
        s += g.edge(p.edges[i]).name;
    }
    return s;
}

std::optional<Path> parse_path(const Graph& g, std::string_view text, std::string* error) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : text) {
        if (c == '.') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    auto fail = [&](const std::string& why) -> std::optional<Path> {
        if (error) *error = why;
        return std::nullopt;
    };
    if (parts.size() == 1) {
        if (auto v = g.vertex_index(parts[0])) return trivial_path(*v);
        if (auto e = g.edge_index(parts[0])) return make_path(g, {*e});
        return fail("unknown vertex or edge '" + parts[0] + "'");
    }
    std::vector<std::uint32_t> edges;
    for (const auto& name : parts) {
        auto e = g.edge_index(name);
        if (!e) return fail("unknown edge '" + name + "'");
        edges.push_back(*e);
    }
    for (std::size_t i = 0; i + 1 < edges.size(); ++i)
        if (g.edge(edges[i]).dst != g.edge(edges[i + 1]).src)
            return fail("edges '" + parts[i] + "' and '" + parts[i + 1] + "' do not compose");
    return make_path(g, edges);
}

std::vector<std::uint32_t> regular_vertices(const Graph& g) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        if (!g.out_edges(v).empty()) out.push_back(v);
    return out;
}

std::vector<Path> enumerate_paths(const Graph& g, std::size_t max_len) {
    std::vector<Path> out;
    std::vector<std::uint32_t> vorder(g.vertex_count());
    std::iota(vorder.begin(), vorder.end(), 0u);
    std::sort(vorder.begin(), vorder.end(), [&](std::uint32_t a, std::uint32_t b) {
        return g.vertex_rank(a) < g.vertex_rank(b);
    });
    std::vector<Path> frontier;
    for (auto v : vorder) frontier.push_back(trivial_path(v));
    out = frontier;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<Path> next;
        for (const auto& p : frontier)
            for (auto e : g.out_edges(p.dst)) {
                Path q = p;
                q.edges.push_back(e);
                q.dst = g.edge(e).dst;
                next.push_back(std::move(q));
            }
        std::sort(next.begin(), next.end(),
                  [&](const Path& a, const Path& b) { return compare_paths(g, a, b) < 0; });
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return out;
}

namespace {

void cycle_dfs(const Graph& g, std::uint32_t base, Path& cur, std::vector<bool>& on_path,
               std::vector<Path>& out) {
    for (auto e : g.out_edges(cur.trivial() ? cur.src : cur.dst)) {
        std::uint32_t to = g.edge(e).dst;
        if (to == base) {
            Path c = cur;
            c.edges.push_back(e);
            c.dst = base;
            out.push_back(std::move(c));
            continue;
        }
        if (on_path[to]) continue;
        on_path[to] = true;
        cur.edges.push_back(e);
        std::uint32_t saved_dst = cur.dst;
        cur.dst = to;
        cycle_dfs(g, base, cur, on_path, out);
        cur.dst = saved_dst;
        cur.edges.pop_back();
        on_path[to] = false;
    }
}

} // namespace

std::vector<Path> simple_cycles(const Graph& g) {
    std::vector<Path> out;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        std::vector<bool> on_path(g.vertex_count(), false);
        on_path[v] = true;
        Path cur = trivial_path(v);
        cycle_dfs(g, v, cur, on_path, out);
    }
    std::sort(out.begin(), out.end(),
              [&](const Path& a, const Path& b) { return compare_paths(g, a, b) < 0; });
    return out;
}

std::vector<Path> cycles_without_exit(const Graph& g) {
    std::vector<Path> out;
    for (const auto& c : simple_cycles(g)) {
        bool exits = false;
        for (auto e : c.edges)
            if (g.out_edges(g.edge(e).src).size() != 1) {
                exits = true;
                break;
            }
        if (!exits) out.push_back(c);
    }
    return out;
}

bool is_acyclic(const Graph& g) { return simple_cycles(g).empty(); }

std::optional<Path> no_exit_cycle_at(const Graph& g, std::uint32_t v) {
    for (const auto& c : cycles_without_exit(g))
        if (c.src == v) return c;
    return std::nullopt;
}

std::size_t max_cycle_length(const Graph& g) {
    std::size_t best = 0;
    for (const auto& c : simple_cycles(g)) best = std::max(best, c.length());
    return best;
}

} // namespace steinberg
