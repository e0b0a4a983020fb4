#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "steinberg/graph.hpp"
#include "steinberg/rng.hpp"

#include <set>
#include <string>

using namespace steinberg;

namespace {

Graph loop_graph() { return Graph({"v"}, {{"c", 0, 0}}); }
Graph vw_graph() { return Graph({"v", "w"}, {{"e", 0, 1}}); }
Graph rose2() { return Graph({"v"}, {{"a", 0, 0}, {"b", 0, 0}}); }
Graph toeplitz() { return Graph({"v", "w"}, {{"c", 0, 0}, {"f", 0, 1}}); }
Graph line3() { return Graph({"v1", "v2", "v3"}, {{"e1", 0, 1}, {"e2", 1, 2}}); }

std::vector<std::string> names(const Graph& g, const std::vector<Path>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(path_name(g, p));
    return out;
}

} // namespace

TEST_CASE("graph construction and json") {
    CHECK_THROWS_AS(Graph({"v", "v"}, {}), GraphError);
    CHECK_THROWS_AS(Graph({"v"}, {{"v", 0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph({"v"}, {{"e", 0, 1}}), GraphError);

    Graph g = Graph::from_json_text(
        R"({"vertices": ["v", "w"], "edges": [{"name": "e", "src": "v", "dst": "w"}]})");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.edge(0).src == *g.vertex_index("v"));

    Graph back = Graph::from_json_text(g.to_json_text());
    CHECK(back.vertex_count() == 2);
    CHECK(back.edge(0).name == "e");

    CHECK_THROWS_AS(Graph::from_json_text("{"), GraphError);
    CHECK_THROWS_AS(Graph::from_json_text(R"({"vertices": []})"), GraphError);
    CHECK_THROWS_AS(
        Graph::from_json_text(R"({"vertices": ["v"], "edges": [{"name":"e","src":"v","dst":"x"}]})"),
        GraphError);
}

TEST_CASE("regular vertices") {
    Graph sink({"v"}, {});
    CHECK(regular_vertices(sink).empty());
    CHECK(regular_vertices(loop_graph()) == std::vector<std::uint32_t>{0});
    CHECK(regular_vertices(vw_graph()) == std::vector<std::uint32_t>{0});
}

TEST_CASE("path enumeration") {
    CHECK(names(loop_graph(), enumerate_paths(loop_graph(), 3)) ==
          std::vector<std::string>{"v", "c", "c.c", "c.c.c"});
    CHECK(names(vw_graph(), enumerate_paths(vw_graph(), 2)) ==
          std::vector<std::string>{"v", "w", "e"});
    CHECK(names(rose2(), enumerate_paths(rose2(), 2)) ==
          std::vector<std::string>{"v", "a", "b", "a.a", "a.b", "b.a", "b.b"});
}

TEST_CASE("path count for the rose with k petals is sum of k^j") {
    for (std::uint32_t k = 2; k <= 3; ++k) {
        std::vector<Edge> edges;
        for (std::uint32_t i = 0; i < k; ++i)
            edges.push_back({"p" + std::to_string(i), 0, 0});
        Graph rose({"v"}, edges);
        for (std::size_t max_len = 0; max_len <= 4; ++max_len) {
            std::size_t expected = 0, power = 1;
            for (std::size_t j = 0; j <= max_len; ++j) {
                expected += power;
                power *= k;
            }
            CHECK(enumerate_paths(rose, max_len).size() == expected);
        }
    }
}

TEST_CASE("path algebra: concatenation and prefixes") {
    Graph g = line3();
    Path e1 = *parse_path(g, "e1", nullptr);
    Path e2 = *parse_path(g, "e2", nullptr);
    Path v1 = *parse_path(g, "v1", nullptr);
    Path whole = concat(g, e1, e2);
    CHECK(path_name(g, whole) == "e1.e2");
    CHECK(concat(g, v1, e1) == e1);
    CHECK(concat(g, e1, trivial_path(e1.dst)) == e1);
    CHECK(is_prefix(e1, whole));
    CHECK_FALSE(is_prefix(e2, whole));
    CHECK(strip_prefix(g, e1, whole) == e2);
    CHECK(strip_prefix(g, whole, whole) == trivial_path(whole.dst));
    CHECK_THROWS_AS(concat(g, e2, e1), GraphError);

    std::string err;
    CHECK_FALSE(parse_path(g, "e2.e1", &err).has_value());
    CHECK(err.find("do not compose") != std::string::npos);
    CHECK_FALSE(parse_path(g, "zz", &err).has_value());
}

TEST_CASE("simple cycles") {
    CHECK(simple_cycles(line3()).empty());
    CHECK(names(loop_graph(), simple_cycles(loop_graph())) == std::vector<std::string>{"c"});

    // petals are 1-cycles; longer closed words revisit the base vertex
    CHECK(names(rose2(), simple_cycles(rose2())) == std::vector<std::string>{"a", "b"});

    // a 2-cycle is reported once per base vertex
    Graph two({"v", "w"}, {{"e", 0, 1}, {"f", 1, 0}});
    CHECK(names(two, simple_cycles(two)) == std::vector<std::string>{"e.f", "f.e"});

    Graph tri({"x", "y", "z"}, {{"e1", 0, 1}, {"e2", 1, 2}, {"e3", 2, 0}});
    CHECK(simple_cycles(tri).size() == 3);
}

TEST_CASE("cycles without exit") {
    CHECK(names(loop_graph(), cycles_without_exit(loop_graph())) == std::vector<std::string>{"c"});
    CHECK(cycles_without_exit(toeplitz()).empty());
    CHECK(cycles_without_exit(rose2()).empty());

    Graph two({"v", "w"}, {{"e", 0, 1}, {"f", 1, 0}});
    CHECK(names(two, cycles_without_exit(two)) == std::vector<std::string>{"e.f", "f.e"});
    CHECK(no_exit_cycle_at(two, 0).has_value());
    CHECK(path_name(two, *no_exit_cycle_at(two, 0)) == "e.f");
    CHECK_FALSE(no_exit_cycle_at(toeplitz(), 1).has_value());
}

TEST_CASE("acyclicity") {
    CHECK(is_acyclic(vw_graph()));
    CHECK_FALSE(is_acyclic(loop_graph()));
    Graph two({"v", "w"}, {{"e", 0, 1}, {"f", 1, 0}});
    CHECK_FALSE(is_acyclic(two));
    CHECK(max_cycle_length(two) == 2);
    CHECK(max_cycle_length(vw_graph()) == 0);
}

TEST_CASE("no-exit cycles are isolated among simple cycles") {
    auto is_rotation = [](const Graph& g, const Path& a, const Path& b) {
        if (a.length() != b.length()) return false;
        for (std::size_t r = 0; r < a.length(); ++r) {
            std::vector<std::uint32_t> rot(a.edges.begin() + static_cast<std::ptrdiff_t>(r),
                                           a.edges.end());
            rot.insert(rot.end(), a.edges.begin(), a.edges.begin() + static_cast<std::ptrdiff_t>(r));
            if (rot == b.edges) return true;
        }
        (void)g;
        return false;
    };
    for (const Graph& g : {loop_graph(), toeplitz(), rose2(), line3(),
                           Graph({"v", "w"}, {{"e", 0, 1}, {"f", 1, 0}}),
                           Graph({"v", "w"}, {{"c", 0, 0}, {"e", 0, 1}, {"d", 1, 1}})}) {
        auto all = simple_cycles(g);
        auto quiet = cycles_without_exit(g);
        for (const auto& c : quiet) {
            CHECK(std::find(all.begin(), all.end(), c) != all.end());
            std::set<std::uint32_t> cycle_vertices;
            for (auto e : c.edges) cycle_vertices.insert(g.edge(e).src);
            for (const auto& other : all) {
                if (is_rotation(g, c, other)) continue;
                for (auto e : other.edges) CHECK_FALSE(cycle_vertices.count(g.edge(e).src));
            }
        }
    }
}

TEST_CASE("path concatenation is associative where defined") {
    Graph g({"x", "y", "z"}, {{"e1", 0, 1}, {"e2", 1, 2}, {"e3", 2, 0}, {"d", 1, 1}});
    Rng rng(12);
    auto paths = enumerate_paths(g, 3);
    int checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const Path& a = paths[rng.below(paths.size())];
        const Path& b = paths[rng.below(paths.size())];
        const Path& c = paths[rng.below(paths.size())];
        if (a.dst != b.src || b.dst != c.src) continue;
        CHECK(concat(g, concat(g, a, b), c) == concat(g, a, concat(g, b, c)));
        CHECK(concat(g, trivial_path(a.src), a) == a);
        CHECK(concat(g, a, trivial_path(a.dst)) == a);
        ++checked;
    }
    CHECK(checked > 50);
}
