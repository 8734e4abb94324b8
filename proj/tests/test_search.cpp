#include "doctest.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>

#include "rotsys/adj_format.hpp"
#include "rotsys/search.hpp"

using namespace rotsys;

namespace {

SearchSpec spec_for(const std::string& graph, const std::string& faces = "triangles", bool orientable = true)
{
    SearchSpec s;
    s.graph_text = graph;
    s.target = parse_graph_spec(graph);
    s.shape = ShapeSpec::parse(faces);
    s.orientable_only = orientable;
    return s;
}

void check_sound(const SearchSpec& spec, const SearchResult& r)
{
    REQUIRE(r.embedding);
    CHECK(same_graph(r.embedding->graph(), spec.target));
    CHECK(check_shape(*r.embedding, spec.shape).pass);
    if (spec.orientable_only)
        CHECK(is_orientable(*r.embedding));
}

// Does any rotation system (with every signature choice unless orientable)
// give only faces of
// the wanted lengths? Plain enumeration, for tiny graphs.
bool brute_force_exists(const Graph& g, const std::map<int, int>& want, bool orientable)
{
    const int n = g.vertex_count();
    std::vector<std::vector<int>> base(n);
    for (int a = 0; a < 2 * g.edge_count(); ++a) {
        const Edge& ed = g.edge(a >> 1);
        base[(a & 1) ? ed.v : ed.u].push_back(a);
    }
    std::vector<std::vector<int>> rot = base;
    const int edges = g.edge_count();
    const int sig_choices = orientable ? 1 : 1 << edges;
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == n) {
            for (int mask = 0; mask < sig_choices; ++mask) {
                std::vector<std::uint8_t> sig(edges);
                for (int e = 0; e < edges; ++e)
                    sig[e] = static_cast<std::uint8_t>((mask >> e) & 1);
                const Embedding emb(g, rot, sig);
                if (trace_faces(emb).length_histogram() == want)
                    return true;
            }
            return false;
        }
        // first entry fixed, permute the rest
        auto& r = rot[v];
        std::sort(r.begin() + 1, r.end());
        do {
            if (rec(v + 1))
                return true;
        } while (std::next_permutation(r.begin() + 1, r.end()));
        return false;
    };
    return rec(0);
}

long long rotation_count(const Graph& g)
{
    long long c = 1;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int k = 2; k < g.degree(v); ++k)
            c *= k;
    return c;
}

}  // namespace

TEST_CASE("K7 triangulates the torus")
{
    const SearchSpec spec = spec_for("complete(7)");
    const auto t0 = std::chrono::steady_clock::now();
    const SearchResult r = search(spec);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    REQUIRE(r.status == SearchStatus::found);
    check_sound(spec, r);
    const SurfaceClass sc = classify_surface(*r.embedding);
    CHECK(sc.orientable);
    CHECK(sc.genus == 1);
    CHECK(sc.euler_characteristic == 0);
    CHECK(secs < 10.0);
}

TEST_CASE("counting rules out K5 before any search")
{
    const SearchResult r = search(spec_for("complete(5)"));
    CHECK(r.status == SearchStatus::impossible);
    CHECK(r.nodes == 0);
    CHECK(r.reason.find("multiple of 3") != std::string::npos);
    // K6 has 2E = 30 but an odd Euler characteristic
    CHECK(search(spec_for("complete(6)")).status == SearchStatus::impossible);
}

TEST_CASE("K4 and small planar triangulations")
{
    const SearchSpec k4 = spec_for("complete(4)");
    const SearchResult r = search(k4);
    REQUIRE(r.status == SearchStatus::found);
    check_sound(k4, r);
    CHECK(classify_surface(*r.embedding).genus == 0);

    const SearchSpec octa = spec_for("octahedral(6)");
    const SearchResult o = search(octa);
    REQUIRE(o.status == SearchStatus::found);
    CHECK(classify_surface(*o.embedding).euler_characteristic == 2);
}

TEST_CASE("nonorientable search finds K6 in the projective plane")
{
    const SearchSpec spec = spec_for("complete(6)", "triangles", false);
    const SearchResult r = search(spec);
    REQUIRE(r.status == SearchStatus::found);
    check_sound(spec, r);
    const SurfaceClass sc = classify_surface(*r.embedding);
    CHECK_FALSE(sc.orientable);
    CHECK(sc.euler_characteristic == 1);
}

TEST_CASE("anchors")
{
    SearchSpec a = spec_for("complete(7)");
    a.anchor = "0";
    a.anchor_rotation = {"1", "2", "3", "4", "5", "6"};
    const SearchResult ra = search(a);
    REQUIRE(ra.status == SearchStatus::found);
    CHECK(ra.embedding->neighbor_row(0) == std::vector<std::string>{"1", "2", "3", "4", "5", "6"});

    SearchSpec b = spec_for("complete(7)");
    b.anchor = "4";
    b.anchor_rotation = {"6", "0", "5", "1", "3", "2"};
    const SearchResult rb = search(b);
    REQUIRE(rb.status == SearchStatus::found);
    check_sound(b, rb);

    SearchSpec c = spec_for("complete(7)");
    c.anchor = "3";
    const SearchResult rc = search(c);
    CHECK(rc.status == SearchStatus::found);

    SearchSpec bad = spec_for("complete(7)");
    bad.anchor = "0";
    bad.anchor_rotation = {"1", "2", "3"};
    CHECK_THROWS_AS(search(bad), InputError);
    bad.anchor = "q";
    CHECK_THROWS_AS(search(bad), InputError);
}

TEST_CASE("budgets are monotone and deterministic")
{
    const SearchSpec base = spec_for("complete(7)");
    const SearchResult full = search(base);
    REQUIRE(full.status == SearchStatus::found);
    bool seen_found = false;
    for (long long budget = 1; budget <= 4 * full.nodes; budget = budget * 3 / 2 + 1) {
        SearchSpec s = base;
        s.node_budget = budget;
        const SearchResult r = search(s);
        CHECK(r.status != SearchStatus::exhausted);
        if (seen_found)
            CHECK(r.status == SearchStatus::found);
        if (r.status == SearchStatus::found) {
            seen_found = true;
            CHECK(r.nodes == full.nodes);
            CHECK(print_adj(*r.embedding) == print_adj(*full.embedding));
        } else {
            CHECK(r.status == SearchStatus::budget_exceeded);
            CHECK(budget < full.nodes);
        }
    }
    CHECK(seen_found);
}

TEST_CASE("long faces")
{
    // the cube graph's own faces are its only embedding with six quadrilaterals
    const SearchSpec cube = spec_for("vertices(0,1,2,3,4,5,6,7)+edges(0-1,1-2,2-3,3-0,4-5,5-6,6-7,7-4,0-4,1-5,2-6,3-7)",
                                     "triangles+4x6");
    const SearchResult r = search(cube);
    REQUIRE(r.status == SearchStatus::found);
    check_sound(cube, r);
    CHECK(classify_surface(*r.embedding).genus == 0);

    // a wheel: one long face of length 5 and five triangles, the rim must be the long face
    const SearchSpec wheel = spec_for("circulant(5;1)+join(h)", "triangles+5[0]");
    const SearchResult w = search(wheel);
    REQUIRE(w.status == SearchStatus::found);
    check_sound(wheel, w);
}

TEST_CASE("search agrees with brute force on tiny graphs")
{
    std::mt19937 rng(2024);
    int compared = 0, found = 0;
    for (int trial = 0; trial < 400 && compared < 120; ++trial) {
        const int n = std::uniform_int_distribution<int>(3, 6)(rng);
        Graph g;
        for (int i = 0; i < n; ++i)
            g.add_vertex(std::to_string(i));
        for (int v = 1; v < n; ++v)
            g.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
        const int extra = std::uniform_int_distribution<int>(0, 2 * n)(rng);
        for (int k = 0; k < extra; ++k) {
            const int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
            const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
            if (u != v && !g.adjacent(u, v))
                g.add_edge(u, v);
        }
        if ((2 * g.edge_count()) % 3 != 0)
            continue;
        const bool orientable = trial % 3 != 0;
        const long long work = rotation_count(g) * (orientable ? 1 : (1LL << g.edge_count()));
        if (work > 40000)
            continue;
        SearchSpec s;
        s.target = g;
        s.orientable_only = orientable;
        s.shape = ShapeSpec::parse("triangles");
        const SearchResult r = search(s);
        REQUIRE(r.status != SearchStatus::budget_exceeded);
        const bool exists = brute_force_exists(g, {{3, 2 * g.edge_count() / 3}}, orientable);
        CHECK_MESSAGE((r.status == SearchStatus::found) == exists, print_adj(Embedding(g, {}, {})));
        if (r.status == SearchStatus::found) {
            check_sound(s, r);
            ++found;
        }
        ++compared;
    }
    CHECK(compared >= 60);
    CHECK(found > 0);
    CHECK(found < compared);
}

TEST_CASE("SRC text round trip")
{
    const std::string text = "# K7 on the torus\n"
                             "graph complete(7)\n"
                             "faces triangles\n"
                             "orientable yes\n"
                             "nodes 100000\n"
                             "seconds 10\n"
                             "anchor 0\n"
                             "anchor-rotation 1 2 3 4 5 6\n";
    const SearchSpec s = parse_search_spec(text);
    CHECK(print_search_spec(s) == text);
    CHECK(s.target.edge_count() == 21);
    CHECK(s.node_budget == 100000);
    CHECK_THROWS_AS(parse_search_spec("faces triangles\n"), ParseError);
    CHECK_THROWS_AS(parse_search_spec("graph complete(4)\norientable maybe\n"), ParseError);
    try {
        parse_search_spec("graph complete(4)\nnodes lots\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}
