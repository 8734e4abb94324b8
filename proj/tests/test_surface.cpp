#include "doctest.h"

#include <set>

#include "rotsys/bounds.hpp"
#include "rotsys/faces.hpp"
#include "rotsys/report.hpp"
#include "support.hpp"

using namespace rotsys;
using rotsys::testing::data_path;
using rotsys::testing::load_adj;

namespace {

Embedding single_loop(int sig)
{
    Graph g;
    g.add_vertex("0");
    g.add_edge(0, 0);
    return Embedding(g, {{0, 1}}, {static_cast<std::uint8_t>(sig)});
}

Embedding triangle()
{
    return embedding_from_rows({"0", "1", "2"}, {{"1", "2"}, {"2", "0"}, {"0", "1"}});
}

}  // namespace

TEST_CASE("circulant constructors")
{
    CHECK(build_circulant(4, {1, 2}).edge_count() == 6);
    CHECK(same_graph(build_circulant(4, {1, 2}), complete_graph(4)));
    CHECK(build_circulant(12, {2, 3, 4, 5, 6}).edge_count() == 54);
    CHECK(build_circulant(24, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}).edge_count() == 264);
    CHECK(same_graph(hamiltonian_complement(12), build_circulant(12, {2, 3, 4, 5, 6})));
    CHECK(build_circulant(7, {1, 2, 3}).is_simple());
    CHECK_THROWS_AS(build_circulant(10, {6}), InputError);
    CHECK_THROWS_AS(build_circulant(10, {0}), InputError);
    CHECK_THROWS_AS(build_circulant(10, {}), InputError);
}

TEST_CASE("join with independent vertices")
{
    const Graph o24 = octahedral_graph(24);
    const Graph j = join_with_empty(o24, {"w", "x", "y", "z"});
    CHECK(j.vertex_count() == 28);
    CHECK(j.edge_count() == 360);
    CHECK(same_graph(join_with_empty(o24, {}), o24));
    const Graph j12 = join_with_empty(octahedral_graph(12), {"w", "x", "y", "z"});
    CHECK(j12.vertex_count() == 16);
    CHECK(j12.edge_count() == 108);
    CHECK_THROWS_AS(join_with_empty(o24, {"3"}), InputError);
    CHECK_THROWS_AS(join_with_empty(o24, {"w", "w"}), InputError);
}

TEST_CASE("graph spec expressions")
{
    CHECK(same_graph(parse_graph_spec("octahedral(24)+join(w,x,y,z)"),
                     join_with_empty(octahedral_graph(24), {"w", "x", "y", "z"})));
    const Graph g = parse_graph_spec("complete(6)-edges(0--1,2-3)");
    CHECK(g.edge_count() == 13);
    CHECK_FALSE(g.adjacent(0, 5));
    CHECK_THROWS_AS(parse_graph_spec("complete(4)-edges(0-9)"), InputError);
    CHECK_THROWS_AS(parse_graph_spec("pyramid(4)"), InputError);
}

TEST_CASE("face tracing on small cases")
{
    SUBCASE("triangle on the sphere")
    {
        const FaceSet fs = trace_faces(triangle());
        CHECK(fs.count() == 2);
        CHECK(fs.faces[0].length() == 3);
        CHECK(fs.faces[1].length() == 3);
    }
    SUBCASE("type-1 loop is a cross-cap")
    {
        const Embedding e = single_loop(1);
        const FaceSet fs = trace_faces(e);
        REQUIRE(fs.count() == 1);
        CHECK(fs.faces[0].length() == 2);
        CHECK(fs.faces[0].steps[0].arc == fs.faces[0].steps[1].arc);
        CHECK(fs.one_way[0]);
        const SurfaceClass sc = classify_surface(e);
        CHECK_FALSE(sc.orientable);
        CHECK(sc.genus == 1);
    }
    SUBCASE("type-0 loop on the sphere")
    {
        const FaceSet fs = trace_faces(single_loop(0));
        CHECK(fs.count() == 2);
        CHECK_FALSE(fs.one_way[0]);
    }
}

TEST_CASE("printed tables")
{
    const Embedding k13 = load_adj("tables/k13.adj");
    const FaceSet fs = trace_faces(k13);
    CHECK(fs.count() == 52);
    CHECK(fs.length_histogram() == std::map<int, int>{{3, 52}});
    CHECK(euler_characteristic(k13) == -12);
    const SurfaceClass sc = classify_surface(k13);
    CHECK(sc.orientable);
    CHECK(sc.genus == 7);
    CHECK(check_shape(k13, ShapeSpec::parse("triangles")).pass);
    CHECK(same_graph(k13.graph(),
                     parse_graph_spec("complete(12)+star(x0;0,2,4,6,8,10)+star(x1;1,3,5,7,9,11)")));

    CHECK(euler_characteristic(load_adj("tables/table2_k12_minus_c12.adj")) == -6);
    CHECK(euler_characteristic(load_adj("tables/table4_k15_minus_6k2.adj")) == -18);

    const Embedding t1 = load_adj("tables/table1_k10_minus_3k2.adj");
    CHECK(same_graph(t1.graph(), parse_graph_spec("complete(7)+join(x,y,z)+edges(x-y,x-z,y-z)"
                                                   "-edges(x-1,y-4,z-3)")));
    CHECK_FALSE(same_graph(triangle().graph(), complete_graph(4)));
}

TEST_CASE("surface classification")
{
    CHECK(classify_surface(load_adj("tables/table2_k12_minus_c12.adj")).genus == 4);
    Graph g;
    g.add_vertex("a");
    g.add_vertex("b");
    const Embedding two_points(g, {{}, {}}, {});
    CHECK_THROWS_AS(classify_surface(two_points), InputError);
}

TEST_CASE("shape checks with labelled long faces")
{
    // hexagon on the sphere: two faces of length 6
    const Embedding hex = embedding_from_rows({"0", "1", "2", "3", "4", "5"},
                                              {{"1", "5"}, {"2", "0"}, {"3", "1"}, {"4", "2"}, {"5", "3"}, {"0", "4"}});
    CHECK_FALSE(check_shape(hex, ShapeSpec::parse("triangles")).pass);
    CHECK(check_shape(hex, ShapeSpec::parse("triangles+6x2")).pass);
    CHECK(check_shape(hex, ShapeSpec::parse("triangles+6[0,3]+6")).pass);
    CHECK_FALSE(check_shape(hex, ShapeSpec::parse("triangles+6[q]+6")).pass);
    CHECK(ShapeSpec::parse("triangles+6[x0]+24x2").to_string() == "triangles+6[x0]+24+24");
    CHECK_THROWS_AS(ShapeSpec::parse("squares"), InputError);
}

TEST_CASE("Euler lower bounds")
{
    CHECK(euler_lower_bound(complete_graph(13), true) == 8);
    CHECK(euler_lower_bound(octahedral_graph(28), true) == 48);
    CHECK(euler_lower_bound(parse_graph_spec("complete(20)-edges(0-1)"), false) == 45);
    CHECK(closed_form_bound(Family::ham_complement, 12) == 4);
    CHECK(closed_form_bound(Family::octahedral, 10) == 3);
    CHECK(closed_form_bound(Family::complete, 18) == 18);  // ceil(15*14/12)
    CHECK(ceil_div(-4, 6) == 0);
    CHECK(ceil_div(-7, 6) == -1);
    CHECK(ceil_div(7, 6) == 2);
}

TEST_CASE("bound coherence sweep")
{
    for (int n = 3; n <= 100; ++n)
        CHECK(closed_form_bound(Family::complete, n) == euler_lower_bound(complete_graph(n), true));
    for (int n = 4; n <= 100; n += 2)
        CHECK(closed_form_bound(Family::octahedral, n) == euler_lower_bound(octahedral_graph(n), true));
    for (int n = 5; n <= 100; ++n)
        CHECK(closed_form_bound(Family::ham_complement, n) ==
              euler_lower_bound(hamiltonian_complement(n), true));
}

TEST_CASE("ADJ round trip and errors")
{
    for (const char* f : {"tables/k13.adj", "tables/table1_k10_minus_3k2.adj", "tables/table2_k12_minus_c12.adj",
                          "tables/table3_o12_join_k4.adj", "tables/table4_k15_minus_6k2.adj",
                          "tables/table5_o18_join_k4.adj"}) {
        const std::string text = read_file(data_path(f));
        CHECK(print_adj(parse_adj(text)) == text);
    }
    const std::string twisted = "# cross-capped triangle\n0. 1 2\n1. 2 0\n2. 0 1\n! 0 1 1\n";
    const AdjDocument doc = parse_adj(twisted);
    CHECK(print_adj(doc) == twisted);
    CHECK_FALSE(classify_surface(doc.embedding).orientable);

    try {
        parse_adj("0. 1 2\n1. 0\n2. 0 1\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse_adj("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_adj("0. 1 1\n1. 0\n"), ParseError);
}

TEST_CASE("properties on random embeddings")
{
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 400; ++trial) {
        const bool pure = trial % 3 == 0;
        const Embedding emb = rotsys::testing::random_embedding(rng, 7, pure);
        const FaceSet fs = trace_faces(emb);

        // every edge is traversed exactly twice
        std::vector<int> uses(emb.edge_count(), 0);
        int total = 0;
        for (const auto& f : fs.faces) {
            total += f.length();
            for (const auto& s : f.steps)
                ++uses[edge_of(s.arc)];
        }
        CHECK(total == 2 * emb.edge_count());
        CHECK(std::all_of(uses.begin(), uses.end(), [](int u) { return u == 2; }));

        // independent face count
        CHECK(fs.count() == rotsys::testing::double_cover_face_count(emb));

        const SurfaceClass sc = classify_surface(emb, fs);
        if (sc.orientable)
            CHECK(sc.euler_characteristic == 2 - 2 * sc.genus);
        else
            CHECK(sc.euler_characteristic == 2 - sc.genus);
        if (pure)
            CHECK(sc.orientable);

        // reflecting any vertex leaves the surface alone
        Embedding refl = emb;
        const int v = std::uniform_int_distribution<int>(0, emb.vertex_count() - 1)(rng);
        refl.reflect(v);
        const FaceSet rfs = trace_faces(refl);
        CHECK(rfs.length_histogram() == fs.length_histogram());
        const SurfaceClass rsc = classify_surface(refl, rfs);
        CHECK(rsc.orientable == sc.orientable);
        CHECK(rsc.genus == sc.genus);

        if (check_shape(emb, fs, ShapeSpec::parse("triangles")).pass)
            CHECK(3 * fs.count() == 2 * emb.edge_count());
    }
}
