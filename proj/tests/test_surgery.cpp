#include "doctest.h"

#include <algorithm>
#include <set>

#include "rotsys/bounds.hpp"
#include "rotsys/current_formats.hpp"
#include "rotsys/surgery.hpp"
#include "support.hpp"

using namespace rotsys;
using rotsys::testing::data_path;
using rotsys::testing::load_adj;

namespace {

std::string row_text(const Embedding& emb, const std::string& name)
{
    std::string s;
    for (const auto& x : emb.neighbor_row(emb.graph().index(name)))
        s += (s.empty() ? "" : " ") + x;
    return s;
}

Derivation derived(const std::string& rel)
{
    return parse_log_document(read_file(data_path(rel))).derive();
}

ScriptRun run(const Embedding& emb, const std::string& text)
{
    return run_script(emb, parse_script(text));
}

// rows compared up to where each cyclic list starts
bool same_rows(const Embedding& a, const Embedding& b)
{
    if (a.vertex_count() != b.vertex_count())
        return false;
    for (int v = 0; v < a.vertex_count(); ++v) {
        auto ra = a.neighbor_row(v), rb = b.neighbor_row(v);
        if (ra.size() != rb.size())
            return false;
        bool hit = ra.empty();
        for (size_t s = 0; s < ra.size() && !hit; ++s) {
            std::rotate(rb.begin(), rb.begin() + 1, rb.end());
            hit = ra == rb;
        }
        if (!hit)
            return false;
    }
    return true;
}

Embedding plain(Embedding e)
{
    e.clear_corner_labels();
    return e;
}

}  // namespace

TEST_CASE("K13 finish: one handle and a contraction")
{
    const Embedding k13 = load_adj("tables/k13.adj");
    const ScriptRun r = run_script(k13, parse_script(read_file(data_path("scripts/k13.sur"))));
    REQUIRE_MESSAGE(r.ok, r.error);
    const SurfaceClass sc = classify_surface(r.embedding);
    CHECK(sc.orientable);
    CHECK(sc.genus == 8);
    CHECK(same_graph(r.embedding.graph(), parse_graph_spec("complete(12)+join(x0)")));
    REQUIRE(r.trace.size() == 3);
    CHECK(r.trace[1].euler_characteristic == r.trace[0].euler_characteristic - 2);
    CHECK(r.trace[2].euler_characteristic == r.trace[1].euler_characteristic);
}

TEST_CASE("O28 from the cascade embedding")
{
    const Embedding start = derived("logs/o28.log").embedding;
    const ScriptRun r = run_script(start, parse_script(read_file(data_path("scripts/o28.sur"))));
    REQUIRE_MESSAGE(r.ok, r.error);
    const Graph& g = r.embedding.graph();
    CHECK(same_graph(g, parse_graph_spec("octahedral(24)+join(w,x,y,z)+edges(w-x,y-z,w-y,x-z)")));
    // complete minus a perfect matching, checked directly
    REQUIRE(g.vertex_count() == 28);
    for (int v = 0; v < 28; ++v) {
        CHECK(g.degree(v) == 26);
        int missing = 0;
        for (int u = 0; u < 28; ++u)
            missing += u != v && !g.adjacent(u, v);
        CHECK(missing == 1);
    }
    const SurfaceClass sc = classify_surface(r.embedding);
    CHECK(sc.orientable);
    CHECK(sc.genus == 48);
    CHECK(sc.genus == classify_surface(start).genus + 1);
    CHECK(sc.genus == closed_form_bound(Family::octahedral, 28));
}

TEST_CASE("K18 from the O18 cascade with two handles")
{
    const Embedding o18 = derived("logs/o18.log").embedding;
    CHECK(same_graph(o18.graph(), parse_graph_spec("octahedral(18)")));
    CHECK(check_shape(o18, ShapeSpec::parse("triangles")).pass);
    CHECK(classify_surface(o18).genus == 16);

    const ScriptRun r = run_script(o18, parse_script(read_file(data_path("scripts/k18.sur"))));
    REQUIRE_MESSAGE(r.ok, r.error);
    CHECK(same_graph(r.embedding.graph(), parse_graph_spec("complete(18)")));
    const SurfaceClass sc = classify_surface(r.embedding);
    CHECK(sc.orientable);
    CHECK(sc.genus == 18);
    CHECK(sc.genus == closed_form_bound(Family::complete, 18));

    // after the first handle and its flips: triangular, three edges short of K18
    const TraceEntry& mid = r.trace[11];
    CHECK(mid.edges == 150);
    CHECK(mid.face_lengths == std::map<int, int>{{3, 100}});
}

TEST_CASE("empty script is the identity")
{
    const Embedding k13 = load_adj("tables/k13.adj");
    const ScriptRun r = run(k13, "# nothing to do\n");
    CHECK(r.ok);
    CHECK(print_adj(r.embedding) == print_adj(k13));
    CHECK(r.trace.size() == 1);
}

TEST_CASE("subdividing faces")
{
    const Derivation d = derived("logs/k13.log");
    const ScriptRun r = run(plain(d.unsubdivided), "subdivide face-of (0,10,8,6,4,2) label x0\n"
                                                  "subdivide face-of (1,3,5,7,9,11) label x1\n");
    REQUIRE_MESSAGE(r.ok, r.error);
    CHECK(row_text(r.embedding, "x0") == "0 10 8 6 4 2");
    CHECK(row_text(r.embedding, "x1") == "1 3 5 7 9 11");
    CHECK(check_shape(r.embedding, ShapeSpec::parse("triangles")).pass);

    // a triangle becomes three
    const Embedding tri = embedding_from_rows({"0", "1", "2"}, {{"1", "2"}, {"2", "0"}, {"0", "1"}});
    const ScriptRun t = run(tri, "subdivide (1,0,2) label c\n");
    REQUIRE(t.ok);
    CHECK(t.trace.back().face_lengths == std::map<int, int>{{3, 4}});
    CHECK(t.trace.back().euler_characteristic == 2);

    const Derivation o = derived("logs/o28.log");
    Embedding o24 = plain(o.unsubdivided);
    const FaceSet fs = trace_faces(o24);
    const Face* ham = nullptr;
    for (const auto& f : fs.faces)
        if (f.length() == 24)
            ham = &f;
    REQUIRE(ham);
    const int w = subdivide_face(o24, *ham, "w");
    CHECK(o24.graph().degree(w) == 24);
    std::set<int> nb;
    for (int x : o24.graph().neighbors(w))
        nb.insert(x);
    CHECK(nb.size() == 24);
}

TEST_CASE("delete and add")
{
    const Embedding o = derived("logs/o28.log").embedding;
    const ScriptRun del = run(o, "delete 0 3\n");
    REQUIRE(del.ok);
    CHECK(del.trace.back().face_lengths.at(4) == 1);
    CHECK(del.trace.back().euler_characteristic == del.trace[0].euler_characteristic);

    // re-adding in the quadrilateral restores the rows exactly
    const int zero = o.graph().index("0");
    const auto& rot = o.rotation(zero);
    std::string p, n;
    for (size_t i = 0; i < rot.size(); ++i)
        if (o.graph().name(o.head_of(rot[i])) == "3") {
            p = o.graph().name(o.head_of(rot[(i + rot.size() - 1) % rot.size()]));
            n = o.graph().name(o.head_of(rot[(i + 1) % rot.size()]));
        }
    const ScriptRun back = run(o, "delete 0 3\nadd (" + p + ",0," + n + ") (" + n + ",3," + p + ")\n");
    REQUIRE_MESSAGE(back.ok, back.error);
    CHECK(print_adj(back.embedding) == print_adj(o));

    CHECK_FALSE(run(o, "delete 0 12\n").ok);
    CHECK_FALSE(run(o, "add (10,0,18) (1,2,3)\n").ok);
}

TEST_CASE("corners on different faces need a bridge")
{
    const Embedding k13 = load_adj("tables/k13.adj");
    const ScriptRun r = run(k13, "simple off\nadd (0,x0,10) (1,x1,3)\n");
    CHECK_FALSE(r.ok);
    CHECK(r.error.find("bridge") != std::string::npos);
    CHECK(r.failed_line == 2);
}

TEST_CASE("flips")
{
    const Embedding k13 = load_adj("tables/k13.adj");
    // 0. 10 x0 2 ...: the edge 0-x0 sits between triangles with apexes 10 and 2
    const ScriptRun f = run(k13, "delete 10 2\nflip 0 x0\n");
    REQUIRE_MESSAGE(f.ok, f.error);
    CHECK(f.embedding.graph().adjacent(f.embedding.graph().index("10"), f.embedding.graph().index("2")));
    CHECK_FALSE(f.embedding.graph().adjacent(0, f.embedding.graph().index("x0")));
    CHECK(check_shape(f.embedding, ShapeSpec::parse("triangles+4")).pass);

    const ScriptRun back = run(f.embedding, "flip 10 2\n");
    REQUIRE_MESSAGE(back.ok, back.error);
    CHECK(same_rows(back.embedding, run(k13, "delete 10 2\n").embedding));

    // the apex pair is already joined
    const ScriptRun clash = run(k13, "flip 0 x0\n");
    CHECK_FALSE(clash.ok);
}

TEST_CASE("contractions")
{
    const Embedding path = embedding_from_rows({"a", "b", "c"}, {{"b"}, {"a", "c"}, {"b"}});
    const ScriptRun r = run(path, "contract a b\n");
    REQUIRE(r.ok);
    CHECK(r.embedding.vertex_count() == 2);
    CHECK(classify_surface(r.embedding).genus == 0);
    CHECK(r.embedding.graph().name(0) == "a");

    const Embedding tri = embedding_from_rows({"0", "1", "2"}, {{"1", "2"}, {"2", "0"}, {"0", "1"}});
    CHECK_FALSE(run(tri, "contract 0 1\n").ok);
}

TEST_CASE("negative references and shifts")
{
    const Embedding k13 = load_adj("tables/k13.adj");
    const Graph& g = k13.graph();
    CHECK(resolve_ref(g, "-3") == g.index("9"));
    CHECK(resolve_ref(g, "-3", 2) == g.index("11"));
    CHECK(resolve_ref(g, "x0", 2) == g.index("x0"));
    // with a shift of 2 the same triple names the corner two rows on
    const ScriptRun a = run(k13, "delete 4 6\n");
    const ScriptRun b = run(k13, "shift +2\ndelete 2 4\n");
    REQUIRE(a.ok);
    REQUIRE(b.ok);
    CHECK(print_adj(a.embedding) == print_adj(b.embedding));
}

TEST_CASE("script text round trip")
{
    const std::string text = "# a comment\n\ndelete 0 3\ndelete 0 -3 apex w x\nadd (w,0,x) (0,w,3)\n"
                             "bridge (0,x0,10) (1,x1,3) orient=-\nflip -3 x\nsubdivide (1,0,2) label c\n"
                             "subdivide face-of (0,10,8,6,4,2) label x0\ncontract x0 x1\nshift +2\nshift -1\n"
                             "simple off\nsimple on\n";
    CHECK(print_script(parse_script(text)) == text);
    CHECK(print_script(parse_script(read_file(data_path("scripts/k13.sur")))) ==
          read_file(data_path("scripts/k13.sur")));
    CHECK_THROWS_AS(parse_script("twist 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_script("bridge (0,1) (1,2,3) orient=+\n"), ParseError);
    CHECK_THROWS_AS(parse_script("shift 2\n"), ParseError);
}

TEST_CASE("random surgery keeps the bookkeeping straight")
{
    std::mt19937 rng(424242);
    int applied = 0;
    for (int trial = 0; trial < 1200; ++trial) {
        Embedding emb = rotsys::testing::random_embedding(rng, 6, trial % 2 == 0);
        const FaceSet fs = trace_faces(emb);
        const int chi = euler_characteristic(emb, fs);
        const bool orientable = is_orientable(emb);
        auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
        const int op = trial % 5;
        int expect = chi;
        try {
            if (op == 0) {
                subdivide_face(emb, fs.faces[pick(fs.count())], "new");
            } else if (op == 1) {
                const Face& f = fs.faces[pick(fs.count())];
                if (f.length() < 2)
                    continue;
                const size_t i = pick(f.length());
                size_t j = pick(f.length() - 1);
                j += j >= i;
                add_edge_in_face(emb, {f, i}, {f, j}, false);
            } else if (op == 2) {
                if (fs.count() < 2)
                    continue;
                const int a = pick(fs.count());
                int b = pick(fs.count() - 1);
                b += b >= a;
                const bool plus = rng() & 1;
                bridge(emb, {fs.faces[a], static_cast<size_t>(pick(fs.faces[a].length()))},
                       {fs.faces[b], static_cast<size_t>(pick(fs.faces[b].length()))}, plus, false);
                expect = chi - 2;
                if (plus && orientable)
                    CHECK(is_orientable(emb));
            } else if (op == 3) {
                delete_edge(emb, pick(emb.edge_count()));
            } else {
                const Embedding before = emb;
                const int e = pick(emb.edge_count());
                const int ne = flip_edge(emb, e, false);
                CHECK(check_shape(emb, ShapeSpec::parse("triangles")).pass ==
                      check_shape(before, ShapeSpec::parse("triangles")).pass);
                (void)ne;
            }
        } catch (const SurgeryError&) {
            continue;  // not applicable here
        }
        ++applied;
        const FaceSet after = trace_faces(emb);
        CHECK_MESSAGE(euler_characteristic(emb, after) == expect, "op " << op << " trial " << trial);
        CHECK(after.count() == rotsys::testing::double_cover_face_count(emb));
        int total = 0;
        for (const auto& f : after.faces)
            total += f.length();
        CHECK(total == 2 * emb.edge_count());
    }
    CHECK(applied > 600);
}

TEST_CASE("flip is an involution")
{
    std::mt19937 rng(99);
    int flipped = 0;
    for (int trial = 0; trial < 300; ++trial) {
        // triangulations come from subdividing every face of a random map
        Embedding emb = rotsys::testing::random_embedding(rng, 5, trial % 2 == 0, true);
        for (int k = 0;; ++k) {
            const FaceSet fs = trace_faces(emb);
            const Face* big = nullptr;
            for (const auto& f : fs.faces)
                if (f.length() != 3)
                    big = &f;
            if (!big)
                break;
            subdivide_face(emb, *big, "s" + std::to_string(k));
        }
        const int e = std::uniform_int_distribution<int>(0, emb.edge_count() - 1)(rng);
        Embedding once = emb;
        int ne;
        try {
            ne = flip_edge(once, e, true);
        } catch (const SurgeryError&) {
            continue;
        }
        Embedding twice = once;
        flip_edge(twice, ne, false);
        ++flipped;
        CHECK(trace_faces(twice).length_histogram() == trace_faces(emb).length_histogram());
        CHECK(same_rows(twice, emb));
    }
    CHECK(flipped > 50);
}
