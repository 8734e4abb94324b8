#include "doctest.h"

#include <algorithm>

#include "rotsys/ladder.hpp"
#include "support.hpp"

using namespace rotsys;
using rotsys::testing::data_path;

namespace {

LadderTemplate load_template(const std::string& rel)
{
    return parse_ladder_template(read_file(data_path(rel)));
}

LadderError::Code expand_error(const LadderTemplate& t, long long s)
{
    try {
        expand(t, s);
    } catch (const LadderError& e) {
        return e.code();
    }
    FAIL("expand did not throw");
    return LadderError::Code::template_error;
}

std::vector<Behavior> sorted(std::vector<Behavior> b)
{
    std::sort(b.begin(), b.end());
    return b;
}

bool touches_odd(const CurrentGraph& cg, int v)
{
    const auto& rot = cg.skeleton.rotation(v);
    return std::any_of(rot.begin(), rot.end(), [&](int a) { return cg.current_of(a) % 2 != 0; });
}

CurrentGraph flipped(const LadderInstance& inst, int v)
{
    CurrentGraph cg = inst.cgt.graph;
    auto rot = cg.skeleton.rotation(v);
    std::swap(rot[0], rot[1]);
    cg.skeleton.set_rotation(v, rot);
    return cg;
}

}  // namespace

TEST_CASE("affine coefficients")
{
    CHECK(Affine::parse("12s+20").at(2) == 44);
    CHECK(Affine::parse("-3s-5").at(4) == -17);
    CHECK(Affine::parse("-s").at(3) == -3);
    CHECK(Affine::parse("7").at(9) == 7);
    CHECK(Affine::parse("2s+3").str() == "2s+3");
    CHECK_THROWS_AS(Affine::parse("2t+1"), InputError);
}

TEST_CASE("ladder templates print back byte-identically")
{
    for (const char* rel : {"templates/o_ladder.ldr", "templates/theta_z7.ldr"}) {
        const std::string text = read_file(data_path(rel));
        CHECK(print_ladder_template(parse_ladder_template(text)) == text);
    }
}

TEST_CASE("template range")
{
    const LadderTemplate t = load_template("templates/o_ladder.ldr");
    CHECK(t.valid(0));
    CHECK(t.valid(2));
    CHECK(t.valid(6));
    CHECK_FALSE(t.valid(1));
    CHECK_FALSE(t.valid(-2));
    CHECK(expand_error(t, 1) == LadderError::Code::out_of_range);
    CHECK(expand_error(t, -2) == LadderError::Code::out_of_range);
}

TEST_CASE("the zero-rung base case expands")
{
    const LadderTemplate t = load_template("templates/o_ladder.ldr");
    const LadderInstance inst = expand(t, 0);
    CHECK(inst.ladder_vertices.empty());
    CHECK(check_principles(inst.cgt.graph).pass());
    CHECK(check_ladder(inst).pass());
    CHECK(odd_path(inst).size() == 1);
    const Derivation d = derive(inst.cgt.graph);
    const SurfaceClass sc = classify_surface(d.embedding);
    CHECK(sc.orientable);
    CHECK(sc.genus == closed_form_bound(Family::octahedral, 20));
}

TEST_CASE("the octahedral family meets the bound at s = 0, 2, 4")
{
    const LadderTemplate t = load_template("templates/o_ladder.ldr");
    const Report r = verify_family(t, {0, 2, 4});
    INFO(r.to_text());
    CHECK(r.pass());
    for (long long s : {0, 2, 4}) {
        const LadderInstance inst = expand(t, s);
        CHECK(inst.ladder_vertices.size() == static_cast<size_t>(4 * s));
        CHECK(odd_path(inst).size() == static_cast<size_t>(3 * s + 1));
    }
}

TEST_CASE("attachment behaviours repeat with period two")
{
    const LadderTemplate t = load_template("templates/o_ladder.ldr");
    for (long long s : {0, 2, 4}) {
        const auto traced = traced_attachments(t, expand(t, s));
        for (int k = 0; k < 4; ++k) {
            CAPTURE(s);
            CAPTURE(k);
            CHECK(sorted(traced[k].enter) == sorted(t.attach[k].enter));
            CHECK(sorted(traced[k].leave) == sorted(t.attach[k].leave));
        }
    }
}

TEST_CASE("single flips at constrained ladder vertices break the principles")
{
    const LadderTemplate t = load_template("templates/o_ladder.ldr");
    const LadderInstance inst = expand(t, 2);
    int constrained = 0, free = 0;
    for (int v : inst.ladder_vertices) {
        const CurrentGraph cg = flipped(inst, v);
        if (touches_odd(inst.cgt.graph, v)) {
            ++constrained;
            CHECK_FALSE(check_principles(cg).pass());
        } else {
            ++free;
        }
    }
    CHECK(constrained == 6);
    CHECK(free == 2);
}

TEST_CASE("a flip at an all-even ladder vertex gives another triangulation")
{
    const LadderTemplate t = load_template("templates/o_ladder.ldr");
    const LadderInstance inst = expand(t, 2);
    const auto it = std::find_if(inst.ladder_vertices.begin(), inst.ladder_vertices.end(),
                                 [&](int v) { return !touches_odd(inst.cgt.graph, v); });
    REQUIRE(it != inst.ladder_vertices.end());
    const CurrentGraph cg = flipped(inst, *it);
    CHECK(check_principles(cg).pass());
    CHECK(classify_surface(derive(cg).embedding).genus == closed_form_bound(Family::octahedral, 44));
}

TEST_CASE("a ladder-free template behaves like a plain current graph")
{
    const LadderTemplate t = load_template("templates/theta_z7.ldr");
    for (long long s : {0, 1, 2}) {
        const LadderInstance inst = expand(t, s);
        CHECK(inst.ladder_vertices.empty());
        CHECK(check_principles(inst.cgt.graph).pass());
    }
    CHECK(verify_family(t, {0, 1}).pass());
}

TEST_CASE("even rung increments are rejected at every s")
{
    LadderTemplate t = load_template("templates/o_ladder.ldr");
    t.rungs->increment = 2;
    for (long long s : {0, 2, 4})
        CHECK(expand_error(t, s) == LadderError::Code::even_increment);
}

TEST_CASE("a rung current equal to a fragment current is a collision")
{
    LadderTemplate t = load_template("templates/o_ladder.ldr");
    // edge 3 carries current 1
    t.rungs->first = Affine{0, 1};
    CHECK(expand_error(t, 2) == LadderError::Code::collision);
}

TEST_CASE("odd path needs exactly one odd leftmost horizontal")
{
    const LadderTemplate t = load_template("templates/o_ladder.ldr");
    LadderInstance inst = expand(t, 2);
    auto& cur = inst.cgt.graph.current;
    const int n = inst.cgt.graph.group.order();

    LadderInstance even = inst;
    for (int e : even.left_horizontals)
        if (even.cgt.graph.current[e] % 2 == 1)
            even.cgt.graph.current[e] = (even.cgt.graph.current[e] + 1) % n;
    CHECK_THROWS_WITH_AS(odd_path(even), "no leftmost horizontal is odd", LadderError);

    for (int e : inst.left_horizontals)
        if (cur[e] % 2 == 0)
            cur[e] = (cur[e] + 1) % n;
    CHECK_THROWS_WITH_AS(odd_path(inst), "both leftmost horizontals are odd", LadderError);
}

TEST_CASE("malformed templates")
{
    const std::string text = read_file(data_path("templates/o_ladder.ldr"));
    std::string bad = text;
    bad.replace(bad.find("group 12s+20"), 12, "group 12q+20");
    CHECK_THROWS_AS(parse_ladder_template(bad), ParseError);

    LadderTemplate t = parse_ladder_template(text);
    t.attach[0].enter.clear();
    CHECK(expand_error(t, 0) == LadderError::Code::template_error);
}
