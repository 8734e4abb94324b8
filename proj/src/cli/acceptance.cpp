#include "rotsys/cli.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "rotsys/adj_format.hpp"
#include "rotsys/bounds.hpp"
#include "rotsys/current_formats.hpp"
#include "rotsys/ladder.hpp"
#include "rotsys/pipeline.hpp"
#include "rotsys/search.hpp"
#include "rotsys/surgery.hpp"

namespace rotsys {

namespace {

/// Shipped ladder template used for the family checks.
const char* const ladder_fixture = "templates/o_ladder.ldr";

std::string without_comments(const std::string& text)
{
    std::istringstream in(text);
    std::string line, out;
    while (std::getline(in, line))
        if (line.empty() || line[0] != '#')
            out += line + "\n";
    return out;
}

std::string row_text(const Embedding& emb, const std::string& name)
{
    std::string s;
    for (const auto& x : emb.neighbor_row(emb.graph().index(name)))
        s += (s.empty() ? "" : " ") + x;
    return s;
}

/// Collects failures; the criterion passes when none were recorded.
class Checks {
public:
    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            failed_.push_back(what);
    }
    bool pass() const { return failed_.empty(); }
    std::string detail(const std::string& ok_text) const
    {
        if (failed_.empty())
            return ok_text;
        std::string s = "failed: ";
        for (size_t i = 0; i < failed_.size() && i < 4; ++i)
            s += (i ? "; " : "") + failed_[i];
        if (failed_.size() > 4)
            s += "; ...";
        return s;
    }

private:
    std::vector<std::string> failed_;
};

bool cyclic_rows_equal(const Embedding& a, const Embedding& b)
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

Embedding random_map(std::mt19937& rng, int max_vertices, bool pure)
{
    const int n = std::uniform_int_distribution<int>(3, max_vertices)(rng);
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
    std::vector<std::vector<int>> rot(n);
    for (int a = 0; a < 2 * g.edge_count(); ++a) {
        const Edge& ed = g.edge(a >> 1);
        rot[(a & 1) ? ed.v : ed.u].push_back(a);
    }
    for (auto& r : rot)
        std::shuffle(r.begin(), r.end(), rng);
    std::vector<std::uint8_t> sig(g.edge_count(), 0);
    if (!pure)
        for (auto& s : sig)
            s = static_cast<std::uint8_t>(rng() & 1);
    return Embedding(std::move(g), std::move(rot), std::move(sig));
}

CriterionResult k13_derivation(const std::string& dir)
{
    Checks c;
    const LogDocument doc = parse_log_document(read_file(dir + "/logs/k13.log"));
    c.expect(doc.logs.size() == 2, "two logs");
    const Derivation d = doc.derive();
    c.expect(print_adj(d.embedding) == without_comments(read_file(dir + "/tables/k13.adj")), "14-row table");
    c.expect(check_shape(d.unsubdivided, ShapeSpec::parse("triangles+6[x0]+6[x1]")).pass, "two hexagons");
    const SurfaceClass sc = classify_surface(d.embedding);
    c.expect(sc.euler_characteristic == -12, "chi -12");
    c.expect(sc.orientable && sc.genus == 7, "genus 7");
    return {1, "K13 derivation", c.pass(), c.detail("table reproduced, chi -12, genus 7")};
}

PipelineResult shipped_pipeline(const std::string& dir, const std::string& name)
{
    return run_pipeline(parse_pipeline(read_file(dir + "/pipelines/" + name + ".pip")), dir);
}

CriterionResult k13_pipeline(const std::string& dir)
{
    Checks c;
    const PipelineResult res = shipped_pipeline(dir, "k13");
    c.expect(res.pass, "pipeline checks");
    if (res.final) {
        const SurfaceClass sc = classify_surface(*res.final);
        c.expect(sc.orientable && sc.genus == 8, "genus 8");
        c.expect(sc.genus == closed_form_bound(Family::complete, 13), "closed form");
        c.expect(same_graph(res.final->graph(), parse_graph_spec("complete(12)+join(x0)")), "K13");
    }
    return {2, "K13 pipeline", c.pass(), c.detail(res.summary)};
}

CriterionResult o28_cascade(const std::string& dir)
{
    Checks c;
    const Derivation d = parse_log_document(read_file(dir + "/logs/o28.log")).derive();
    c.expect(row_text(d.embedding, "1") == "z 4 y 6 17 7 3 10 0 x 22 w 20 12 8 23 5 18 16 15 9 14 21 19 11 2",
             "row 1");
    c.expect(check_shape(d.unsubdivided, ShapeSpec::parse("triangles+24x4")).pass, "four 24-gons");
    c.expect(same_graph(d.embedding.graph(), parse_graph_spec("octahedral(24)+join(w,x,y,z)")), "O24+K4bar");
    const SurfaceClass sc = classify_surface(d.embedding);
    c.expect(sc.orientable, "orientable");
    c.expect(sc.euler_characteristic == -92, "chi -92");
    return {3, "O28 cascade", c.pass(), c.detail("row 1 verbatim, chi -92, orientable")};
}

CriterionResult o28_surgery(const std::string& dir)
{
    Checks c;
    const Embedding start = parse_log_document(read_file(dir + "/logs/o28.log")).derive().embedding;
    const PipelineResult res = shipped_pipeline(dir, "o28");
    c.expect(res.pass, "pipeline checks");
    if (res.final) {
        const Graph& g = res.final->graph();
        c.expect(g.vertex_count() == 28, "28 vertices");
        for (int v = 0; v < g.vertex_count(); ++v) {
            int missing = 0;
            for (int u = 0; u < g.vertex_count(); ++u)
                missing += u != v && !g.adjacent(u, v);
            c.expect(missing == 1, "perfect matching missing at " + g.name(v));
        }
        const SurfaceClass sc = classify_surface(*res.final);
        c.expect(sc.orientable && sc.genus == 48, "genus 48");
        c.expect(sc.genus == classify_surface(start).genus + 1, "one more than the start");
    }
    return {4, "O28 surgery", c.pass(), c.detail(res.summary + ", start genus 47")};
}

/// Missing edges of a 15-vertex graph form six disjoint pairs.
bool k15_minus_six_k2(const Graph& g)
{
    if (g.vertex_count() != 15)
        return false;
    int missing = 0;
    for (int v = 0; v < 15; ++v) {
        int here = 0;
        for (int u = 0; u < 15; ++u)
            here += u != v && !g.adjacent(u, v);
        if (here > 1)
            return false;
        missing += here;
    }
    return missing == 12;
}

CriterionResult appendix_tables(const std::string& dir)
{
    struct Table {
        const char* file;
        std::function<bool(const Graph&)> graph;
        int genus;
    };
    auto spec = [](const char* text) {
        return [g = parse_graph_spec(text)](const Graph& h) { return same_graph(h, g); };
    };
    const std::vector<Table> tables = {
        {"table1_k10_minus_3k2.adj", spec("complete(7)+join(x,y,z)+edges(x-y,x-z,y-z)-edges(x-1,y-4,z-3)"), 3},
        {"table2_k12_minus_c12.adj", spec("hamcomp(12)"), 4},
        {"table3_o12_join_k4.adj", spec("octahedral(12)+join(w,x,y,z)"), 11},
        {"table4_k15_minus_6k2.adj", k15_minus_six_k2, 10},
        {"table5_o18_join_k4.adj", spec("octahedral(18)+join(w,x,y,z)"), 26},
    };
    Checks c;
    std::string genera;
    for (const auto& t : tables) {
        const Embedding emb = parse_adj(read_file(dir + "/tables/" + t.file)).embedding;
        const FaceSet fs = trace_faces(emb);
        const SurfaceClass sc = classify_surface(emb, fs);
        c.expect(sc.orientable, std::string(t.file) + " orientable");
        c.expect(check_shape(emb, fs, ShapeSpec::parse("triangles")).pass, std::string(t.file) + " triangular");
        c.expect(t.graph(emb.graph()), std::string(t.file) + " graph");
        c.expect(sc.genus == t.genus, std::string(t.file) + " genus " + std::to_string(sc.genus));
        genera += (genera.empty() ? "" : ",") + std::to_string(sc.genus);
    }
    c.expect(closed_form_bound(Family::ham_complement, 12) == 4, "bound for K12-C12");
    return {5, "Appendix tables", c.pass(), c.detail("genera " + genera)};
}

CriterionResult index4_round_trip(const std::string& dir)
{
    Checks c;
    const std::string text = read_file(dir + "/tables/table2_k12_minus_c12.adj");
    const Embedding table = parse_adj(text).embedding;
    try {
        const auto logs = extract_logs(table, 4);
        c.expect(logs.size() == 4, "four logs");
        c.expect(print_adj(derive_index4(logs, CurrentGroup(12))) == without_comments(text), "byte identical");
    } catch (const DerivationError& e) {
        c.expect(false, e.what());
    }
    const CurrentGroup g(12);
    const auto r0 = table.neighbor_row(0), r4 = table.neighbor_row(4);
    c.expect(r0.size() == r4.size(), "row lengths");
    for (size_t i = 0; i < r0.size() && i < r4.size(); ++i)
        c.expect(std::stoi(r4[i]) == g.add(std::stoi(r0[i]), 4), "row4 = row0 + 4 at " + std::to_string(i));
    return {6, "Index-4 round trip", c.pass(), c.detail("K12-C12 regenerated byte-identically")};
}

CriterionResult bound_sweep()
{
    Checks c;
    int compared = 0;
    for (int n = 3; n <= 100; ++n) {
        c.expect(closed_form_bound(Family::complete, n) == euler_lower_bound(complete_graph(n), true),
                 "K" + std::to_string(n));
        ++compared;
        if (n % 2 == 0 && n >= 4) {
            c.expect(closed_form_bound(Family::octahedral, n) == euler_lower_bound(octahedral_graph(n), true),
                     "O" + std::to_string(n));
            ++compared;
        }
        if (n >= 5) {
            c.expect(closed_form_bound(Family::ham_complement, n) ==
                         euler_lower_bound(hamiltonian_complement(n), true),
                     "K" + std::to_string(n) + "-C" + std::to_string(n));
            ++compared;
        }
    }
    c.expect(closed_form_bound(Family::ham_complement, 12) == 4, "K12-C12 bound 4");
    c.expect(closed_form_bound(Family::octahedral, 28) == 48, "O28 bound 48");
    return {7, "Bound coherence", c.pass(), c.detail(std::to_string(compared) + " graphs agree")};
}

CriterionResult surgery_invariants()
{
    Checks c;
    std::mt19937 rng(20261016);
    auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
    int cases = 0;
    for (int trial = 0; cases < 1200 && trial < 20000; ++trial) {
        Embedding emb = random_map(rng, 7, trial % 2 == 0);
        const FaceSet fs = trace_faces(emb);
        const int chi = euler_characteristic(emb, fs);
        const std::string tag = "trial " + std::to_string(trial);
        try {
            switch (trial % 6) {
            case 0:
                subdivide_face(emb, fs.faces[pick(fs.count())], "new");
                c.expect(euler_characteristic(emb) == chi, tag + " subdivide");
                break;
            case 1:
                delete_edge(emb, pick(emb.edge_count()));
                c.expect(euler_characteristic(emb) == chi, tag + " delete");
                break;
            case 2: {
                const Face& f = fs.faces[pick(fs.count())];
                if (f.length() < 2)
                    continue;
                const size_t i = pick(f.length());
                size_t j = pick(f.length() - 1);
                j += j >= i;
                const Embedding before = emb;
                const int e = add_edge_in_face(emb, {f, i}, {f, j}, false);
                c.expect(euler_characteristic(emb) == chi, tag + " add");
                delete_edge(emb, e);
                c.expect(cyclic_rows_equal(emb, before), tag + " delete undoes add");
                break;
            }
            case 3: {
                if (fs.count() < 2)
                    continue;
                const int a = pick(fs.count());
                int b = pick(fs.count() - 1);
                b += b >= a;
                bridge(emb, {fs.faces[a], static_cast<size_t>(pick(fs.faces[a].length()))},
                       {fs.faces[b], static_cast<size_t>(pick(fs.faces[b].length()))}, rng() & 1, false);
                c.expect(euler_characteristic(emb) == chi - 2, tag + " bridge");
                break;
            }
            case 4: {
                const Embedding before = emb;
                const int ne = flip_edge(emb, pick(emb.edge_count()), false);
                c.expect(euler_characteristic(emb) == chi, tag + " flip");
                flip_edge(emb, ne, false);
                c.expect(cyclic_rows_equal(emb, before), tag + " flip involution");
                break;
            }
            default: {
                const int e = pick(emb.edge_count());
                const Edge ed = emb.graph().edge(e);
                if (ed.u == ed.v)
                    continue;
                contract_edge(emb, e, ed.u);
                c.expect(euler_characteristic(emb) == chi, tag + " contract");
            }
            }
        } catch (const SurgeryError&) {
            continue;
        }
        ++cases;
    }
    c.expect(cases >= 1000, "only " + std::to_string(cases) + " cases applied");
    return {8, "Surgery invariants", c.pass(), c.detail(std::to_string(cases) + " randomized cases")};
}

CriterionResult ladder_expansion(const std::string& dir)
{
    Checks c;
    std::string detail;
    try {
        const LadderTemplate t = parse_ladder_template(read_file(dir + "/" + ladder_fixture));
        long long base = -1;
        for (long long s = 0; s < 64 && base < 0; ++s)
            if (t.valid(s))
                base = s;
        c.expect(base >= 0, "no valid s");
        if (base >= 0) {
            const Report fam = verify_family(t, {base, base + 2, base + 4});
            c.expect(fam.pass(), "family check");
            c.expect(t.rungs && t.rungs->count.at(base) == 0, "base has no rungs");

            // a flip at a ladder vertex touching an odd current must break a principle;
            // all-even vertices are not constrained by N6 and are only counted
            const LadderInstance inst = expand(t, base + 4);
            int flips = 0, free = 0;
            for (int v : inst.ladder_vertices) {
                CurrentGraph cg = inst.cgt.graph;
                auto rot = cg.skeleton.rotation(v);
                const bool constrained = std::any_of(rot.begin(), rot.end(), [&](int a) {
                    return cg.current_of(a) % 2 != 0;
                });
                if (!constrained) {
                    ++free;
                    continue;
                }
                std::swap(rot[0], rot[1]);
                cg.skeleton.set_rotation(v, rot);
                c.expect(!check_principles(cg).pass(), "flip at " + cg.skeleton.graph().name(v) + " survives");
                ++flips;
            }
            c.expect(flips > 0, "no constrained ladder vertex");
            detail = "s=" + std::to_string(base) + "," + std::to_string(base + 2) + "," +
                     std::to_string(base + 4) + "; " + std::to_string(flips) + " single flips rejected, " +
                     std::to_string(free) + " all-even vertices free";
        }
    } catch (const std::exception& e) {
        c.expect(false, e.what());
    }
    return {9, "Ladder expansion", c.pass(), c.detail(detail)};
}

SearchSpec triangles_of(const std::string& graph)
{
    SearchSpec s;
    s.graph_text = graph;
    s.target = parse_graph_spec(graph);
    s.shape = ShapeSpec::parse("triangles");
    s.orientable_only = true;
    return s;
}

CriterionResult search_checks()
{
    Checks c;
    const SearchSpec k7 = triangles_of("complete(7)");
    const auto t0 = std::chrono::steady_clock::now();
    const SearchResult full = search(k7);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.expect(full.status == SearchStatus::found, "K7 found");
    c.expect(secs < 10.0, "K7 within 10 s");
    if (full.embedding) {
        const SurfaceClass sc = classify_surface(*full.embedding);
        c.expect(sc.orientable && sc.genus == 1, "K7 genus 1");
        c.expect(same_graph(full.embedding->graph(), k7.target), "K7 graph");
    }
    const SearchResult k5 = search(triangles_of("complete(5)"));
    c.expect(k5.status == SearchStatus::impossible && k5.nodes == 0, "K5 impossible by counting");

    bool seen = false;
    for (long long budget = 1; full.status == SearchStatus::found && budget <= 4 * full.nodes;
         budget = budget * 3 / 2 + 1) {
        SearchSpec s = k7;
        s.node_budget = budget;
        const SearchResult r = search(s);
        if (seen)
            c.expect(r.status == SearchStatus::found, "budget " + std::to_string(budget) + " lost the result");
        if (r.status == SearchStatus::found)
            seen = true;
        else
            c.expect(r.status == SearchStatus::budget_exceeded, "budget " + std::to_string(budget));
    }
    c.expect(seen, "monotone sweep never found K7");
    std::ostringstream d;
    d.precision(2);
    d << std::fixed << "K7 in " << secs << " s, " << full.nodes << " nodes; K5 impossible";
    return {10, "Search", c.pass(), c.detail(d.str())};
}

CriterionResult k18_pipeline(const std::string& dir)
{
    Checks c;
    const PipelineResult res = shipped_pipeline(dir, "k18");
    c.expect(res.pass, "pipeline checks");
    if (res.final) {
        const SurfaceClass sc = classify_surface(*res.final);
        c.expect(same_graph(res.final->graph(), complete_graph(18)), "K18");
        c.expect(sc.orientable && sc.genus == closed_form_bound(Family::complete, 18), "genus at the bound");
    }
    return {11, "K18 pipeline", c.pass(), c.detail(res.summary + " (closed-form bound 18)")};
}

CriterionResult guarded(int number, const std::string& title, const std::function<CriterionResult()>& run)
{
    try {
        return run();
    } catch (const std::exception& e) {
        return {number, title, false, std::string("error: ") + e.what()};
    }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::string& dir)
{
    return {
        guarded(1, "K13 derivation", [&] { return k13_derivation(dir); }),
        guarded(2, "K13 pipeline", [&] { return k13_pipeline(dir); }),
        guarded(3, "O28 cascade", [&] { return o28_cascade(dir); }),
        guarded(4, "O28 surgery", [&] { return o28_surgery(dir); }),
        guarded(5, "Appendix tables", [&] { return appendix_tables(dir); }),
        guarded(6, "Index-4 round trip", [&] { return index4_round_trip(dir); }),
        guarded(7, "Bound coherence", [] { return bound_sweep(); }),
        guarded(8, "Surgery invariants", [] { return surgery_invariants(); }),
        guarded(9, "Ladder expansion", [&] { return ladder_expansion(dir); }),
        guarded(10, "Search", [] { return search_checks(); }),
        guarded(11, "K18 pipeline", [&] { return k18_pipeline(dir); }),
    };
}

std::string format_criterion(const CriterionResult& c)
{
    std::ostringstream s;
    s << (c.pass ? "PASS" : "FAIL") << "  " << (c.number < 10 ? " " : "") << c.number << "  " << c.title << ": "
      << c.detail;
    return s.str();
}

}  // namespace rotsys
