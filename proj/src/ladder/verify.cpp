#include "rotsys/ladder.hpp"

#include <algorithm>
#include <set>

namespace rotsys {

std::vector<int> odd_path(const LadderInstance& inst)
{
    const CurrentGraph& cg = inst.cgt.graph;
    const Embedding& emb = cg.skeleton;
    std::set<int> odd;
    for (int e : inst.ladder_edges)
        if (cg.current[e] % 2 == 1)
            odd.insert(e);
    int start = -1;
    for (int e : inst.left_horizontals)
        if (odd.count(e)) {
            if (start >= 0)
                throw LadderError(LadderError::Code::template_error, "both leftmost horizontals are odd");
            start = e;
        }
    if (start < 0)
        throw LadderError(LadderError::Code::template_error, "no leftmost horizontal is odd");

    std::vector<int> path{start};
    std::set<int> ladder(inst.ladder_vertices.begin(), inst.ladder_vertices.end());
    int at = emb.graph().edge(start).v;  // left horizontals point into the ladder
    while (ladder.count(at)) {
        int next = -1;
        for (int a : emb.rotation(at)) {
            const int e = edge_of(a);
            if (odd.count(e) && e != path.back()) {
                if (next >= 0)
                    throw LadderError(LadderError::Code::template_error,
                                      "odd edges branch at " + emb.graph().name(at));
                next = e;
            }
        }
        if (next < 0)
            throw LadderError(LadderError::Code::template_error, "odd path stops at " + emb.graph().name(at));
        path.push_back(next);
        const Edge& ed = emb.graph().edge(next);
        at = ed.u == at ? ed.v : ed.u;
    }
    if (std::find(inst.right_horizontals.begin(), inst.right_horizontals.end(), path.back()) ==
        inst.right_horizontals.end())
        throw LadderError(LadderError::Code::template_error, "odd path leaves the ladder on the left");
    if (path.size() != odd.size())
        throw LadderError(LadderError::Code::template_error, "odd edges off the path");
    return path;
}

Report check_ladder(const LadderInstance& inst)
{
    Report r;
    const CurrentGraph& cg = inst.cgt.graph;
    const Graph& g = cg.skeleton.graph();
    const int odd_left = (cg.current[inst.left_horizontals[0]] % 2) + (cg.current[inst.left_horizontals[1]] % 2);
    r.check("one-odd-left", odd_left == 1, std::to_string(odd_left) + " odd");
    std::string bad;
    for (int v : inst.ladder_vertices)
        if (vertex_excess(cg, v) != 0)
            bad += (bad.empty() ? "" : ", ") + g.name(v);
    r.check("ladder-KCL", bad.empty(), bad);
    bad.clear();
    for (int e : inst.ladder_edges)
        if (cg.skeleton.signature(e) != 0)
            bad += (bad.empty() ? "" : ", ") + std::to_string(inst.cgt.edge_ids[e]);
    r.check("ladder-type0", bad.empty(), bad);
    try {
        r.add("odd-path", static_cast<long long>(odd_path(inst).size()));
    } catch (const LadderError& e) {
        r.check("odd-path", false, e.what());
    }
    return r;
}

std::array<Attachment, 4> traced_attachments(const LadderTemplate& t, const LadderInstance& inst)
{
    std::array<Attachment, 4> out;
    const FaceSet fs = trace_faces(inst.cgt.graph.skeleton);
    for (int a = 0; a < 4; ++a) {
        out[a].end = t.attach[a].end;
        out[a].vertex = t.attach[a].vertex;
        const int e = a < 2 ? inst.left_horizontals[a] : inst.right_horizontals[a - 2];
        // the fragment end is the tail on the left and the head on the right
        const int outer = arc_end(e, a < 2 ? 0 : 1);
        for (const auto& f : fs.faces)
            for (const auto& st : f.steps) {
                const Behavior b = st.reverse ? Behavior::reverse : Behavior::normal;
                if (st.arc == outer)
                    out[a].enter.push_back(b);
                else if (st.arc == mate(outer))
                    out[a].leave.push_back(b);
            }
        for (auto* v : {&out[a].enter, &out[a].leave})
            std::sort(v->begin(), v->end());
    }
    return out;
}

Report verify_family(const LadderTemplate& t, const std::vector<long long>& s_values)
{
    Report r;
    for (long long s : s_values) {
        const std::string p = "s=" + std::to_string(s) + ".";
        LadderInstance inst;
        try {
            inst = expand(t, s);
        } catch (const LadderError& e) {
            r.check(p + "expand", false, e.what());
            continue;
        }
        r.check(p + "expand", true);
        if (t.rungs)
            r.merge(check_ladder(inst), p);
        const Report pr = check_principles(inst.cgt.graph);
        r.check(p + "principles", pr.pass());
        if (!pr.pass())
            continue;
        Derivation d;
        try {
            d = derive(inst.cgt.graph);
        } catch (const DerivationError& e) {
            r.check(p + "derive", false, e.what());
            continue;
        }
        const Embedding& emb = d.embedding;
        const FaceSet fs = trace_faces(emb);
        r.check(p + "triangular", check_shape(emb, fs, ShapeSpec::parse("triangles")).pass);
        if (!t.target)
            continue;
        const int nv = static_cast<int>(t.target_vertices.at(s));
        r.check(p + "graph", same_graph(emb.graph(), family_graph(*t.target, nv)));
        const SurfaceClass sc = classify_surface(emb, fs);
        r.add(p + "genus", static_cast<long long>(sc.genus));
        r.check(p + "genus-bound", sc.orientable && sc.genus == closed_form_bound(*t.target, nv),
                "bound " + std::to_string(closed_form_bound(*t.target, nv)));
    }
    return r;
}

}  // namespace rotsys
