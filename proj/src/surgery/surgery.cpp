#include "rotsys/surgery.hpp"

#include <algorithm>
#include <set>

namespace rotsys {

namespace {

bool is_integer_token(const std::string& t)
{
    size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size())
        return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(), [](char c) { return c >= '0' && c <= '9'; });
}

int numeric_vertex_count(const Graph& g)
{
    int n = 0;
    for (const auto& name : g.names())
        n += is_numeric_name(name);
    return n;
}

/// Places a new edge after arc-end `after_u` at u and after `after_v` at v.
int insert_edge(Embedding& emb, int u, int after_u, int v, int after_v, int sig)
{
    const int pos_u = emb.position(after_u) + 1;
    int pos_v = emb.position(after_v) + 1;
    if (u == v && pos_v > pos_u)
        ++pos_v;
    return emb.add_edge(u, pos_u, v, pos_v, sig);
}

/// Faces (by index) through edge e, one entry per traversal.
std::vector<int> faces_through(const FaceSet& fs, int e)
{
    std::vector<int> out;
    for (int f = 0; f < fs.count(); ++f)
        for (const auto& s : fs.faces[f].steps)
            if (edge_of(s.arc) == e)
                out.push_back(f);
    return out;
}

/// Third vertex of a triangle through edge e (u, v its endpoints), or -1.
int apex_of(const Embedding& emb, const Face& f, int u, int v)
{
    if (f.length() != 3)
        return -1;
    for (int x : f.vertices(emb))
        if (x != u && x != v)
            return x;
    return -1;
}

std::string vname(const Embedding& emb, int v)
{
    return emb.graph().name(v);
}

int corner_vertex(const Embedding& emb, const FaceCorner& c)
{
    return emb.vertex_of(c.face.steps.at(c.step).arc);
}

void guard_pair(const Embedding& emb, int u, int v, bool simple_guard)
{
    if (!simple_guard)
        return;
    if (u == v)
        throw SurgeryError("edge would be a loop at " + vname(emb, u));
    if (emb.graph().adjacent(u, v))
        throw SurgeryError("edge " + vname(emb, u) + "-" + vname(emb, v) + " already present");
}

}  // namespace

int resolve_ref(const Graph& g, const std::string& token, int offset)
{
    if (is_integer_token(token)) {
        const int n = numeric_vertex_count(g);
        if (n == 0)
            throw SurgeryError("numeric reference '" + token + "' without numeric vertices");
        const long long k = ((std::stoll(token) + offset) % n + n) % n;
        if (auto v = g.find(std::to_string(k)))
            return *v;
        throw SurgeryError("no vertex " + std::to_string(k));
    }
    if (auto v = g.find(token))
        return *v;
    throw SurgeryError("no vertex '" + token + "'");
}

FaceCorner find_corner(const Embedding& emb, const FaceSet& faces, const CornerRef& ref, int offset)
{
    const Graph& g = emb.graph();
    const int v = resolve_ref(g, ref.vertex, offset);
    const int p = resolve_ref(g, ref.prev, offset);
    const int n = resolve_ref(g, ref.next, offset);
    std::vector<Corner> hits;
    for (int a : emb.rotation(v)) {
        const int b = emb.succ(a);
        if (emb.head_of(a) == p && emb.head_of(b) == n)
            hits.emplace_back(a, b);
    }
    if (hits.empty())
        throw SurgeryError("no corner " + ref.to_string());
    if (hits.size() > 1)
        throw SurgeryError("corner " + ref.to_string() + " is ambiguous");
    for (const auto& f : faces.faces)
        for (size_t i = 0; i < f.steps.size(); ++i)
            if (step_corner(f, i) == hits[0])
                return {f, i};
    throw SurgeryError("corner " + ref.to_string() + " lies on no face");
}

int find_edge(const Embedding& emb, int u, int v, std::optional<std::pair<int, int>> apexes)
{
    std::vector<int> ids = emb.graph().edges_between(u, v);
    if (ids.empty())
        throw SurgeryError("no edge " + vname(emb, u) + "-" + vname(emb, v));
    if (apexes) {
        const FaceSet fs = trace_faces(emb);
        const std::set<int> want{apexes->first, apexes->second};
        std::vector<int> keep;
        for (int e : ids) {
            std::set<int> got;
            for (int f : faces_through(fs, e))
                got.insert(apex_of(emb, fs.faces[f], u, v));
            if (got == want)
                keep.push_back(e);
        }
        ids = keep;
        if (ids.empty())
            throw SurgeryError("no edge " + vname(emb, u) + "-" + vname(emb, v) + " between triangles with apexes " +
                               vname(emb, apexes->first) + " and " + vname(emb, apexes->second));
    }
    if (ids.size() > 1)
        throw SurgeryError("edge " + vname(emb, u) + "-" + vname(emb, v) + " is not unique; give its apexes");
    return ids[0];
}

int subdivide_face(Embedding& emb, const Face& face, const std::string& label)
{
    if (emb.graph().find(label))
        throw SurgeryError("vertex '" + label + "' already exists");
    std::vector<Corner> corners;
    for (size_t i = 0; i < face.steps.size(); ++i)
        corners.push_back(step_corner(face, i));
    const int w = emb.add_vertex(label);
    // a reverse step needs a type-1 spoke so the new triangle closes
    for (size_t i = 0; i < face.steps.size(); ++i) {
        const int v = emb.vertex_of(face.steps[i].arc);
        emb.add_edge(v, emb.position(corners[i].first) + 1, w, 0, face.steps[i].reverse ? 1 : 0);
    }
    std::vector<int> rot = emb.rotation(w);
    std::rotate(rot.begin(), std::min_element(rot.begin(), rot.end(), [&](int a, int b) {
                    return emb.head_of(a) < emb.head_of(b);
                }), rot.end());
    emb.set_rotation(w, rot);
    return w;
}

void delete_edge(Embedding& emb, int e)
{
    const FaceSet fs = trace_faces(emb);
    const auto through = faces_through(fs, e);
    if (through.size() == 2 && through[0] == through[1]) {
        const Edge& ed = emb.graph().edge(e);
        throw SurgeryError("edge " + vname(emb, ed.u) + "-" + vname(emb, ed.v) + " borders a single face");
    }
    const Edge& ed = emb.graph().edge(e);
    if (ed.u == ed.v && emb.graph().degree(ed.u) == 2)
        throw SurgeryError("deleting the loop would isolate " + vname(emb, ed.u));
    emb.remove_edge(e);
}

int add_edge_in_face(Embedding& emb, const FaceCorner& cu, const FaceCorner& cv, bool simple_guard)
{
    if (cu.face.steps != cv.face.steps)
        throw SurgeryError("corners lie on different faces; use bridge");
    if (cu.step == cv.step)
        throw SurgeryError("both ends of the new edge are the same corner");
    const int u = corner_vertex(emb, cu), v = corner_vertex(emb, cv);
    guard_pair(emb, u, v, simple_guard);
    const bool ru = cu.face.steps[cu.step].reverse, rv = cv.face.steps[cv.step].reverse;
    return insert_edge(emb, u, step_corner(cu.face, cu.step).first, v, step_corner(cv.face, cv.step).first,
                       ru != rv ? 1 : 0);
}

int bridge(Embedding& emb, const FaceCorner& cu, const FaceCorner& cv, bool orient_plus, bool simple_guard)
{
    if (cu.face.steps == cv.face.steps)
        throw SurgeryError("corners lie on the same face; use add");
    const int u = corner_vertex(emb, cu), v = corner_vertex(emb, cv);
    guard_pair(emb, u, v, simple_guard);
    int sig;
    if (const auto flips = orienting_reflections(emb); !flips.empty())
        sig = flips[u] != flips[v] ? 1 : 0;
    else
        sig = cu.face.steps[cu.step].reverse != cv.face.steps[cv.step].reverse ? 1 : 0;
    if (!orient_plus)
        sig ^= 1;
    return insert_edge(emb, u, step_corner(cu.face, cu.step).first, v, step_corner(cv.face, cv.step).first, sig);
}

int flip_edge(Embedding& emb, int e, bool simple_guard)
{
    const Edge ed = emb.graph().edge(e);
    const FaceSet fs = trace_faces(emb);
    const auto through = faces_through(fs, e);
    if (through.size() != 2 || through[0] == through[1])
        throw SurgeryError("edge " + vname(emb, ed.u) + "-" + vname(emb, ed.v) + " does not border two faces");
    const Face& f1 = fs.faces[through[0]];
    const Face& f2 = fs.faces[through[1]];
    const int a = apex_of(emb, f1, ed.u, ed.v), b = apex_of(emb, f2, ed.u, ed.v);
    if (a < 0 || b < 0)
        throw SurgeryError("edge " + vname(emb, ed.u) + "-" + vname(emb, ed.v) + " is not between two triangles");
    if (a == b)
        throw SurgeryError("both triangles at " + vname(emb, ed.u) + "-" + vname(emb, ed.v) + " have apex " +
                           vname(emb, a));
    guard_pair(emb, a, b, simple_guard);

    auto corner_at = [&](const Face& f, int x) {
        for (size_t i = 0; i < f.steps.size(); ++i)
            if (emb.vertex_of(f.steps[i].arc) == x)
                return step_corner(f, i);
        throw SurgeryError("internal: apex not on its face");
    };
    auto renumber = [e](Corner c) {
        auto fix = [e](int x) { return edge_of(x) > e ? x - 2 : x; };
        return Corner{fix(c.first), fix(c.second)};
    };
    const Corner ca = renumber(corner_at(f1, a)), cb = renumber(corner_at(f2, b));
    emb.remove_edge(e);

    const FaceSet merged = trace_faces(emb);
    std::optional<FaceCorner> at_a, at_b;
    for (const auto& f : merged.faces)
        for (size_t i = 0; i < f.steps.size(); ++i) {
            const Corner c = step_corner(f, i);
            if (c == ca)
                at_a = FaceCorner{f, i};
            if (c == cb)
                at_b = FaceCorner{f, i};
        }
    if (!at_a || !at_b)
        throw SurgeryError("internal: lost the apex corners during a flip");
    return add_edge_in_face(emb, *at_a, *at_b, false);
}

void contract_edge(Embedding& emb, int e, int keep)
{
    const Graph& g = emb.graph();
    const Edge ed = g.edge(e);
    if (ed.u == ed.v)
        throw SurgeryError("cannot contract a loop");
    if (keep != ed.u && keep != ed.v)
        throw SurgeryError("internal: kept vertex is not an endpoint");
    const int u = keep, v = keep == ed.u ? ed.v : ed.u;
    if (g.edges_between(u, v).size() > 1)
        throw SurgeryError("contracting " + vname(emb, u) + "-" + vname(emb, v) + " would leave a loop");
    std::set<int> nu;
    for (int x : g.neighbors(u))
        if (x != v)
            nu.insert(x);
    for (int x : g.neighbors(v))
        if (x != u && nu.count(x))
            throw SurgeryError(vname(emb, u) + " and " + vname(emb, v) + " share the neighbour " + vname(emb, x));

    if (emb.signature(e) == 1)
        emb.reflect(v);
    const int eu = arc_end(e, ed.u == u ? 0 : 1), ev = mate(eu);

    // u's rotation with e replaced by v's rotation read on from e
    std::vector<int> merged;
    for (int a : emb.rotation(u)) {
        if (a != eu) {
            merged.push_back(a);
            continue;
        }
        for (int b = emb.succ(ev); b != ev; b = emb.succ(b))
            merged.push_back(b);
    }

    Graph out;
    std::vector<int> vmap(g.vertex_count(), -1);
    for (int x = 0; x < g.vertex_count(); ++x)
        if (x != v)
            vmap[x] = out.add_vertex(g.name(x));
    vmap[v] = vmap[u];
    std::vector<int> emap(g.edge_count(), -1);
    std::vector<std::uint8_t> sig;
    for (int f = 0; f < g.edge_count(); ++f) {
        if (f == e)
            continue;
        emap[f] = out.add_edge(vmap[g.edge(f).u], vmap[g.edge(f).v]);
        sig.push_back(static_cast<std::uint8_t>(emb.signature(f)));
    }
    auto amap = [&](int a) { return arc_end(emap[edge_of(a)], a & 1); };
    std::vector<std::vector<int>> rot(out.vertex_count());
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (x == v)
            continue;
        for (int a : x == u ? merged : emb.rotation(x))
            rot[vmap[x]].push_back(amap(a));
    }
    emb = Embedding(std::move(out), std::move(rot), std::move(sig));
}

}  // namespace rotsys
