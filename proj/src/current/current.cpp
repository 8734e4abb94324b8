#include "rotsys/current.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace rotsys {

CurrentGroup::CurrentGroup(int order) : order_(order)
{
    if (order < 2)
        throw InputError("current group order must be at least 2");
}

int CurrentGroup::normalize(long long x) const
{
    x %= order_;
    return static_cast<int>(x < 0 ? x + order_ : x);
}

int CurrentGroup::element_order(int a) const
{
    return order_ / std::gcd(normalize(a), order_);
}

bool CurrentGroup::generates_evens(int a) const
{
    return even_order() && normalize(a) % 2 == 0 && element_order(a) == order_ / 2;
}

std::string to_string(CurrentKind kind)
{
    switch (kind) {
    case CurrentKind::index1: return "index1";
    case CurrentKind::index2: return "index2";
    case CurrentKind::index4: return "index4";
    case CurrentKind::cascade: return "cascade";
    }
    return "?";
}

CurrentKind parse_kind(const std::string& text)
{
    for (auto k : {CurrentKind::index1, CurrentKind::index2, CurrentKind::index4, CurrentKind::cascade})
        if (to_string(k) == text)
            return k;
    throw InputError("unknown current graph kind '" + text + "'");
}

int declared_index(CurrentKind kind)
{
    switch (kind) {
    case CurrentKind::index2: return 2;
    case CurrentKind::index4: return 4;
    default: return 1;
    }
}

std::string to_string(VortexKind kind)
{
    return kind == VortexKind::V1 ? "V1" : "V2";
}

std::string format_log(const Log& log)
{
    std::string s;
    for (const auto& e : log) {
        if (!s.empty())
            s += ' ';
        s += e.is_letter() ? e.letter : std::to_string(e.value);
    }
    return s;
}

Log parse_log_entries(const std::string& text, const CurrentGroup& group)
{
    Log log;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (std::isalpha(static_cast<unsigned char>(tok[0]))) {
            log.push_back({0, tok});
            continue;
        }
        size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size())
            throw InputError("bad log entry '" + tok + "'");
        if (v <= -group.order() || v >= group.order())
            throw InputError("log entry " + tok + " outside Z_" + std::to_string(group.order()));
        log.push_back({group.normalize(v), {}});
    }
    return log;
}

bool same_cyclic(const Log& a, const Log& b)
{
    if (a.size() != b.size())
        return false;
    if (a.empty())
        return true;
    for (size_t shift = 0; shift < a.size(); ++shift) {
        bool ok = true;
        for (size_t i = 0; i < a.size() && ok; ++i)
            ok = a[i] == b[(i + shift) % b.size()];
        if (ok)
            return true;
    }
    return false;
}

std::vector<LongFace> predicted_vortex_faces(const VortexInfo& v, const CurrentGroup& group, CurrentKind kind)
{
    auto letter = [&](size_t i) {
        return i < v.letters.size() ? std::vector<std::string>{v.letters[i]} : std::vector<std::string>{};
    };
    if (v.kind == VortexKind::V2 && (kind == CurrentKind::index2 || kind == CurrentKind::index4))
        return {{group.element_order(v.excess), letter(0)}};
    if (v.kind == VortexKind::V1 && (kind == CurrentKind::cascade || kind == CurrentKind::index1))
        return {{group.order(), letter(0)}, {group.order(), letter(1)}};
    throw InputError("no face prediction for a " + to_string(v.kind) + " vortex in a " + to_string(kind) +
                     " current graph");
}

// ---------------------------------------------------------------------------

int CurrentGraph::current_of(int arc) const
{
    const int e = edge_of(arc);
    const int c = current.at(e);
    if ((arc & 1) == 0 || skeleton.signature(e) == 1)
        return c;
    return group.neg(c);
}

void CurrentGraph::attach_letters()
{
    skeleton.clear_corner_labels();
    for (const auto& vx : vortices) {
        if (vx.letters.empty())
            continue;
        const int v = skeleton.graph().index(vx.vertex);
        const auto& rot = skeleton.rotation(v);
        for (size_t i = 0; i < rot.size(); ++i)
            skeleton.set_corner_label({rot[i], rot[(i + 1) % rot.size()]}, vx.letters[i % vx.letters.size()]);
    }
}

std::vector<Circuit> compute_circuits(const CurrentGraph& cg)
{
    const Embedding& emb = cg.skeleton;
    const FaceSet fs = trace_faces(emb);
    std::vector<int> label(fs.count(), -1);
    int next = 0;
    for (int anchor : cg.circuit_anchors) {
        const FaceStep want{anchor, false};
        int found = -1;
        for (int f = 0; f < fs.count() && found < 0; ++f)
            for (const auto& s : fs.faces[f].steps)
                if (s == want || mirror_step(emb, s) == want) {
                    found = f;
                    break;
                }
        if (found < 0 || label[found] >= 0)
            throw InputError("circuit anchor does not pick out a new circuit");
        label[found] = next++;
    }
    for (auto& l : label)
        if (l < 0)
            l = next++;
    std::vector<Circuit> out(fs.count());
    for (int f = 0; f < fs.count(); ++f)
        out[label[f]] = {label[f], fs.faces[f]};
    return out;
}

Log log_of(const CurrentGraph& cg, const Circuit& circuit)
{
    const Embedding& emb = cg.skeleton;
    const auto& labels = emb.corner_labels();
    const bool subscript = cg.kind == CurrentKind::index2 || cg.kind == CurrentKind::index4;
    const Face& f = circuit.face;
    Log log;
    for (size_t i = 0; i < f.steps.size(); ++i) {
        const FaceStep& s = f.steps[i];
        const auto it = labels.find(step_corner(f, i));
        if (it != labels.end())
            log.push_back({0, it->second + (subscript ? std::to_string(circuit.label) : "")});
        const int v = emb.vertex_of(s.arc);
        const int alpha = cg.current_of(s.arc);
        // leaving a dead end of order 2 repeats the entry just written
        if (emb.graph().degree(v) == 1 && it == labels.end() && cg.group.even_order() && alpha == cg.group.half())
            continue;
        log.push_back({arrival_reverse(emb, s) ? cg.group.neg(alpha) : alpha, {}});
    }
    return log;
}

std::vector<Log> logs_of(const CurrentGraph& cg)
{
    std::vector<Log> out;
    for (const auto& c : compute_circuits(cg))
        out.push_back(log_of(cg, c));
    return out;
}

int vertex_excess(const CurrentGraph& cg, int v)
{
    int sum = 0;
    for (int a : cg.skeleton.rotation(v))
        sum = cg.group.add(sum, cg.current_of(mate(a)));
    return sum;
}

namespace {

const VortexInfo* declared(const CurrentGraph& cg, const std::string& name)
{
    for (const auto& v : cg.vortices)
        if (v.vertex == name)
            return &v;
    return nullptr;
}

std::optional<VortexKind> vortex_kind(const CurrentGraph& cg, int v)
{
    const int ex = vertex_excess(cg, v);
    if (!cg.group.generates_evens(ex))
        return std::nullopt;
    const auto& rot = cg.skeleton.rotation(v);
    if (rot.size() == 1)
        return VortexKind::V2;
    if (rot.size() == 2 && std::all_of(rot.begin(), rot.end(), [&](int a) { return cg.current_of(a) % 2 == 1; }))
        return VortexKind::V1;
    return std::nullopt;
}

bool dead_end(const CurrentGraph& cg, int v)
{
    if (cg.skeleton.graph().degree(v) != 1 || declared(cg, cg.skeleton.graph().name(v)))
        return false;
    const int ord = cg.group.element_order(vertex_excess(cg, v));
    return ord == 2 || ord == 3;
}

std::string join(const std::vector<std::string>& parts)
{
    std::string s;
    for (const auto& p : parts)
        s += (s.empty() ? "" : ", ") + p;
    return s;
}

}  // namespace

std::vector<VortexInfo> classify_vortices(const CurrentGraph& cg)
{
    std::vector<VortexInfo> out;
    const Graph& g = cg.skeleton.graph();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (cg.stub[v] || vertex_excess(cg, v) == 0 || dead_end(cg, v))
            continue;
        const auto kind = vortex_kind(cg, v);
        if (!kind)
            continue;
        VortexInfo info{g.name(v), *kind, vertex_excess(cg, v), {}};
        if (const VortexInfo* d = declared(cg, g.name(v)))
            info.letters = d->letters;
        out.push_back(info);
    }
    return out;
}

Report check_logs(const std::vector<Log>& logs, const CurrentGroup& group, const std::vector<int>& generators)
{
    Report r;
    std::set<int> wanted;
    for (int s : generators) {
        wanted.insert(group.normalize(s));
        wanted.insert(group.neg(s));
    }
    for (size_t i = 0; i < logs.size(); ++i) {
        std::map<int, int> seen;
        for (const auto& e : logs[i])
            if (!e.is_letter())
                ++seen[e.value];
        std::vector<std::string> problems;
        for (int w : wanted)
            if (seen[w] != 1)
                problems.push_back(std::to_string(w) + " x" + std::to_string(seen[w]));
        for (const auto& [val, n] : seen)
            if (n > 0 && !wanted.count(val))
                problems.push_back(std::to_string(val) + " not in +-S");
        r.check("O2[" + std::to_string(i) + "]", problems.empty(), join(problems));
    }
    return r;
}

Report check_principles(const CurrentGraph& cg)
{
    Report r;
    const Embedding& emb = cg.skeleton;
    const Graph& g = emb.graph();
    const CurrentGroup& grp = cg.group;
    const auto circuits = compute_circuits(cg);
    const int index = declared_index(cg.kind);

    r.add("kind", to_string(cg.kind));
    r.add("circuits", static_cast<long long>(circuits.size()));
    r.check("index", static_cast<int>(circuits.size()) == index,
            "expected " + std::to_string(index) + ", traced " + std::to_string(circuits.size()));

    std::vector<std::string> bad;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!cg.stub[v] && g.degree(v) > 3)
            bad.push_back(g.name(v));
    r.check("O1", bad.empty(), join(bad));

    std::vector<Log> logs;
    for (const auto& c : circuits)
        logs.push_back(log_of(cg, c));
    r.merge(check_logs(logs, grp, cg.generators));

    bad.clear();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 3 && vertex_excess(cg, v) != 0)
            bad.push_back(g.name(v) + " excess " + std::to_string(vertex_excess(cg, v)));
    r.check("O3", bad.empty(), join(bad));

    bad.clear();
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 1 || declared(cg, g.name(v)))
            continue;
        const int ord = grp.element_order(vertex_excess(cg, v));
        if (ord != 2 && ord != 3)
            bad.push_back(g.name(v) + " order " + std::to_string(ord));
    }
    r.check("O4", bad.empty(), join(bad));

    bad.clear();
    for (int v = 0; v < g.vertex_count(); ++v) {
        const VortexInfo* d = declared(cg, g.name(v));
        const bool kcl = vertex_excess(cg, v) == 0;
        if (g.degree(v) == 3 || cg.stub[v] || (!d && (kcl || g.degree(v) == 1)))
            continue;
        const auto kind = vortex_kind(cg, v);
        if (!kind)
            bad.push_back(g.name(v) + (d ? " declared but not a vortex" : " unbalanced"));
        else if (d && d->kind != *kind)
            bad.push_back(g.name(v) + " is " + to_string(*kind) + ", declared " + to_string(d->kind));
    }
    r.check("O5", bad.empty(), join(bad));
    for (const auto& v : classify_vortices(cg))
        r.add("vortex." + v.vertex, to_string(v.kind) + " excess " + std::to_string(v.excess));

    if (!grp.even_order()) {
        r.add("parity", "not applicable for odd order");
        return r;
    }
    if (cg.kind == CurrentKind::cascade) {
        const FaceSet fs = trace_faces(emb);
        bad.clear();
        for (int e = 0; e < g.edge_count(); ++e)
            if (fs.one_way[e] != (cg.current[e] % 2 == 1))
                bad.push_back(g.name(g.edge(e).u) + "-" + g.name(g.edge(e).v));
        r.check("N6", bad.empty(), join(bad));
    } else if (index > 1) {
        // the circuit through each arc-end, by direct steps first
        std::vector<int> through(emb.arc_count(), -1);
        for (const auto& c : circuits)
            for (const auto& s : c.face.steps)
                through[s.arc] = c.label;
        for (const auto& c : circuits)
            for (const auto& s : c.face.steps) {
                const int m = mirror_step(emb, s).arc;
                if (through[m] < 0)
                    through[m] = c.label;
            }
        bad.clear();
        for (int e = 0; e < g.edge_count(); ++e) {
            const int a = through[2 * e], b = through[2 * e + 1];
            if (((b - a - cg.current[e]) % index + index) % index != 0)
                bad.push_back(g.name(g.edge(e).u) + "-" + g.name(g.edge(e).v));
        }
        r.check(index == 2 ? "O6" : "O6'", bad.empty(), join(bad));
    }
    return r;
}

}  // namespace rotsys
