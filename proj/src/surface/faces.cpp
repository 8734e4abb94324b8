#include "rotsys/faces.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <queue>
#include <sstream>

namespace rotsys {

std::vector<int> Face::vertices(const Embedding& emb) const
{
    std::vector<int> out;
    out.reserve(steps.size());
    for (const auto& s : steps)
        out.push_back(emb.vertex_of(s.arc));
    return out;
}

std::map<int, int> FaceSet::length_histogram() const
{
    std::map<int, int> h;
    for (const auto& f : faces)
        ++h[f.length()];
    return h;
}

Corner step_corner(const Face& face, size_t i)
{
    const FaceStep& s = face.steps[i];
    const FaceStep& prev = face.steps[(i + face.steps.size() - 1) % face.steps.size()];
    const int in = mate(prev.arc);
    return s.reverse ? Corner{s.arc, in} : Corner{in, s.arc};
}

FaceStep next_step(const Embedding& emb, const FaceStep& step)
{
    const int in = mate(step.arc);
    const bool rev = arrival_reverse(emb, step);
    return {rev ? emb.pred(in) : emb.succ(in), rev};
}

namespace {

using Key = std::vector<std::pair<int, int>>;

Key rotated_key(const Embedding& emb, const std::vector<FaceStep>& steps, size_t start)
{
    Key k;
    k.reserve(steps.size());
    for (size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[(start + i) % steps.size()];
        k.emplace_back(emb.vertex_of(s.arc), s.arc);
    }
    return k;
}

std::vector<FaceStep> canonical(const Embedding& emb, const std::vector<FaceStep>& orbit)
{
    std::vector<FaceStep> mirrored;
    mirrored.reserve(orbit.size());
    for (auto it = orbit.rbegin(); it != orbit.rend(); ++it)
        mirrored.push_back(mirror_step(emb, *it));

    const std::vector<FaceStep>* best_seq = nullptr;
    size_t best_start = 0;
    Key best;
    const std::array<const std::vector<FaceStep>*, 2> seqs{&orbit, &mirrored};
    for (const auto* seq : seqs)
        for (size_t i = 0; i < seq->size(); ++i) {
            if ((*seq)[i].reverse)
                continue;
            Key k = rotated_key(emb, *seq, i);
            if (!best_seq || k < best) {
                best = std::move(k);
                best_seq = seq;
                best_start = i;
            }
        }
    std::vector<FaceStep> out;
    out.reserve(orbit.size());
    for (size_t i = 0; i < orbit.size(); ++i)
        out.push_back((*best_seq)[(best_start + i) % orbit.size()]);
    return out;
}

}  // namespace

FaceSet trace_faces(const Embedding& emb)
{
    const int arcs = emb.arc_count();
    std::vector<char> used(2 * arcs, 0);
    auto slot = [](const FaceStep& s) { return 2 * s.arc + (s.reverse ? 1 : 0); };

    FaceSet out;
    for (int h = 0; h < arcs; ++h) {
        const FaceStep start{h, false};
        if (used[slot(start)])
            continue;
        std::vector<FaceStep> orbit;
        FaceStep cur = start;
        do {
            used[slot(cur)] = 1;
            used[slot(mirror_step(emb, cur))] = 1;
            orbit.push_back(cur);
            cur = next_step(emb, cur);
        } while (cur != start);
        out.faces.push_back({canonical(emb, orbit)});
    }

    // direction bookkeeping for one-way edges
    std::vector<std::vector<int>> departures(emb.edge_count());
    for (const auto& f : out.faces)
        for (const auto& s : f.steps)
            departures[edge_of(s.arc)].push_back(s.arc);
    out.one_way.assign(emb.edge_count(), false);
    for (int e = 0; e < emb.edge_count(); ++e)
        out.one_way[e] = departures[e].size() == 2 && departures[e][0] == departures[e][1];
    return out;
}

int euler_characteristic(const Embedding& emb, const FaceSet& faces)
{
    return emb.vertex_count() - emb.edge_count() + faces.count();
}

int euler_characteristic(const Embedding& emb)
{
    return euler_characteristic(emb, trace_faces(emb));
}

std::vector<bool> orienting_reflections(const Embedding& emb)
{
    const Graph& g = emb.graph();
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbour, signature)
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.u == ed.v) {
            if (emb.signature(e) != 0)
                return {};
            continue;
        }
        adj[ed.u].emplace_back(ed.v, emb.signature(e));
        adj[ed.v].emplace_back(ed.u, emb.signature(e));
    }
    std::vector<int> flip(n, -1);
    for (int root = 0; root < n; ++root) {
        if (flip[root] != -1)
            continue;
        flip[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int x = q.front();
            q.pop();
            for (auto [y, s] : adj[x]) {
                const int want = flip[x] ^ s;
                if (flip[y] == -1) {
                    flip[y] = want;
                    q.push(y);
                } else if (flip[y] != want) {
                    return {};
                }
            }
        }
    }
    std::vector<bool> out(n);
    for (int v = 0; v < n; ++v)
        out[v] = flip[v] == 1;
    // an edgeless single vertex is trivially orientable; keep the vector
    // non-empty so callers can tell success from failure
    if (out.empty())
        out.push_back(false);
    return out;
}

bool is_orientable(const Embedding& emb)
{
    return !orienting_reflections(emb).empty();
}

SurfaceClass classify_surface(const Embedding& emb, const FaceSet& faces)
{
    if (!emb.graph().is_connected())
        throw InputError("surface classification needs a connected graph");
    SurfaceClass sc;
    sc.euler_characteristic = euler_characteristic(emb, faces);
    sc.orientable = is_orientable(emb);
    sc.genus = sc.orientable ? (2 - sc.euler_characteristic) / 2 : 2 - sc.euler_characteristic;
    return sc;
}

SurfaceClass classify_surface(const Embedding& emb)
{
    return classify_surface(emb, trace_faces(emb));
}

// ---------------------------------------------------------------------------

ShapeSpec ShapeSpec::parse(const std::string& text)
{
    ShapeSpec spec;
    std::vector<std::string> parts;
    {
        std::string cur;
        int depth = 0;
        for (char c : text) {
            if (c == '[') ++depth;
            if (c == ']') --depth;
            if (c == '+' && depth == 0) {
                parts.push_back(cur);
                cur.clear();
            } else if (!std::isspace(static_cast<unsigned char>(c))) {
                cur += c;
            }
        }
        parts.push_back(cur);
    }
    if (parts.empty() || parts[0] != "triangles")
        throw InputError("shape spec must start with 'triangles': '" + text + "'");
    for (size_t i = 1; i < parts.size(); ++i) {
        const std::string& p = parts[i];
        size_t digits = 0;
        while (digits < p.size() && std::isdigit(static_cast<unsigned char>(p[digits])))
            ++digits;
        if (digits == 0)
            throw InputError("shape spec: bad term '" + p + "'");
        const int len = std::stoi(p.substr(0, digits));
        if (len < 1)
            throw InputError("shape spec: face length must be positive");
        std::string rest = p.substr(digits);
        if (rest.empty()) {
            spec.long_faces.push_back({len, {}});
        } else if (rest[0] == 'x') {
            const int count = std::stoi(rest.substr(1));
            for (int k = 0; k < count; ++k)
                spec.long_faces.push_back({len, {}});
        } else if (rest.front() == '[' && rest.back() == ']') {
            LongFace lf{len, {}};
            std::istringstream in(rest.substr(1, rest.size() - 2));
            std::string lab;
            while (std::getline(in, lab, ','))
                if (!lab.empty())
                    lf.labels.push_back(lab);
            spec.long_faces.push_back(lf);
        } else {
            throw InputError("shape spec: bad term '" + p + "'");
        }
    }
    return spec;
}

std::string ShapeSpec::to_string() const
{
    std::string s = "triangles";
    for (const auto& lf : long_faces) {
        s += "+" + std::to_string(lf.length);
        if (!lf.labels.empty()) {
            s += "[";
            for (size_t i = 0; i < lf.labels.size(); ++i)
                s += (i ? "," : "") + lf.labels[i];
            s += "]";
        }
    }
    return s;
}

namespace {

std::vector<std::string> face_tags(const Embedding& emb, const Face& f)
{
    std::vector<std::string> tags;
    const auto& labels = emb.corner_labels();
    for (size_t i = 0; i < f.steps.size(); ++i) {
        if (auto it = labels.find(step_corner(f, i)); it != labels.end())
            tags.push_back(it->second);
        tags.push_back(emb.graph().name(emb.vertex_of(f.steps[i].arc)));
    }
    return tags;
}

}  // namespace

ShapeReport check_shape(const Embedding& emb, const FaceSet& faces, const ShapeSpec& spec)
{
    ShapeReport rep;
    std::vector<int> long_idx;
    for (int i = 0; i < faces.count(); ++i)
        if (faces.faces[i].length() != 3)
            long_idx.push_back(i);

    const auto& wanted = spec.long_faces;
    auto fits = [&](int face, const LongFace& lf) {
        if (faces.faces[face].length() != lf.length)
            return false;
        auto tags = face_tags(emb, faces.faces[face]);
        return std::all_of(lf.labels.begin(), lf.labels.end(), [&](const std::string& l) {
            return std::find(tags.begin(), tags.end(), l) != tags.end();
        });
    };

    // match allowed entries to long faces; small, so plain backtracking
    std::vector<int> owner(wanted.size(), -1);
    std::vector<char> taken(long_idx.size(), 0);
    std::function<bool(size_t)> assign = [&](size_t k) -> bool {
        if (k == wanted.size())
            return true;
        for (size_t j = 0; j < long_idx.size(); ++j)
            if (!taken[j] && fits(long_idx[j], wanted[k])) {
                taken[j] = 1;
                owner[k] = static_cast<int>(j);
                if (assign(k + 1))
                    return true;
                taken[j] = 0;
            }
        return false;
    };

    const bool matched = long_idx.size() == wanted.size() && assign(0);
    if (matched)
        return rep;

    rep.pass = false;
    // report every non-triangle not claimed by a greedy pass
    std::fill(taken.begin(), taken.end(), 0);
    for (const auto& lf : wanted)
        for (size_t j = 0; j < long_idx.size(); ++j)
            if (!taken[j] && fits(long_idx[j], lf)) {
                taken[j] = 1;
                break;
            }
    for (size_t j = 0; j < long_idx.size(); ++j)
        if (!taken[j])
            rep.offending.push_back(long_idx[j]);
    std::ostringstream msg;
    msg << long_idx.size() << " non-triangular face(s) against " << wanted.size()
        << " allowed by '" << spec.to_string() << "'";
    rep.message = msg.str();
    return rep;
}

ShapeReport check_shape(const Embedding& emb, const ShapeSpec& spec)
{
    return check_shape(emb, trace_faces(emb), spec);
}

std::string face_to_string(const Embedding& emb, const Face& face)
{
    std::string s = "[";
    auto vs = face.vertices(emb);
    for (size_t i = 0; i < vs.size(); ++i)
        s += (i ? " " : "") + emb.graph().name(vs[i]);
    return s + "]";
}

}  // namespace rotsys
