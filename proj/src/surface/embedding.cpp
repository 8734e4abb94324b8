#include "rotsys/embedding.hpp"

#include <algorithm>
#include <set>

namespace rotsys {

Embedding::Embedding(Graph graph, std::vector<std::vector<int>> rotation,
                     std::vector<std::uint8_t> signature)
    : graph_(std::move(graph)), rotation_(std::move(rotation)), signature_(std::move(signature))
{
    if (static_cast<int>(rotation_.size()) != graph_.vertex_count())
        throw InputError("rotation count does not match vertex count");
    if (static_cast<int>(signature_.size()) != graph_.edge_count())
        throw InputError("signature count does not match edge count");
    for (auto s : signature_)
        if (s > 1)
            throw InputError("signature must be 0 or 1");
    pos_.assign(arc_count(), -1);
    for (int v = 0; v < vertex_count(); ++v) {
        const auto& rot = rotation_[v];
        for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
            const int a = rot[i];
            if (a < 0 || a >= arc_count())
                throw InputError("arc-end out of range in rotation of '" + graph_.name(v) + "'");
            if (pos_[a] != -1)
                throw InputError("arc-end listed twice in rotations");
            if (vertex_of(a) != v)
                throw InputError("arc-end placed at the wrong vertex '" + graph_.name(v) + "'");
            pos_[a] = i;
        }
    }
    for (int a = 0; a < arc_count(); ++a)
        if (pos_[a] == -1)
            throw InputError("arc-end missing from rotations");
}

int Embedding::vertex_of(int arc) const
{
    const Edge& e = graph_.edge(edge_of(arc));
    return (arc & 1) ? e.v : e.u;
}

bool Embedding::is_pure() const
{
    return std::all_of(signature_.begin(), signature_.end(), [](auto s) { return s == 0; });
}

int Embedding::succ(int arc) const
{
    const auto& rot = rotation_[vertex_of(arc)];
    const int i = pos_[arc] + 1;
    return rot[i == static_cast<int>(rot.size()) ? 0 : i];
}

int Embedding::pred(int arc) const
{
    const auto& rot = rotation_[vertex_of(arc)];
    const int i = pos_[arc];
    return rot[i == 0 ? rot.size() - 1 : i - 1];
}

std::vector<std::string> Embedding::neighbor_row(int v) const
{
    std::vector<std::string> row;
    for (int a : rotation_.at(v))
        row.push_back(graph_.name(head_of(a)));
    return row;
}

void Embedding::set_corner_label(Corner c, const std::string& label)
{
    if (c.first < 0 || c.first >= arc_count() || succ(c.first) != c.second)
        throw InputError("corner label '" + label + "' does not address consecutive arc-ends");
    labels_[c] = label;
}

int Embedding::add_vertex(const std::string& name)
{
    const int v = graph_.add_vertex(name);
    rotation_.emplace_back();
    return v;
}

int Embedding::add_edge(int u, int pos_u, int v, int pos_v, int sig)
{
    const int e = graph_.add_edge(u, v);
    signature_.push_back(static_cast<std::uint8_t>(sig & 1));
    pos_.resize(arc_count(), -1);
    auto& ru = rotation_[u];
    ru.insert(ru.begin() + std::clamp(pos_u, 0, static_cast<int>(ru.size())), arc_end(e, 0));
    auto& rv = rotation_[v];
    rv.insert(rv.begin() + std::clamp(pos_v, 0, static_cast<int>(rv.size())), arc_end(e, 1));
    reindex(u);
    if (v != u)
        reindex(v);
    drop_stale_labels();
    return e;
}

void Embedding::remove_edge(int e)
{
    const int a0 = arc_end(e, 0), a1 = arc_end(e, 1);
    auto shift = [e](int a) { return edge_of(a) > e ? a - 2 : a; };
    std::map<Corner, std::string> kept;
    for (const auto& [c, l] : labels_)
        if (edge_of(c.first) != e && edge_of(c.second) != e)
            kept[{shift(c.first), shift(c.second)}] = l;
    labels_.clear();
    for (auto& rot : rotation_) {
        rot.erase(std::remove_if(rot.begin(), rot.end(), [&](int a) { return a == a0 || a == a1; }),
                  rot.end());
        for (int& a : rot)
            a = shift(a);
    }
    graph_.remove_edge(e);
    signature_.erase(signature_.begin() + e);
    pos_.assign(arc_count(), -1);
    for (int v = 0; v < vertex_count(); ++v)
        reindex(v);
    labels_ = std::move(kept);
    drop_stale_labels();
}

void Embedding::remove_vertex(int v)
{
    graph_.remove_vertex(v);
    rotation_.erase(rotation_.begin() + v);
}

void Embedding::set_signature(int e, int sig)
{
    signature_.at(e) = static_cast<std::uint8_t>(sig & 1);
}

void Embedding::set_rotation(int v, std::vector<int> order)
{
    std::vector<int> a = order, b = rotation_.at(v);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
        throw InputError("new rotation is not a permutation of the old one at '" + graph_.name(v) + "'");
    rotation_[v] = std::move(order);
    reindex(v);
    drop_stale_labels();
}

void Embedding::reflect(int v)
{
    auto& rot = rotation_.at(v);
    std::reverse(rot.begin(), rot.end());
    reindex(v);
    std::set<int> toggled;
    for (int a : rot) {
        const int e = edge_of(a);
        const Edge& ed = graph_.edge(e);
        if (ed.u != ed.v && toggled.insert(e).second)
            signature_[e] ^= 1;
    }
    // corners at v now run the other way round
    std::map<Corner, std::string> moved;
    for (auto it = labels_.begin(); it != labels_.end();) {
        if (vertex_of(it->first.first) == v) {
            moved[{it->first.second, it->first.first}] = it->second;
            it = labels_.erase(it);
        } else {
            ++it;
        }
    }
    labels_.insert(moved.begin(), moved.end());
}

void Embedding::reindex(int v)
{
    const auto& rot = rotation_[v];
    for (int i = 0; i < static_cast<int>(rot.size()); ++i)
        pos_[rot[i]] = i;
}

void Embedding::drop_stale_labels()
{
    for (auto it = labels_.begin(); it != labels_.end();) {
        const Corner& c = it->first;
        const bool ok = c.first < arc_count() && c.second < arc_count() && pos_[c.first] >= 0 &&
                        succ(c.first) == c.second;
        it = ok ? std::next(it) : labels_.erase(it);
    }
}

Embedding embedding_from_rows(const std::vector<std::string>& names,
                              const std::vector<std::vector<std::string>>& rows,
                              const std::vector<std::pair<std::string, std::string>>& twisted)
{
    if (names.size() != rows.size())
        throw InputError("row count does not match vertex count");
    Graph g;
    for (const auto& n : names)
        g.add_vertex(n);
    const int n = g.vertex_count();

    // edge ids in order of first appearance
    std::map<std::pair<int, int>, int> edge_id;
    std::vector<std::vector<int>> nbrs(n);
    for (int v = 0; v < n; ++v) {
        std::set<int> seen;
        for (const auto& name : rows[v]) {
            const int w = g.index(name);
            if (w == v)
                throw InputError("row '" + names[v] + "' lists itself");
            if (!seen.insert(w).second)
                throw InputError("row '" + names[v] + "' lists '" + name + "' twice");
            nbrs[v].push_back(w);
            auto key = std::minmax(v, w);
            if (!edge_id.count(key))
                edge_id[key] = g.add_edge(key.first, key.second);
        }
    }
    std::vector<std::vector<int>> rotation(n);
    for (int v = 0; v < n; ++v)
        for (int w : nbrs[v]) {
            auto key = std::minmax(v, w);
            const int e = edge_id[key];
            rotation[v].push_back(arc_end(e, v == key.first ? 0 : 1));
        }
    // each edge must be listed from both sides
    std::vector<int> count(2 * g.edge_count(), 0);
    for (const auto& rot : rotation)
        for (int a : rot)
            ++count[a];
    for (int e = 0; e < g.edge_count(); ++e)
        if (count[2 * e] != 1 || count[2 * e + 1] != 1) {
            const Edge& ed = g.edge(e);
            const int missing = count[2 * e] == 0 ? ed.u : ed.v;
            const int other = missing == ed.u ? ed.v : ed.u;
            throw InputError("row '" + g.name(missing) + "' does not list '" + g.name(other) + "'");
        }
    std::vector<std::uint8_t> sig(g.edge_count(), 0);
    for (const auto& [a, b] : twisted) {
        auto ids = g.edges_between(g.index(a), g.index(b));
        if (ids.empty())
            throw InputError("signature given for absent edge " + a + "-" + b);
        sig[ids.front()] = 1;
    }
    return Embedding(std::move(g), std::move(rotation), std::move(sig));
}

}  // namespace rotsys
