#pragma once

// Shared helpers for the test binaries: fixture lookup, random embeddings,
// and an independent face-count oracle.

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "rotsys/adj_format.hpp"
#include "rotsys/embedding.hpp"

namespace rotsys::testing {

inline std::string data_path(const std::string& rel)
{
    if (const char* dir = std::getenv("ROTSYS_FIXTURE_DIR"))
        return std::string(dir) + "/" + rel;
    return std::string(ROTSYS_DATA_DIR) + "/" + rel;
}

inline Embedding load_adj(const std::string& rel)
{
    return parse_adj(read_file(data_path(rel))).embedding;
}

/// Face count through the orientation double cover: every vertex v gets two
/// copies with opposite rotations, type-1 edges cross between the copies,
/// and the faces of that pure system are counted as cycles of the dart
/// permutation. Each face below lifts to exactly two faces above.
inline int double_cover_face_count(const Embedding& emb)
{
    const int arcs = emb.arc_count();
    // dart (a, layer): arc-end a at copy `layer` of its vertex
    auto id = [arcs](int a, int layer) { return layer * arcs + a; };
    std::vector<int> rot_next(2 * arcs), involution(2 * arcs);
    for (int v = 0; v < emb.vertex_count(); ++v) {
        const auto& rot = emb.rotation(v);
        const int d = static_cast<int>(rot.size());
        for (int i = 0; i < d; ++i) {
            rot_next[id(rot[i], 0)] = id(rot[(i + 1) % d], 0);
            rot_next[id(rot[i], 1)] = id(rot[(i + d - 1) % d], 1);
        }
    }
    for (int a = 0; a < arcs; ++a) {
        const int s = emb.signature(a >> 1);
        for (int layer = 0; layer < 2; ++layer)
            involution[id(a, layer)] = id(a ^ 1, layer ^ s);
    }
    std::vector<char> seen(2 * arcs, 0);
    int cycles = 0;
    for (int d = 0; d < 2 * arcs; ++d) {
        if (seen[d])
            continue;
        ++cycles;
        int x = d;
        while (!seen[x]) {
            seen[x] = 1;
            x = rot_next[involution[x]];
        }
    }
    return cycles / 2;
}

/// Random connected multigraph embedding with loops, parallels and random
/// signatures (or all zero when pure).
inline Embedding random_embedding(std::mt19937& rng, int max_vertices, bool pure, bool simple = false)
{
    std::uniform_int_distribution<int> nv(1, max_vertices);
    const int n = simple ? std::max(3, nv(rng)) : nv(rng);
    Graph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex(std::to_string(i));
    // spanning tree
    for (int v = 1; v < n; ++v)
        g.add_edge(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    const int extra = std::uniform_int_distribution<int>(0, 2 * n)(rng);
    for (int k = 0; k < extra; ++k) {
        int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
        int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (simple && (u == v || g.adjacent(u, v)))
            continue;
        g.add_edge(u, v);
    }
    if (g.edge_count() == 0)
        g.add_edge(0, 0);
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

}  // namespace rotsys::testing
