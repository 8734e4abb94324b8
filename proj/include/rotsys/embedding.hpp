#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rotsys/graph.hpp"

namespace rotsys {

// An arc-end is 2*edge + side; side 0 sits at Edge::u, side 1 at Edge::v.
// Leaving a vertex through arc-end a traverses the edge towards mate(a).
inline int edge_of(int arc) { return arc >> 1; }
inline int mate(int arc) { return arc ^ 1; }
inline int arc_end(int edge, int side) { return 2 * edge + side; }

/// A corner is an ordered pair of consecutive arc-ends (first, second) in
/// the rotation of one vertex.
using Corner = std::pair<int, int>;

/// General rotation system: per-vertex cyclic order of arc-ends plus a
/// type bit per edge. Rotations keep the order they were given in, so a
/// rotation written out again starts where its input started.
class Embedding {
public:
    Embedding() = default;

    /// Validates that every arc-end occurs once, at its own vertex.
    Embedding(Graph graph, std::vector<std::vector<int>> rotation, std::vector<std::uint8_t> signature);

    const Graph& graph() const { return graph_; }
    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }
    int arc_count() const { return 2 * graph_.edge_count(); }

    int vertex_of(int arc) const;
    int head_of(int arc) const { return vertex_of(mate(arc)); }
    const std::vector<int>& rotation(int v) const { return rotation_.at(v); }
    int signature(int e) const { return signature_.at(e); }
    const std::vector<std::uint8_t>& signatures() const { return signature_; }
    bool is_pure() const;

    int succ(int arc) const;
    int pred(int arc) const;
    int position(int arc) const { return pos_.at(arc); }

    /// Rotation of v as neighbour names (ADJ row).
    std::vector<std::string> neighbor_row(int v) const;

    const std::map<Corner, std::string>& corner_labels() const { return labels_; }
    void set_corner_label(Corner c, const std::string& label);
    void clear_corner_labels() { labels_.clear(); }

    // --- editing primitives; surgery is built from these -------------------
    int add_vertex(const std::string& name);
    /// Adds an edge u-v. Its end at u is placed at index pos_u of u's
    /// rotation (0..deg), likewise at v. For a loop pos_v is applied after
    /// the u-end has been inserted.
    int add_edge(int u, int pos_u, int v, int pos_v, int sig);
    void remove_edge(int e);
    void remove_vertex(int v);  // must be isolated
    void rename_vertex(int v, const std::string& name) { graph_.rename_vertex(v, name); }
    void set_signature(int e, int sig);
    void set_rotation(int v, std::vector<int> order);
    /// Reverses the rotation at v and toggles the type of every non-loop
    /// edge at v; the surface is unchanged.
    void reflect(int v);

private:
    void reindex(int v);
    void drop_stale_labels();

    Graph graph_;
    std::vector<std::vector<int>> rotation_;
    std::vector<std::uint8_t> signature_;
    std::vector<int> pos_;
    std::map<Corner, std::string> labels_;
};

/// Builds a pure rotation system from neighbour-name rows of a simple graph.
/// rows[i] is the rotation of the vertex named names[i]; vertex order and
/// edge numbering follow row order. Type-1 edges are given by name pairs.
Embedding embedding_from_rows(const std::vector<std::string>& names,
                              const std::vector<std::vector<std::string>>& rows,
                              const std::vector<std::pair<std::string, std::string>>& twisted = {});

}  // namespace rotsys
