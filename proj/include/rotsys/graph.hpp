#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace rotsys {

/// Malformed or inconsistent input (bad file, bad argument, unknown name).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Edge {
    int u = -1;  // end 0
    int v = -1;  // end 1
};

/// Undirected multigraph with named vertices and stable edge ids.
///
/// Vertices are dense indices 0..n-1 carrying a unique name. Numeric names
/// ("0", "17") play the role of group elements in derived embeddings; any
/// other token ("x0", "w") is a letter vertex.
class Graph {
public:
    Graph() = default;

    int add_vertex(const std::string& name);
    int add_edge(int u, int v);
    void remove_edge(int e);   // shifts ids above e down by one
    void remove_vertex(int v); // vertex must be isolated; shifts indices
    void rename_vertex(int v, const std::string& name);

    int vertex_count() const { return static_cast<int>(names_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& name(int v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> find(const std::string& name) const;
    int index(const std::string& name) const;  // throws InputError

    /// Edge ids joining u and v (both orders), in id order.
    std::vector<int> edges_between(int u, int v) const;
    bool adjacent(int u, int v) const { return !edges_between(u, v).empty(); }
    std::vector<int> neighbors(int v) const;  // with multiplicity, loops twice
    int degree(int v) const;

    bool is_simple() const;
    bool is_connected() const;

    /// Sorted list of unordered name pairs; the label-exact identity of a
    /// simple graph.
    std::vector<std::pair<std::string, std::string>> edge_key() const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, int> index_;
    std::vector<Edge> edges_;
};

/// Name is a non-negative decimal integer.
bool is_numeric_name(const std::string& name);

/// C(n, S): vertices 0..n-1, u~v iff the cyclic distance lies in S.
Graph build_circulant(int n, const std::vector<int>& generators);
Graph complete_graph(int n);
Graph octahedral_graph(int vertices);
Graph hamiltonian_complement(int n);

/// Adds one vertex per label, each adjacent to every existing vertex.
Graph join_with_empty(const Graph& g, const std::vector<std::string>& labels);

/// Looks up a vertex by name; "-k" resolves to the numeric vertex -k mod n,
/// where n is the number of numeric vertices.
int resolve_vertex(const Graph& g, const std::string& token);

/// Label-exact equality of two simple graphs.
bool same_graph(const Graph& a, const Graph& b);

/// Parses a graph expression such as "octahedral(24)+join(w,x,y,z)" or
/// "complete(7)+join(x,y,z)+edges(x-y)-edges(x-1)".
///
/// Grammar: base { ('+'|'-') op }
///   base: complete(n) | octahedral(n) | hamcomp(n) | circulant(n;s,...)
///         | vertices(a,b,...)
///   op:   join(a,...) | edges(u-v,...) | star(c;a,b,...)
/// A '-' prefix is only meaningful for edges(...). Vertex references may be
/// negative integers, which are taken modulo the number of numeric vertices.
Graph parse_graph_spec(const std::string& text);

}  // namespace rotsys
