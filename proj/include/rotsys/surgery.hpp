#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rotsys/faces.hpp"

namespace rotsys {

class SurgeryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A corner named by its vertex and the two neighbours on either side,
/// prev then next in the vertex's rotation: (prev, vertex, next).
struct CornerRef {
    std::string prev, vertex, next;

    std::string to_string() const { return "(" + prev + "," + vertex + "," + next + ")"; }
};

/// A face and one of its steps; the corner is step_corner(face, step).
struct FaceCorner {
    Face face;
    size_t step = 0;
};

/// Numeric references (possibly negative) are shifted by `offset` and taken
/// modulo the number of numeric vertices; other names are looked up as is.
int resolve_ref(const Graph& g, const std::string& token, int offset = 0);

/// Locates the face corner with the given neighbours. Throws SurgeryError
/// when it does not exist or is ambiguous.
FaceCorner find_corner(const Embedding& emb, const FaceSet& faces, const CornerRef& ref, int offset = 0);

/// Edge between u and v; with apexes, the one whose two incident faces are
/// triangles with third vertices a and b.
int find_edge(const Embedding& emb, int u, int v, std::optional<std::pair<int, int>> apexes = std::nullopt);

/// New vertex inside the face joined to every corner; returns its index.
int subdivide_face(Embedding& emb, const Face& face, const std::string& label);

/// Removes an edge that borders two distinct faces.
void delete_edge(Embedding& emb, int e);

/// Joins the vertices of two corners of one face. Returns the new edge.
int add_edge_in_face(Embedding& emb, const FaceCorner& cu, const FaceCorner& cv, bool simple_guard = true);

/// Joins corners of two distinct faces through a handle. With
/// orient_plus the type of the new edge keeps an orientable surface
/// orientable; otherwise the opposite type is used.
int bridge(Embedding& emb, const FaceCorner& cu, const FaceCorner& cv, bool orient_plus = true,
           bool simple_guard = true);

/// Replaces edge e, the diagonal of two triangles (u,v,a) and (v,u,b), by
/// the edge (a,b). Returns the new edge.
int flip_edge(Embedding& emb, int e, bool simple_guard = true);

/// Merges the second endpoint of e into the first, which keeps its name.
void contract_edge(Embedding& emb, int e, int keep);

// ---------------------------------------------------------------------------
// scripts

enum class CommandKind { comment, del, add, bridge, flip, subdivide, contract, shift, simple };

struct Command {
    CommandKind kind = CommandKind::comment;
    std::string text;                 // comment text
    std::vector<std::string> vertices;  // delete/flip/contract: u v; subdivide face-of: boundary
    std::optional<std::pair<std::string, std::string>> apexes;
    std::vector<CornerRef> corners;   // add/bridge: two; subdivide: one
    std::string label;                // subdivide
    bool orient_plus = true;          // bridge
    int amount = 0;                   // shift
    bool on = true;                   // simple
    int line = 0;

    std::string to_string() const;
};

struct SurgeryScript {
    std::vector<Command> commands;
};

SurgeryScript parse_script(const std::string& text);
std::string print_script(const SurgeryScript& script);

struct TraceEntry {
    std::string command;
    int vertices = 0;
    int edges = 0;
    int faces = 0;
    int euler_characteristic = 0;
    bool orientable = true;
    std::map<int, int> face_lengths;
};

struct ScriptRun {
    Embedding embedding;
    std::vector<TraceEntry> trace;  // entry 0 is the input
    bool ok = true;
    std::string error;
    int failed_line = 0;
};

/// Runs the commands in order and stops at the first failure. After every
/// command the Euler characteristic is checked against the command's
/// bookkeeping (unchanged, or minus 2 for a bridge).
ScriptRun run_script(const Embedding& input, const SurgeryScript& script);

std::string trace_to_string(const std::vector<TraceEntry>& trace);

}  // namespace rotsys
