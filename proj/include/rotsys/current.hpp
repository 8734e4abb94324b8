#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rotsys/faces.hpp"
#include "rotsys/report.hpp"

namespace rotsys {

/// Cyclic group Z_n, elements kept in [0, n).
class CurrentGroup {
public:
    explicit CurrentGroup(int order = 2);

    int order() const { return order_; }
    bool even_order() const { return order_ % 2 == 0; }
    /// The element of order 2 (n/2); only meaningful for even n.
    int half() const { return order_ / 2; }

    int normalize(long long x) const;
    int add(int a, int b) const { return normalize(static_cast<long long>(a) + b); }
    int neg(int a) const { return normalize(-static_cast<long long>(a)); }
    int element_order(int a) const;
    /// True when a generates the subgroup of even elements.
    bool generates_evens(int a) const;

private:
    int order_;
};

enum class CurrentKind { index1, index2, index4, cascade };

std::string to_string(CurrentKind kind);
CurrentKind parse_kind(const std::string& text);
/// Number of circuits the kind requires.
int declared_index(CurrentKind kind);

/// A log entry is a group element or a vortex letter.
struct LogEntry {
    int value = 0;
    std::string letter;

    bool is_letter() const { return !letter.empty(); }
    bool operator==(const LogEntry&) const = default;
};

using Log = std::vector<LogEntry>;

std::string format_log(const Log& log);
Log parse_log_entries(const std::string& text, const CurrentGroup& group);
/// Equal as cyclic sequences.
bool same_cyclic(const Log& a, const Log& b);

enum class VortexKind { V1, V2 };

std::string to_string(VortexKind kind);

struct VortexInfo {
    std::string vertex;
    VortexKind kind = VortexKind::V2;
    int excess = 0;
    std::vector<std::string> letters;
};

/// Faces a vortex leaves in the unsubdivided derived embedding. Each face is
/// labelled with the letter it carries. Throws InputError for combinations
/// that have no prediction.
std::vector<LongFace> predicted_vortex_faces(const VortexInfo& v, const CurrentGroup& group, CurrentKind kind);

/// Embedded graph with currents. Rotations are effective rotations; the
/// drawing orientation flags are kept only so files print back unchanged.
struct CurrentGraph {
    Embedding skeleton;
    CurrentGroup group;
    CurrentKind kind = CurrentKind::index2;
    std::vector<int> generators;
    /// Per edge: current on the arc leaving Edge::u.
    std::vector<int> current;
    /// Declared vortices, letters in corner order of the effective rotation.
    std::vector<VortexInfo> vortices;
    /// Vertices standing for omitted degree-1 ends of an order-2 current.
    std::vector<bool> stub;
    /// Arc-ends (departing in normal behaviour) that fix circuit labels
    /// [0], [1], ... when given.
    std::vector<int> circuit_anchors;

    /// Current on the arc leaving through arc-end a.
    int current_of(int arc) const;
    /// Puts vortex letters on the skeleton's corners.
    void attach_letters();
};

struct Circuit {
    int label = 0;
    Face face;
};

/// Faces of the skeleton, labelled by the order in which tracing meets them
/// or by the anchors when given.
std::vector<Circuit> compute_circuits(const CurrentGraph& cg);

/// Log of one circuit. For index 2 and 4 a letter gets the circuit label as
/// subscript.
Log log_of(const CurrentGraph& cg, const Circuit& circuit);

std::vector<Log> logs_of(const CurrentGraph& cg);

/// Sum of the currents on arcs directed into v.
int vertex_excess(const CurrentGraph& cg, int v);

/// Vortex classification of every vertex that is neither KCL nor an
/// order-2/3 dead end. Unclassifiable vertices come back with no letters
/// and are flagged by check_principles.
std::vector<VortexInfo> classify_vortices(const CurrentGraph& cg);

/// O2 on bare logs: each log holds every element of +-S exactly once.
Report check_logs(const std::vector<Log>& logs, const CurrentGroup& group, const std::vector<int>& generators);

/// Construction principles O1-O6, N6 (cascades), O6' (index 4).
Report check_principles(const CurrentGraph& cg);

}  // namespace rotsys
