#pragma once

#include <map>
#include <string>
#include <vector>

#include "rotsys/embedding.hpp"

namespace rotsys {

/// One step of a face walk: leave vertex_of(arc) through `arc`, having
/// chosen it with the given behaviour (normal = clockwise successor).
struct FaceStep {
    int arc = -1;
    bool reverse = false;

    bool operator==(const FaceStep&) const = default;
    auto operator<=>(const FaceStep&) const = default;
};

struct Face {
    std::vector<FaceStep> steps;

    int length() const { return static_cast<int>(steps.size()); }
    /// Vertices at which each step departs.
    std::vector<int> vertices(const Embedding& emb) const;
};

struct FaceSet {
    std::vector<Face> faces;
    /// Per edge: traversed twice in the same direction.
    std::vector<bool> one_way;

    int count() const { return static_cast<int>(faces.size()); }
    std::map<int, int> length_histogram() const;
};

/// Behaviour after leaving through `step` and crossing its edge.
inline bool arrival_reverse(const Embedding& emb, const FaceStep& step)
{
    return step.reverse != (emb.signature(edge_of(step.arc)) == 1);
}

/// The same walk traversed backwards starts from the mirror of each step.
inline FaceStep mirror_step(const Embedding& emb, const FaceStep& step)
{
    return {mate(step.arc), !arrival_reverse(emb, step)};
}

/// Corner of the rotation at which step i of the face departs: (in, out)
/// in normal behaviour, (out, in) in reverse behaviour.
Corner step_corner(const Face& face, size_t i);

/// Step that follows `step` in its face walk.
FaceStep next_step(const Embedding& emb, const FaceStep& step);

/// Complete face decomposition. Faces are discovered from the least
/// unconsumed arc-end in normal behaviour; each face is then written in
/// canonical form (least rotation of its (vertex, arc) sequence over both
/// traversal directions, starting on a normal step).
FaceSet trace_faces(const Embedding& emb);

int euler_characteristic(const Embedding& emb);
int euler_characteristic(const Embedding& emb, const FaceSet& faces);

struct SurfaceClass {
    bool orientable = true;
    int genus = 0;
    int euler_characteristic = 2;
};

/// Throws InputError for disconnected graphs.
SurfaceClass classify_surface(const Embedding& emb);
SurfaceClass classify_surface(const Embedding& emb, const FaceSet& faces);

/// True iff some set of vertex reflections makes every signature 0.
bool is_orientable(const Embedding& emb);

/// Per-vertex reflection flags that make all signatures 0, or empty when the
/// embedding is nonorientable.
std::vector<bool> orienting_reflections(const Embedding& emb);

// ---------------------------------------------------------------------------
// face shapes

/// Allowed non-triangular faces: each entry is one face of the given length
/// whose corners must carry every listed label (corner labels or vertex
/// names).
struct LongFace {
    int length = 0;
    std::vector<std::string> labels;
};

struct ShapeSpec {
    std::vector<LongFace> long_faces;

    /// "triangles", "triangles+6[x0]+6[x1]", "triangles+24x4".
    static ShapeSpec parse(const std::string& text);
    std::string to_string() const;
};

struct ShapeReport {
    bool pass = true;
    std::vector<int> offending;  // indices into the face set
    std::string message;
};

ShapeReport check_shape(const Embedding& emb, const FaceSet& faces, const ShapeSpec& spec);
ShapeReport check_shape(const Embedding& emb, const ShapeSpec& spec);

/// Human-readable face, e.g. "[0 10 8 6 4 2]".
std::string face_to_string(const Embedding& emb, const Face& face);

}  // namespace rotsys
