#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rotsys/adj_format.hpp"
#include "rotsys/bounds.hpp"
#include "rotsys/current_formats.hpp"

namespace rotsys {

/// a*s + b, written "2s+1", "-s", "7", "12s+6".
struct Affine {
    long long a = 0;
    long long b = 0;

    long long at(long long s) const { return a * s + b; }
    static Affine parse(const std::string& text);
    std::string str() const;
    bool operator==(const Affine&) const = default;
};

class LadderError : public std::runtime_error {
public:
    enum class Code { out_of_range, template_error, collision, even_increment };

    LadderError(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

enum class Behavior { normal, reverse };

/// One of the four places where a fragment meets the ladder. The flags are
/// the behaviours of the circuit traversals crossing that horizontal, split
/// by whether they enter or leave the ladder there.
struct Attachment {
    std::string end;  // left-top, left-bottom, right-top, right-bottom
    std::string vertex;
    std::vector<Behavior> enter;
    std::vector<Behavior> leave;
};

struct RungSpec {
    Affine first;
    int increment = 1;
    Affine count;
    std::optional<int> parity;  // valid s mod 2; none means both
};

/// Fragment vertex: rotation tokens are CGT end tokens ("3+", "0-") or
/// "ladder" for the horizontal that joins the ladder there.
struct FragmentVertex {
    std::string name;
    std::vector<std::string> rotation;
    bool reversed = false;
};

/// Edge of a fragment; v == "*" marks an order-2 stub.
struct FragmentEdge {
    int id = 0;
    std::string u;
    std::string v;
    Affine current;
    int type = 0;
};

struct Fragment {
    std::vector<FragmentVertex> vertices;
    std::vector<FragmentEdge> edges;
};

struct LadderTemplate {
    std::vector<std::string> comments;
    Affine group_order;
    CurrentKind kind = CurrentKind::cascade;
    /// S = {1, ..., generator_max}
    Affine generator_max;
    std::optional<Family> target;
    Affine target_vertices;
    std::optional<RungSpec> rungs;
    std::array<Attachment, 4> attach;
    Fragment left;
    Fragment right;

    /// s values the template claims, from the parity and rung count.
    bool valid(long long s) const;
};

LadderTemplate parse_ladder_template(const std::string& text);
std::string print_ladder_template(const LadderTemplate& t);

struct LadderInstance {
    long long s = 0;
    CgtDocument cgt;
    /// Ladder vertices in order t1 b1 t2 b2 ...
    std::vector<int> ladder_vertices;
    /// Edges inside the ladder, horizontals to the fragments included.
    std::vector<int> ladder_edges;
    /// Leftmost and rightmost horizontals, top then bottom.
    std::array<int, 2> left_horizontals{};
    std::array<int, 2> right_horizontals{};
};

/// Builds the current graph for one s: rung currents first + i*inc with
/// alternating orientation, horizontals by KCL from the left fragment, and
/// ladder rotations forced by the attachment behaviours.
LadderInstance expand(const LadderTemplate& t, long long s);

/// Edges with odd current forming a single path through the ladder from
/// the left end to the right end, in order. Throws LadderError when the odd
/// edges do not form such a path.
std::vector<int> odd_path(const LadderInstance& inst);

/// Bullet checks on an instance: exactly one odd leftmost horizontal, KCL at
/// each ladder vertex, all ladder edges of type 0.
Report check_ladder(const LadderInstance& inst);

/// Behaviours of the traversals at the four attachments, read off the
/// traced circuit of the instance.
std::array<Attachment, 4> traced_attachments(const LadderTemplate& t, const LadderInstance& inst);

/// Per s: expansion, ladder bullets, principles, derivation, face shape,
/// graph identity and genus against the Euler bound of the target.
Report verify_family(const LadderTemplate& t, const std::vector<long long>& s_values);

}  // namespace rotsys
