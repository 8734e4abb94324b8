#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rotsys/faces.hpp"

namespace rotsys {

/// What to look for: an embedding of `target` (simple, connected) whose
/// faces are all triangles apart from the long faces listed in `shape`.
struct SearchSpec {
    std::vector<std::string> comments;
    std::string graph_text;  // graph expression, see parse_graph_spec
    Graph target;
    ShapeSpec shape;
    bool orientable_only = true;
    long long node_budget = 5'000'000;
    double time_budget = 60.0;  // seconds
    std::optional<std::string> anchor;        // default: first vertex of maximum degree
    std::vector<std::string> anchor_rotation;  // optional fixed rotation at the anchor
};

enum class SearchStatus { found, exhausted, impossible, budget_exceeded };

std::string to_string(SearchStatus s);

struct SearchResult {
    SearchStatus status = SearchStatus::exhausted;
    std::optional<Embedding> embedding;
    long long nodes = 0;
    double seconds = 0;
    std::string reason;  // why impossible / which budget ran out
};

/// Depth-first search that grows the face set one face at a time, always
/// extending along the open edge with the fewest candidate faces. Long faces
/// are restricted to simple cycles. With orientable_only every face is
/// oriented against its neighbours as it is placed; the first face's
/// direction is fixed, so mirror images are not both visited.
///
/// "exhausted" means no embedding exists with the anchor rotation given (or
/// at all, when none is given). Identical specs give identical results
/// unless the time budget runs out.
SearchResult search(const SearchSpec& spec);

/// SRC text: "graph EXPR", "faces SHAPE", "orientable yes|no",
/// "nodes N", "seconds S", "anchor V", "anchor-rotation A B C ...";
/// '#' lines are kept as comments.
SearchSpec parse_search_spec(const std::string& text);
std::string print_search_spec(const SearchSpec& spec);

}  // namespace rotsys
