#pragma once

#include <string>
#include <vector>

#include "rotsys/derive.hpp"

namespace rotsys {

/// "S = {1,2,3}"
std::vector<int> parse_generator_set(const std::string& text);
std::string format_generator_set(const std::vector<int>& s);

// LOG: bare logs with the data derivation needs.
//
//   # comment
//   group 12
//   kind index2
//   S = {1,2,3,4,5,6}
//   vortex x0 V2 excess 10
//   pair w y
//   log [0] 10 x0 2 9 ...
struct LogDocument {
    std::vector<std::string> comments;
    CurrentGroup group;
    CurrentKind kind = CurrentKind::index2;
    std::vector<int> generators;
    /// Vortex per letter (vertex name = letter).
    std::vector<VortexInfo> vortices;
    LetterPairs pairs;
    std::vector<Log> logs;

    Derivation derive() const;
};

LogDocument parse_log_document(const std::string& text);
std::string print_log_document(const LogDocument& doc);

// CGT: a current graph with its embedding.
//
//   group 7
//   kind index1
//   S = {1,2,3}
//   v a rot: 0+ 1+ 2+ orient: +
//   v b rot: 0- 1- 2- orient: -
//   e 0 a b current 1 type 0
//   e 3 b * current 6 type 0        (order-2 stub: the dead end is omitted)
//   vortex c kind V2 letters x
//   circuit-labels 0+ 2-
//
// "id+" is the end of edge id at its first vertex (the arc e+ leaves
// there), "id-" the end at its second vertex. A vertex drawn with
// orient "-" has the reverse of the listed rotation.
struct CgtDocument {
    std::vector<std::string> comments;
    CurrentGraph graph;
    std::vector<bool> reversed;  // per vertex
    std::vector<int> edge_ids;   // per edge
};

CgtDocument parse_cgt(const std::string& text);
std::string print_cgt(const CgtDocument& doc);

/// Text of one end, e.g. "3+".
std::string end_token(const CgtDocument& doc, int arc);

}  // namespace rotsys
