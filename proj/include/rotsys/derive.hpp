#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rotsys/current.hpp"

namespace rotsys {

class DerivationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using LetterPairs = std::vector<std::pair<std::string, std::string>>;

struct Derivation {
    /// Group-element vertices only; letters sit on corners as labels.
    Embedding unsubdivided;
    /// Letters turned into vertices.
    Embedding embedding;
};

/// Additive derivation. Row k is log[k mod i] + k; for cascades odd rows
/// are reversed and letters swap within pairs. Every letter must close a
/// face of the unsubdivided embedding, which is then subdivided by a vertex
/// of that name. Predicted vortex face lengths are enforced when given.
Derivation derive(const std::vector<Log>& logs, const CurrentGroup& group, CurrentKind kind,
                  const LetterPairs& pairs = {}, const std::vector<VortexInfo>& vortices = {});

Embedding derive_index2(const std::vector<Log>& logs, const CurrentGroup& group,
                        const std::vector<VortexInfo>& vortices = {});
Embedding derive_cascade(const Log& log, const CurrentGroup& group, const LetterPairs& pairs,
                         const std::vector<VortexInfo>& vortices = {});
Embedding derive_index4(const std::vector<Log>& logs, const CurrentGroup& group);

/// Derivation straight from a current graph (its logs, V1 letter pairs and
/// vortex predictions).
Derivation derive(const CurrentGraph& cg);

/// Inverse of the additive rule: log[j] = row j - j. Letters must stay put.
/// Throws DerivationError naming the first row and position that break the
/// symmetry.
std::vector<Log> extract_logs(const Embedding& emb, int index);

}  // namespace rotsys
