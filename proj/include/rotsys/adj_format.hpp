#pragma once

#include <string>
#include <vector>

#include "rotsys/embedding.hpp"

namespace rotsys {

/// Parse failure with the offending 1-based line number (0 if unknown).
class ParseError : public InputError {
public:
    ParseError(int line, const std::string& what)
        : InputError(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line)
    {
    }
    int line() const { return line_; }

private:
    int line_;
};

/// ADJ text: one row per vertex, "v. n1 n2 ... nk" giving the rotation as
/// neighbour names (simple graphs only), then optional "! u v 1" lines for
/// type-1 edges. Leading "#" lines are kept as comments.
struct AdjDocument {
    std::vector<std::string> comments;
    Embedding embedding;
};

AdjDocument parse_adj(const std::string& text);
std::string print_adj(const AdjDocument& doc);
std::string print_adj(const Embedding& emb);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace rotsys
