#include "rotsys/adj_format.hpp"

#include <fstream>
#include <sstream>

namespace rotsys {

AdjDocument parse_adj(const std::string& text)
{
    AdjDocument doc;
    std::vector<std::string> names;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> twisted;
    std::vector<int> row_line;

    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool body = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.find_first_not_of(" \t") == std::string::npos)
            continue;
        if (line[0] == '#') {
            if (body)
                throw ParseError(lineno, "comments are only allowed before the first row");
            doc.comments.push_back(line);
            continue;
        }
        body = true;
        std::istringstream ls(line);
        std::string head;
        ls >> head;
        if (head == "!") {
            std::string u, v, bit;
            if (!(ls >> u >> v >> bit) || (bit != "0" && bit != "1"))
                throw ParseError(lineno, "signature line must read '! u v 0|1'");
            if (bit == "1")
                twisted.emplace_back(u, v);
            continue;
        }
        if (head.size() < 2 || head.back() != '.')
            throw ParseError(lineno, "row must start with 'name.'");
        names.push_back(head.substr(0, head.size() - 1));
        row_line.push_back(lineno);
        rows.emplace_back();
        std::string tok;
        while (ls >> tok)
            rows.back().push_back(tok);
    }
    if (names.empty())
        throw ParseError(0, "no rows");
    try {
        doc.embedding = embedding_from_rows(names, rows, twisted);
    } catch (const InputError& e) {
        // find the row the complaint is about, if it names one
        const std::string what = e.what();
        for (const std::string& pattern : {std::string("row '"), std::string("'")})
            for (size_t i = 0; i < names.size(); ++i)
                if (what.find(pattern + names[i] + "'") != std::string::npos)
                    throw ParseError(row_line[i], what);
        throw ParseError(0, what);
    }
    return doc;
}

std::string print_adj(const AdjDocument& doc)
{
    std::string out;
    for (const auto& c : doc.comments)
        out += c + "\n";
    const Embedding& emb = doc.embedding;
    for (int v = 0; v < emb.vertex_count(); ++v) {
        out += emb.graph().name(v) + ".";
        for (const auto& n : emb.neighbor_row(v))
            out += " " + n;
        out += "\n";
    }
    for (int e = 0; e < emb.edge_count(); ++e)
        if (emb.signature(e)) {
            const Edge& ed = emb.graph().edge(e);
            out += "! " + emb.graph().name(ed.u) + " " + emb.graph().name(ed.v) + " 1\n";
        }
    return out;
}

std::string print_adj(const Embedding& emb)
{
    return print_adj(AdjDocument{{}, emb});
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InputError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InputError("cannot write '" + path + "'");
    out << text;
}

}  // namespace rotsys
