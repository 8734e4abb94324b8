#include "rotsys/current_formats.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "rotsys/adj_format.hpp"

namespace rotsys {

namespace {

// Non-empty, trimmed lines with their numbers; leading '#' lines split off.
struct Lines {
    std::vector<std::string> comments;
    std::vector<std::pair<int, std::string>> body;
};

Lines split_lines(const std::string& text)
{
    Lines out;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        if (line[0] == '#') {
            if (!out.body.empty())
                throw ParseError(lineno, "comments are only allowed at the top");
            out.comments.push_back(line);
            continue;
        }
        out.body.emplace_back(lineno, line);
    }
    return out;
}

std::vector<std::string> words(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> w;
    std::string t;
    while (in >> t)
        w.push_back(t);
    return w;
}

int parse_int(const std::string& tok, int lineno)
{
    size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != tok.size() || tok.empty())
        throw ParseError(lineno, "expected an integer, found '" + tok + "'");
    return v;
}

VortexKind parse_vortex_kind(const std::string& tok, int lineno)
{
    if (tok == "V1")
        return VortexKind::V1;
    if (tok == "V2")
        return VortexKind::V2;
    throw ParseError(lineno, "vortex kind must be V1 or V2");
}

std::string header_text(const std::vector<std::string>& comments, const CurrentGroup& group, CurrentKind kind,
                        const std::vector<int>& generators)
{
    std::string out;
    for (const auto& c : comments)
        out += c + "\n";
    out += "group " + std::to_string(group.order()) + "\n";
    out += "kind " + to_string(kind) + "\n";
    out += "S = " + format_generator_set(generators) + "\n";
    return out;
}

}  // namespace

std::vector<int> parse_generator_set(const std::string& text)
{
    const auto open = text.find('{'), close = text.find('}');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw InputError("generating set must be written {a,b,...}");
    std::vector<int> out;
    std::istringstream in(text.substr(open + 1, close - open - 1));
    std::string tok;
    while (std::getline(in, tok, ',')) {
        const auto w = words(tok);
        if (w.size() != 1)
            throw InputError("bad generating set element '" + tok + "'");
        out.push_back(parse_int(w[0], 0));
    }
    return out;
}

std::string format_generator_set(const std::vector<int>& s)
{
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

// ---------------------------------------------------------------------------

Derivation LogDocument::derive() const
{
    return rotsys::derive(logs, group, kind, pairs, vortices);
}

LogDocument parse_log_document(const std::string& text)
{
    const Lines lines = split_lines(text);
    LogDocument doc;
    doc.comments = lines.comments;
    bool have_group = false, have_kind = false;
    std::map<int, Log> logs;
    for (const auto& [lineno, line] : lines.body) {
        const auto w = words(line);
        const std::string& key = w[0];
        try {
            if (key == "group" && w.size() == 2) {
                doc.group = CurrentGroup(parse_int(w[1], lineno));
                have_group = true;
            } else if (key == "kind" && w.size() == 2) {
                doc.kind = parse_kind(w[1]);
                have_kind = true;
            } else if (key == "S") {
                doc.generators = parse_generator_set(line);
            } else if (key == "vortex" && w.size() == 5 && w[3] == "excess") {
                if (!have_group)
                    throw InputError("'group' must come before vortices");
                doc.vortices.push_back(
                    {w[1], parse_vortex_kind(w[2], lineno), doc.group.normalize(parse_int(w[4], lineno)), {w[1]}});
            } else if (key == "pair" && w.size() == 3) {
                doc.pairs.emplace_back(w[1], w[2]);
            } else if (key == "log" && w.size() >= 2) {
                if (!have_group)
                    throw InputError("'group' must come before logs");
                if (w[1].size() < 3 || w[1].front() != '[' || w[1].back() != ']')
                    throw InputError("log label must look like [0]");
                const int label = parse_int(w[1].substr(1, w[1].size() - 2), lineno);
                if (logs.count(label))
                    throw InputError("log [" + std::to_string(label) + "] given twice");
                const auto pos = line.find(w[1]) + w[1].size();
                logs[label] = parse_log_entries(line.substr(pos), doc.group);
            } else {
                throw InputError("unrecognised line '" + line + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const InputError& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!have_group || !have_kind)
        throw ParseError(0, "LOG file needs 'group' and 'kind' lines");
    int expect = 0;
    for (auto& [label, log] : logs) {
        if (label != expect++)
            throw ParseError(0, "logs must be labelled [0], [1], ... without gaps");
        doc.logs.push_back(std::move(log));
    }
    return doc;
}

std::string print_log_document(const LogDocument& doc)
{
    std::string out = header_text(doc.comments, doc.group, doc.kind, doc.generators);
    for (const auto& v : doc.vortices)
        out += "vortex " + v.vertex + " " + to_string(v.kind) + " excess " + std::to_string(v.excess) + "\n";
    for (const auto& [a, b] : doc.pairs)
        out += "pair " + a + " " + b + "\n";
    for (size_t i = 0; i < doc.logs.size(); ++i)
        out += "log [" + std::to_string(i) + "] " + format_log(doc.logs[i]) + "\n";
    return out;
}

// ---------------------------------------------------------------------------

std::string end_token(const CgtDocument& doc, int arc)
{
    return std::to_string(doc.edge_ids.at(edge_of(arc))) + ((arc & 1) ? "-" : "+");
}

CgtDocument parse_cgt(const std::string& text)
{
    const Lines lines = split_lines(text);
    CgtDocument doc;
    doc.comments = lines.comments;
    CurrentGraph& cg = doc.graph;

    struct VertexLine {
        int lineno;
        std::string name;
        std::vector<std::string> ends;
        bool reversed;
    };
    struct EdgeLine {
        int lineno;
        int id;
        std::string u, v;
        int current, type;
    };
    struct VortexLine {
        int lineno;
        VortexInfo info;
    };
    std::vector<VertexLine> vlines;
    std::vector<EdgeLine> elines;
    std::vector<VortexLine> xlines;
    std::vector<std::string> anchors;
    int anchor_line = 0;
    bool have_group = false, have_kind = false;

    for (const auto& [lineno, line] : lines.body) {
        const auto w = words(line);
        const std::string& key = w[0];
        try {
            if (key == "group" && w.size() == 2) {
                cg.group = CurrentGroup(parse_int(w[1], lineno));
                have_group = true;
            } else if (key == "kind" && w.size() == 2) {
                cg.kind = parse_kind(w[1]);
                have_kind = true;
            } else if (key == "S") {
                cg.generators = parse_generator_set(line);
            } else if (key == "v" && w.size() >= 5 && w[2] == "rot:" && w[w.size() - 2] == "orient:") {
                const std::string& o = w.back();
                if (o != "+" && o != "-")
                    throw InputError("orient must be + or -");
                vlines.push_back({lineno, w[1], {w.begin() + 3, w.end() - 2}, o == "-"});
            } else if (key == "e" && w.size() == 8 && w[4] == "current" && w[6] == "type") {
                const int type = parse_int(w[7], lineno);
                if (type != 0 && type != 1)
                    throw InputError("edge type must be 0 or 1");
                elines.push_back({lineno, parse_int(w[1], lineno), w[2], w[3], parse_int(w[5], lineno), type});
            } else if (key == "vortex" && w.size() == 6 && w[2] == "kind" && w[4] == "letters") {
                VortexInfo info{w[1], parse_vortex_kind(w[3], lineno), 0, {}};
                std::istringstream in(w[5]);
                std::string l;
                while (std::getline(in, l, ','))
                    info.letters.push_back(l);
                xlines.push_back({lineno, info});
            } else if (key == "circuit-labels" && w.size() >= 2) {
                anchors.assign(w.begin() + 1, w.end());
                anchor_line = lineno;
            } else {
                throw InputError("unrecognised line '" + line + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const InputError& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!have_group || !have_kind)
        throw ParseError(0, "CGT file needs 'group' and 'kind' lines");

    Graph g;
    for (const auto& vl : vlines) {
        if (vl.name == "*" || g.find(vl.name))
            throw ParseError(vl.lineno, "bad or repeated vertex name '" + vl.name + "'");
        g.add_vertex(vl.name);
        doc.reversed.push_back(vl.reversed);
    }
    std::map<int, int> edge_index;
    for (const auto& el : elines) {
        if (edge_index.count(el.id))
            throw ParseError(el.lineno, "edge id " + std::to_string(el.id) + " repeated");
        auto u = g.find(el.u);
        if (!u)
            throw ParseError(el.lineno, "unknown vertex '" + el.u + "'");
        int v;
        if (el.v == "*") {
            if (el.type != 0 || !cg.group.even_order() || cg.group.normalize(el.current) != cg.group.half())
                throw ParseError(el.lineno, "a stub must be a type 0 edge carrying the element of order 2");
            v = g.add_vertex("*" + std::to_string(el.id));
            doc.reversed.push_back(false);
        } else {
            auto vv = g.find(el.v);
            if (!vv)
                throw ParseError(el.lineno, "unknown vertex '" + el.v + "'");
            v = *vv;
        }
        if (cg.group.normalize(el.current) == 0)
            throw ParseError(el.lineno, "currents must be nonzero");
        if (el.current <= -cg.group.order() || el.current >= cg.group.order())
            throw ParseError(el.lineno, "current outside the group");
        edge_index[el.id] = g.add_edge(*u, v);
        doc.edge_ids.push_back(el.id);
        cg.current.push_back(cg.group.normalize(el.current));
    }

    auto parse_end = [&](const std::string& tok, int lineno) {
        if (tok.size() < 2 || (tok.back() != '+' && tok.back() != '-'))
            throw ParseError(lineno, "edge end must look like 3+ or 3-");
        const int id = parse_int(tok.substr(0, tok.size() - 1), lineno);
        auto it = edge_index.find(id);
        if (it == edge_index.end())
            throw ParseError(lineno, "unknown edge " + std::to_string(id));
        return arc_end(it->second, tok.back() == '-' ? 1 : 0);
    };

    std::vector<std::vector<int>> rotation(g.vertex_count());
    for (size_t i = 0; i < vlines.size(); ++i) {
        for (const auto& tok : vlines[i].ends)
            rotation[i].push_back(parse_end(tok, vlines[i].lineno));
        if (vlines[i].reversed)
            std::reverse(rotation[i].begin(), rotation[i].end());
    }
    std::vector<std::uint8_t> sig;
    for (size_t e = 0; e < elines.size(); ++e) {
        sig.push_back(static_cast<std::uint8_t>(elines[e].type));
        if (elines[e].v == "*")
            rotation[g.edge(static_cast<int>(e)).v].push_back(arc_end(static_cast<int>(e), 1));
    }
    try {
        cg.skeleton = Embedding(std::move(g), std::move(rotation), std::move(sig));
    } catch (const InputError& e) {
        throw ParseError(0, e.what());
    }
    cg.stub.assign(cg.skeleton.vertex_count(), false);
    for (int v = static_cast<int>(vlines.size()); v < cg.skeleton.vertex_count(); ++v)
        cg.stub[v] = true;

    for (auto& xl : xlines) {
        const auto v = cg.skeleton.graph().find(xl.info.vertex);
        if (!v || cg.stub[*v])
            throw ParseError(xl.lineno, "vortex at unknown vertex '" + xl.info.vertex + "'");
        xl.info.excess = vertex_excess(cg, *v);
        cg.vortices.push_back(xl.info);
    }
    for (const auto& tok : anchors)
        cg.circuit_anchors.push_back(parse_end(tok, anchor_line));
    try {
        cg.attach_letters();
    } catch (const InputError& e) {
        throw ParseError(0, e.what());
    }
    return doc;
}

std::string print_cgt(const CgtDocument& doc)
{
    const CurrentGraph& cg = doc.graph;
    const Embedding& emb = cg.skeleton;
    const Graph& g = emb.graph();
    std::string out = header_text(doc.comments, cg.group, cg.kind, cg.generators);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (cg.stub[v])
            continue;
        std::vector<int> rot = emb.rotation(v);
        if (doc.reversed[v])
            std::reverse(rot.begin(), rot.end());
        out += "v " + g.name(v) + " rot:";
        for (int a : rot)
            out += " " + end_token(doc, a);
        out += std::string(" orient: ") + (doc.reversed[v] ? "-" : "+") + "\n";
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        out += "e " + std::to_string(doc.edge_ids[e]) + " " + g.name(ed.u) + " " +
               (cg.stub[ed.v] ? std::string("*") : g.name(ed.v)) + " current " + std::to_string(cg.current[e]) +
               " type " + std::to_string(emb.signature(e)) + "\n";
    }
    for (const auto& v : cg.vortices) {
        out += "vortex " + v.vertex + " kind " + to_string(v.kind) + " letters ";
        for (size_t i = 0; i < v.letters.size(); ++i)
            out += (i ? "," : "") + v.letters[i];
        out += "\n";
    }
    if (!cg.circuit_anchors.empty()) {
        out += "circuit-labels";
        for (int a : cg.circuit_anchors)
            out += " " + end_token(doc, a);
        out += "\n";
    }
    return out;
}

}  // namespace rotsys
