#include "rotsys/surgery.hpp"

#include <sstream>

#include "rotsys/adj_format.hpp"
#include "rotsys/report.hpp"

namespace rotsys {

namespace {

std::vector<std::string> words(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> w;
    std::string t;
    while (in >> t)
        w.push_back(t);
    return w;
}

std::vector<std::string> tuple_items(const std::string& tok, int lineno)
{
    if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
        throw ParseError(lineno, "expected a tuple like (a,b,c), found '" + tok + "'");
    std::vector<std::string> items;
    std::istringstream in(tok.substr(1, tok.size() - 2));
    std::string item;
    while (std::getline(in, item, ','))
        items.push_back(item);
    for (const auto& i : items)
        if (i.empty())
            throw ParseError(lineno, "empty entry in '" + tok + "'");
    return items;
}

CornerRef corner_ref(const std::string& tok, int lineno)
{
    auto items = tuple_items(tok, lineno);
    if (items.size() != 3)
        throw ParseError(lineno, "a corner is (prev,vertex,next), found '" + tok + "'");
    return {items[0], items[1], items[2]};
}

std::string tuple_text(const std::vector<std::string>& items)
{
    std::string s = "(";
    for (size_t i = 0; i < items.size(); ++i)
        s += (i ? "," : "") + items[i];
    return s + ")";
}

Command parse_command(const std::string& line, int lineno)
{
    Command c;
    c.line = lineno;
    if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') {
        c.text = line;
        return c;
    }
    const auto w = words(line);
    const std::string& op = w[0];
    auto need = [&](bool ok) {
        if (!ok)
            throw ParseError(lineno, "malformed '" + op + "' command: '" + line + "'");
    };
    if (op == "delete" || op == "flip") {
        c.kind = op == "delete" ? CommandKind::del : CommandKind::flip;
        need(w.size() == 3 || (w.size() == 6 && w[3] == "apex"));
        c.vertices = {w[1], w[2]};
        if (w.size() == 6)
            c.apexes = std::make_pair(w[4], w[5]);
    } else if (op == "add") {
        c.kind = CommandKind::add;
        need(w.size() == 3);
        c.corners = {corner_ref(w[1], lineno), corner_ref(w[2], lineno)};
    } else if (op == "bridge") {
        c.kind = CommandKind::bridge;
        need(w.size() == 4 && (w[3] == "orient=+" || w[3] == "orient=-"));
        c.corners = {corner_ref(w[1], lineno), corner_ref(w[2], lineno)};
        c.orient_plus = w[3] == "orient=+";
    } else if (op == "subdivide") {
        c.kind = CommandKind::subdivide;
        if (w.size() == 5 && w[1] == "face-of" && w[3] == "label") {
            c.vertices = tuple_items(w[2], lineno);
            c.label = w[4];
        } else {
            need(w.size() == 4 && w[2] == "label");
            c.corners = {corner_ref(w[1], lineno)};
            c.label = w[3];
        }
    } else if (op == "contract") {
        c.kind = CommandKind::contract;
        need(w.size() == 3);
        c.vertices = {w[1], w[2]};
    } else if (op == "shift") {
        c.kind = CommandKind::shift;
        need(w.size() == 2 && w[1].size() >= 2 && (w[1][0] == '+' || w[1][0] == '-'));
        try {
            c.amount = std::stoi(w[1]);
        } catch (const std::exception&) {
            need(false);
        }
        need(std::to_string(c.amount < 0 ? -c.amount : c.amount) == w[1].substr(1));
    } else if (op == "simple") {
        c.kind = CommandKind::simple;
        need(w.size() == 2 && (w[1] == "on" || w[1] == "off"));
        c.on = w[1] == "on";
    } else {
        throw ParseError(lineno, "unknown command '" + op + "'");
    }
    return c;
}

}  // namespace

std::string Command::to_string() const
{
    switch (kind) {
    case CommandKind::comment:
        return text;
    case CommandKind::del:
    case CommandKind::flip: {
        std::string s = std::string(kind == CommandKind::del ? "delete " : "flip ") + vertices[0] + " " + vertices[1];
        if (apexes)
            s += " apex " + apexes->first + " " + apexes->second;
        return s;
    }
    case CommandKind::add:
        return "add " + corners[0].to_string() + " " + corners[1].to_string();
    case CommandKind::bridge:
        return "bridge " + corners[0].to_string() + " " + corners[1].to_string() + " orient=" +
               (orient_plus ? "+" : "-");
    case CommandKind::subdivide:
        if (!vertices.empty())
            return "subdivide face-of " + tuple_text(vertices) + " label " + label;
        return "subdivide " + corners[0].to_string() + " label " + label;
    case CommandKind::contract:
        return "contract " + vertices[0] + " " + vertices[1];
    case CommandKind::shift:
        return std::string("shift ") + (amount < 0 ? "-" : "+") + std::to_string(amount < 0 ? -amount : amount);
    case CommandKind::simple:
        return std::string("simple ") + (on ? "on" : "off");
    }
    return {};
}

SurgeryScript parse_script(const std::string& text)
{
    SurgeryScript s;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        s.commands.push_back(parse_command(line, lineno));
    }
    return s;
}

std::string print_script(const SurgeryScript& script)
{
    std::string out;
    for (const auto& c : script.commands)
        out += c.to_string() + "\n";
    return out;
}

namespace {

TraceEntry snapshot(const Embedding& emb, const std::string& command)
{
    const FaceSet fs = trace_faces(emb);
    TraceEntry t;
    t.command = command;
    t.vertices = emb.vertex_count();
    t.edges = emb.edge_count();
    t.faces = fs.count();
    t.euler_characteristic = euler_characteristic(emb, fs);
    t.orientable = is_orientable(emb);
    t.face_lengths = fs.length_histogram();
    return t;
}

const Face& face_of_cycle(const Embedding& emb, const FaceSet& fs, const std::vector<int>& cycle)
{
    std::vector<int> rev(cycle.rbegin(), cycle.rend());
    auto matches = [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size())
            return false;
        for (size_t s = 0; s < a.size(); ++s) {
            bool ok = true;
            for (size_t i = 0; i < a.size() && ok; ++i)
                ok = a[i] == b[(i + s) % b.size()];
            if (ok)
                return true;
        }
        return false;
    };
    const Face* hit = nullptr;
    for (const auto& f : fs.faces) {
        const auto vs = f.vertices(emb);
        if (matches(vs, cycle) || matches(vs, rev)) {
            if (hit)
                throw SurgeryError("several faces have that boundary");
            hit = &f;
        }
    }
    if (!hit)
        throw SurgeryError("no face with that boundary");
    return *hit;
}

}  // namespace

ScriptRun run_script(const Embedding& input, const SurgeryScript& script)
{
    ScriptRun run;
    run.embedding = input;
    run.trace.push_back(snapshot(input, "(input)"));
    int offset = 0;
    bool guard = true;
    for (const auto& c : script.commands) {
        if (c.kind == CommandKind::comment)
            continue;
        Embedding& emb = run.embedding;
        const int chi_before = run.trace.back().euler_characteristic;
        try {
            const Graph& g = emb.graph();
            auto ref = [&](const std::string& t) { return resolve_ref(g, t, offset); };
            switch (c.kind) {
            case CommandKind::del:
            case CommandKind::flip: {
                std::optional<std::pair<int, int>> ap;
                if (c.apexes)
                    ap = std::make_pair(ref(c.apexes->first), ref(c.apexes->second));
                const int e = find_edge(emb, ref(c.vertices[0]), ref(c.vertices[1]), ap);
                if (c.kind == CommandKind::del)
                    delete_edge(emb, e);
                else
                    flip_edge(emb, e, guard);
                break;
            }
            case CommandKind::add:
            case CommandKind::bridge: {
                const FaceSet fs = trace_faces(emb);
                const FaceCorner a = find_corner(emb, fs, c.corners[0], offset);
                const FaceCorner b = find_corner(emb, fs, c.corners[1], offset);
                if (c.kind == CommandKind::add)
                    add_edge_in_face(emb, a, b, guard);
                else
                    bridge(emb, a, b, c.orient_plus, guard);
                break;
            }
            case CommandKind::subdivide: {
                const FaceSet fs = trace_faces(emb);
                if (c.vertices.empty()) {
                    subdivide_face(emb, find_corner(emb, fs, c.corners[0], offset).face, c.label);
                } else {
                    std::vector<int> cycle;
                    for (const auto& t : c.vertices)
                        cycle.push_back(ref(t));
                    subdivide_face(emb, face_of_cycle(emb, fs, cycle), c.label);
                }
                break;
            }
            case CommandKind::contract: {
                const int u = ref(c.vertices[0]);
                contract_edge(emb, find_edge(emb, u, ref(c.vertices[1])), u);
                break;
            }
            case CommandKind::shift:
                offset += c.amount;
                break;
            case CommandKind::simple:
                guard = c.on;
                break;
            case CommandKind::comment:
                break;
            }
            run.trace.push_back(snapshot(emb, c.to_string()));
            const int expect = chi_before - (c.kind == CommandKind::bridge ? 2 : 0);
            if (run.trace.back().euler_characteristic != expect)
                throw SurgeryError("Euler characteristic went from " + std::to_string(chi_before) + " to " +
                                   std::to_string(run.trace.back().euler_characteristic));
        } catch (const std::exception& e) {
            run.ok = false;
            run.error = "line " + std::to_string(c.line) + " (" + c.to_string() + "): " + e.what();
            run.failed_line = c.line;
            return run;
        }
    }
    return run;
}

std::string trace_to_string(const std::vector<TraceEntry>& trace)
{
    std::string out;
    for (size_t i = 0; i < trace.size(); ++i) {
        const auto& t = trace[i];
        out += "step " + std::to_string(i) + ": " + t.command + " V=" + std::to_string(t.vertices) +
               " E=" + std::to_string(t.edges) + " F=" + std::to_string(t.faces) +
               " chi=" + std::to_string(t.euler_characteristic) +
               " orientable=" + (t.orientable ? "true" : "false") + " faces=" + histogram_to_string(t.face_lengths) +
               "\n";
    }
    return out;
}

}  // namespace rotsys
