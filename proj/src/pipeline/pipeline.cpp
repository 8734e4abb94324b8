#include "rotsys/pipeline.hpp"

#include <sstream>

#include "rotsys/adj_format.hpp"
#include "rotsys/current_formats.hpp"
#include "rotsys/surgery.hpp"

namespace rotsys {

PipelineManifest parse_pipeline(const std::string& text)
{
    PipelineManifest m;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool body = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        if (line[0] == '#') {
            if (body)
                throw ParseError(lineno, "comments are only allowed at the top");
            m.comments.push_back(line);
            continue;
        }
        body = true;
        std::istringstream ls(line);
        std::string key, value, extra;
        ls >> key >> value;
        if (value.empty() || (ls >> extra))
            throw ParseError(lineno, "expected 'key value', found '" + line + "'");
        if (key == "name")
            m.name = value;
        else if (key == "start")
            m.start = value;
        else if (key == "script")
            m.script = value;
        else if (key == "target")
            m.target = value;
        else if (key == "genus") {
            try {
                size_t used = 0;
                m.genus = std::stoi(value, &used);
                if (used != value.size())
                    throw std::invalid_argument(value);
            } catch (const std::exception&) {
                throw ParseError(lineno, "genus must be an integer");
            }
        } else if (key == "orientable") {
            if (value != "yes" && value != "no")
                throw ParseError(lineno, "orientable must be yes or no");
            m.orientable = value == "yes";
        } else {
            throw ParseError(lineno, "unknown key '" + key + "'");
        }
    }
    if (m.start.empty() || m.target.empty())
        throw ParseError(0, "a pipeline needs 'start' and 'target'");
    return m;
}

std::string print_pipeline(const PipelineManifest& m)
{
    std::string out;
    for (const auto& c : m.comments)
        out += c + "\n";
    if (!m.name.empty())
        out += "name " + m.name + "\n";
    out += "start " + m.start + "\n";
    if (m.script)
        out += "script " + *m.script + "\n";
    out += "target " + m.target + "\n";
    if (m.genus)
        out += "genus " + std::to_string(*m.genus) + "\n";
    if (m.orientable)
        out += std::string("orientable ") + (*m.orientable ? "yes" : "no") + "\n";
    return out;
}

namespace {

bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Embedding load_embedding(const std::string& path)
{
    const std::string text = read_file(path);
    if (ends_with(path, ".adj"))
        return parse_adj(text).embedding;
    if (ends_with(path, ".log"))
        return parse_log_document(text).derive().embedding;
    if (ends_with(path, ".cgt"))
        return derive(parse_cgt(text).graph).embedding;
    throw InputError("cannot tell the format of '" + path + "' (expected .adj, .log or .cgt)");
}

PipelineResult run_pipeline(const PipelineManifest& m, const std::string& base_dir)
{
    PipelineResult res;
    Report& r = res.report;
    const std::string name = m.name.empty() ? m.target : m.name;
    const Graph target = parse_graph_spec(m.target);

    Embedding emb;
    try {
        emb = load_embedding(base_dir + "/" + m.start);
    } catch (const DerivationError& e) {
        r.check("start", false, e.what());
        res.summary = name + ": derivation failed";
        return res;
    }
    r.check("start", true);
    r.add("start.euler_characteristic", static_cast<long long>(euler_characteristic(emb)));

    if (m.script) {
        const SurgeryScript script = parse_script(read_file(base_dir + "/" + *m.script));
        const ScriptRun run = run_script(emb, script);
        for (size_t i = 1; i < run.trace.size(); ++i)
            r.add("chi." + std::to_string(i), run.trace[i].command + " -> " +
                                                   std::to_string(run.trace[i].euler_characteristic));
        r.check("surgery", run.ok, run.error);
        if (!run.ok) {
            res.summary = name + ": surgery failed at line " + std::to_string(run.failed_line);
            return res;
        }
        emb = run.embedding;
    }

    SurfaceClaims claims;
    claims.graph = target;
    claims.genus = m.genus;
    claims.orientable = m.orientable;
    r.merge(verify_embedding(emb, claims), "final.");
    const SurfaceClass sc = classify_surface(emb);
    res.pass = r.pass();
    res.summary = name + " genus " + std::to_string(sc.genus) + (sc.orientable ? "" : " (nonorientable)");
    res.final = std::move(emb);
    return res;
}

}  // namespace rotsys
