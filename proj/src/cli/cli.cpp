#include "rotsys/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <map>
#include <ostream>
#include <set>

#include "rotsys/adj_format.hpp"
#include "rotsys/bounds.hpp"
#include "rotsys/current_formats.hpp"
#include "rotsys/ladder.hpp"
#include "rotsys/pipeline.hpp"
#include "rotsys/search.hpp"
#include "rotsys/surgery.hpp"

#ifndef ROTSYS_DEFAULT_DATA_DIR
#define ROTSYS_DEFAULT_DATA_DIR "data"
#endif

namespace rotsys {

std::string fixture_dir()
{
    if (const char* env = std::getenv("ROTSYS_FIXTURE_DIR"); env && *env)
        return env;
    return ROTSYS_DEFAULT_DATA_DIR;
}

namespace {

bool has_suffix(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::optional<bool> orientation_claim(bool orientable, bool nonorientable)
{
    if (orientable && nonorientable)
        throw InputError("--orientable and --nonorientable exclude each other");
    if (orientable)
        return true;
    if (nonorientable)
        return false;
    return std::nullopt;
}

int finish(const Report& r, std::ostream& out)
{
    out << r.to_text();
    out << "result " << (r.pass() ? "pass" : "fail") << "\n";
    return r.pass() ? exit_pass : exit_fail;
}

/// Writes `text` to `path`, or to `out` when no path is given.
void emit(const std::string& text, const std::string& path, std::ostream& out)
{
    if (path.empty())
        out << text;
    else
        write_file(path, text);
}

struct VerifyOpts {
    std::string file, graph, shape;
    std::optional<int> genus;
    bool orientable = false, nonorientable = false;
};

int cmd_verify(const VerifyOpts& o, std::ostream& out)
{
    const Embedding emb = load_embedding(o.file);
    SurfaceClaims claims;
    if (!o.graph.empty())
        claims.graph = parse_graph_spec(o.graph);
    claims.genus = o.genus;
    claims.orientable = orientation_claim(o.orientable, o.nonorientable);
    if (!o.shape.empty())
        claims.shape = ShapeSpec::parse(o.shape);
    return finish(verify_embedding(emb, claims), out);
}

struct DeriveOpts {
    std::string file, out_path;
    bool check_principles = false, force = false;
    std::optional<int> index;
};

CurrentKind kind_for_index(int index)
{
    switch (index) {
    case 1: return CurrentKind::index1;
    case 2: return CurrentKind::index2;
    case 4: return CurrentKind::index4;
    }
    throw InputError("--index must be 1, 2 or 4");
}

/// ADJ input with --index: print the logs and check they regenerate the table.
int extract(const DeriveOpts& o, std::ostream& out, std::ostream& err)
{
    const std::string text = read_file(o.file);
    const Embedding emb = parse_adj(text).embedding;
    const Graph& g = emb.graph();
    int numeric = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        numeric += is_numeric_name(g.name(v)) ? 1 : 0;

    LogDocument doc;
    doc.group = CurrentGroup(numeric);
    doc.kind = kind_for_index(*o.index);
    doc.logs = extract_logs(emb, *o.index);
    bool letters = false;
    std::set<int> gens;
    for (const auto& log : doc.logs)
        for (const auto& e : log) {
            if (e.is_letter()) {
                letters = true;
                continue;
            }
            const int a = std::min(e.value, doc.group.neg(e.value));
            if (a != 0)
                gens.insert(a);
        }
    doc.generators.assign(gens.begin(), gens.end());
    emit(print_log_document(doc), o.out_path, out);

    Report r;
    r.add("logs", static_cast<long long>(doc.logs.size()));
    if (!letters) {
        bool same = false;
        try {
            same = print_adj(doc.derive().embedding) == print_adj(emb);
        } catch (const DerivationError& e) {
            r.check("regenerates", false, e.what());
        }
        if (!r.get("regenerates"))
            r.check("regenerates", same);
    }
    return finish(r, o.out_path.empty() ? err : out);
}

int cmd_derive(const DeriveOpts& o, std::ostream& out, std::ostream& err)
{
    if (o.index) {
        if (!has_suffix(o.file, ".adj"))
            throw InputError("--index extracts logs from an ADJ file");
        return extract(o, out, err);
    }
    std::ostream& rep = o.out_path.empty() ? err : out;
    Report r;
    Derivation d;
    const std::string text = read_file(o.file);
    if (has_suffix(o.file, ".cgt")) {
        const CgtDocument doc = parse_cgt(text);
        if (o.check_principles) {
            const Report pr = check_principles(doc.graph);
            r.merge(pr, "principles.");
            if (!pr.pass() && !o.force)
                return finish(r, rep);
        }
        d = derive(doc.graph);
    } else if (has_suffix(o.file, ".log")) {
        const LogDocument doc = parse_log_document(text);
        if (o.check_principles) {
            const Report pr = check_logs(doc.logs, doc.group, doc.generators);
            r.merge(pr, "principles.");
            if (!pr.pass() && !o.force)
                return finish(r, rep);
        }
        d = doc.derive();
    } else {
        throw InputError("derive reads .cgt or .log files");
    }
    emit(print_adj(d.embedding), o.out_path, out);
    r.merge(describe_surface(d.embedding, trace_faces(d.embedding)));
    if (o.force && !r.pass()) {
        rep << r.to_text() << "result fail (forced)\n";
        return exit_fail;
    }
    return finish(r, rep);
}

struct ExpandOpts {
    std::string file, out_path;
    std::vector<long long> s;
    bool verify = false;
};

long long template_base(const LadderTemplate& t)
{
    for (long long s = 0; s < 64; ++s)
        if (t.valid(s))
            return s;
    throw InputError("template has no valid s below 64");
}

int cmd_expand(const ExpandOpts& o, std::ostream& out)
{
    const LadderTemplate t = parse_ladder_template(read_file(o.file));
    std::vector<long long> s = o.s;
    if (s.empty()) {
        const long long base = template_base(t);
        s = o.verify ? std::vector<long long>{base, base + 2, base + 4} : std::vector<long long>{base};
    }
    if (o.verify)
        return finish(verify_family(t, s), out);
    if (s.size() != 1)
        throw InputError("expand writes one instance; use --verify for several s values");
    const LadderInstance inst = expand(t, s[0]);
    emit(print_cgt(inst.cgt), o.out_path, out);
    return exit_pass;
}

struct SurgeryOpts {
    std::string start, script, out_path, graph;
    std::optional<int> genus;
    bool orientable = false, nonorientable = false;
};

int cmd_surgery(const SurgeryOpts& o, std::ostream& out)
{
    const Embedding start = load_embedding(o.start);
    const ScriptRun run = run_script(start, parse_script(read_file(o.script)));
    out << trace_to_string(run.trace);
    Report r;
    r.check("script", run.ok, run.ok ? "" : "line " + std::to_string(run.failed_line) + ": " + run.error);
    if (run.ok) {
        SurfaceClaims claims;
        if (!o.graph.empty())
            claims.graph = parse_graph_spec(o.graph);
        claims.genus = o.genus;
        claims.orientable = orientation_claim(o.orientable, o.nonorientable);
        r.merge(verify_embedding(run.embedding, claims), "final.");
        if (!o.out_path.empty())
            write_file(o.out_path, print_adj(run.embedding));
    }
    return finish(r, out);
}

struct PipelineOpts {
    std::string which, base, out_path;
};

int cmd_pipeline(const PipelineOpts& o, std::ostream& out)
{
    std::string path = o.which;
    if (!has_suffix(path, ".pip"))
        path = fixture_dir() + "/pipelines/" + path + ".pip";
    const std::string base = o.base.empty() ? fixture_dir() : o.base;
    const PipelineResult res = run_pipeline(parse_pipeline(read_file(path)), base);
    if (res.final && !o.out_path.empty())
        write_file(o.out_path, print_adj(*res.final));
    out << res.summary << "\n";
    return finish(res.report, out);
}

struct BoundOpts {
    std::string target;
    std::optional<int> n;
    bool nonorientable = false;
};

int cmd_bound(const BoundOpts& o, std::ostream& out)
{
    Report r;
    const bool orientable = !o.nonorientable;
    if (o.n) {
        const Family f = parse_family(o.target);
        const Graph g = family_graph(f, *o.n);
        r.add("vertices", static_cast<long long>(g.vertex_count()));
        r.add("edges", static_cast<long long>(g.edge_count()));
        const long long euler = euler_lower_bound(g, orientable);
        r.add("euler_bound", euler);
        if (orientable) {
            const long long closed = closed_form_bound(f, *o.n);
            r.add("closed_form", closed);
            r.check("coherent", closed == euler);
        }
    } else {
        const Graph g = parse_graph_spec(o.target);
        r.add("vertices", static_cast<long long>(g.vertex_count()));
        r.add("edges", static_cast<long long>(g.edge_count()));
        r.add("euler_bound", euler_lower_bound(g, orientable));
    }
    r.add("surface", orientable ? "orientable" : "nonorientable");
    return finish(r, out);
}

struct SearchOpts {
    std::string file, graph, faces, out_path;
    std::optional<long long> budget;
    std::optional<double> seconds;
    bool orientable = false, nonorientable = false;
};

int cmd_search(const SearchOpts& o, std::ostream& out)
{
    SearchSpec spec;
    if (!o.file.empty()) {
        spec = parse_search_spec(read_file(o.file));
    } else if (!o.graph.empty()) {
        spec.graph_text = o.graph;
        spec.target = parse_graph_spec(o.graph);
        spec.shape = ShapeSpec::parse("triangles");
    } else {
        throw InputError("search needs an SRC file or --graph");
    }
    if (!o.graph.empty() && !o.file.empty())
        throw InputError("give an SRC file or --graph, not both");
    if (!o.faces.empty())
        spec.shape = ShapeSpec::parse(o.faces);
    if (const auto orient = orientation_claim(o.orientable, o.nonorientable))
        spec.orientable_only = *orient;
    if (o.budget)
        spec.node_budget = *o.budget;
    if (o.seconds)
        spec.time_budget = *o.seconds;

    const SearchResult res = search(spec);
    Report r;
    r.add("status", to_string(res.status));
    r.add("nodes", res.nodes);
    if (!res.reason.empty())
        r.add("reason", res.reason);
    r.check("found", res.status == SearchStatus::found);
    if (res.embedding) {
        const SurfaceClass sc = classify_surface(*res.embedding);
        r.add("genus", static_cast<long long>(sc.genus));
        r.add("orientable", sc.orientable);
        emit(print_adj(*res.embedding), o.out_path, out);
    }
    return finish(r, out);
}

int cmd_fixtures(const std::string& dir, std::ostream& out)
{
    bool all = true;
    for (const auto& c : run_acceptance(dir.empty() ? fixture_dir() : dir)) {
        out << format_criterion(c) << "\n";
        all = all && c.pass;
    }
    return all ? exit_pass : exit_fail;
}

void orientation_flags(CLI::App* sub, bool& orientable, bool& nonorientable)
{
    sub->add_flag("--orientable", orientable, "Orientable surface");
    sub->add_flag("--nonorientable", nonorientable, "Nonorientable surface");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rotation systems, current graphs and surgery on graph embeddings", "rotsys"};
    app.require_subcommand(1);

    VerifyOpts vo;
    auto* verify = app.add_subcommand("verify", "Trace faces and check claims about an embedding");
    verify->add_option("file", vo.file, "ADJ, LOG or CGT file")->required();
    verify->add_option("--graph", vo.graph, "Expected graph, e.g. complete(12)-cycle(12)");
    verify->add_option("--genus", vo.genus, "Expected genus");
    verify->add_option("--shape", vo.shape, "Expected faces, e.g. triangles+2x6");
    orientation_flags(verify, vo.orientable, vo.nonorientable);

    DeriveOpts dopt;
    auto* derive_cmd = app.add_subcommand("derive", "Derived embedding of a current graph or logs");
    derive_cmd->add_option("file", dopt.file, "CGT or LOG file (ADJ with --index)")->required();
    derive_cmd->add_flag("--check-principles", dopt.check_principles, "Check the construction principles first");
    derive_cmd->add_flag("--force", dopt.force, "Derive even when a principle fails");
    derive_cmd->add_option("--index", dopt.index, "Extract this many logs from an ADJ table");
    derive_cmd->add_option("--out", dopt.out_path, "Output file");

    ExpandOpts eo;
    auto* expand_cmd = app.add_subcommand("expand", "Expand a ladder template");
    expand_cmd->add_option("file", eo.file, "LDR file")->required();
    expand_cmd->add_option("--s", eo.s, "Family parameter (repeatable)");
    expand_cmd->add_flag("--verify", eo.verify, "Verify the family at the given s values");
    expand_cmd->add_option("--out", eo.out_path, "Output CGT file");

    SurgeryOpts so;
    auto* surgery = app.add_subcommand("surgery", "Run a surgery script");
    surgery->add_option("start", so.start, "Start embedding (ADJ, LOG or CGT)")->required();
    surgery->add_option("script", so.script, "SUR file")->required();
    surgery->add_option("--graph", so.graph, "Expected final graph");
    surgery->add_option("--genus", so.genus, "Expected final genus");
    surgery->add_option("--out", so.out_path, "Output ADJ file");
    orientation_flags(surgery, so.orientable, so.nonorientable);

    PipelineOpts po;
    auto* pipeline = app.add_subcommand("pipeline", "Derive, operate and verify in one go");
    pipeline->add_option("manifest", po.which, "PIP file or shipped name (k13, o28, k18)")->required();
    pipeline->add_option("--base", po.base, "Directory the manifest paths are relative to");
    pipeline->add_option("--out", po.out_path, "Output ADJ file");

    BoundOpts bo;
    bool bound_orientable = false;
    auto* bound = app.add_subcommand("bound", "Euler lower bound and closed form");
    bound->add_option("target", bo.target, "Graph expression, or family name with N")->required();
    bound->add_option("n", bo.n, "Vertex count for a family");
    orientation_flags(bound, bound_orientable, bo.nonorientable);

    SearchOpts sopt;
    auto* search_cmd = app.add_subcommand("search", "Search for an embedding with given faces");
    search_cmd->add_option("file", sopt.file, "SRC file");
    search_cmd->add_option("--graph", sopt.graph, "Graph expression (all triangles unless --faces)");
    search_cmd->add_option("--faces", sopt.faces, "Face shape");
    search_cmd->add_option("--budget", sopt.budget, "Node budget");
    search_cmd->add_option("--seconds", sopt.seconds, "Time budget");
    search_cmd->add_option("--out", sopt.out_path, "Output ADJ file");
    orientation_flags(search_cmd, sopt.orientable, sopt.nonorientable);

    std::string fixtures_dir;
    auto* fixtures = app.add_subcommand("fixtures", "Run the acceptance checks on the fixtures");
    fixtures->add_option("--dir", fixtures_dir, "Fixture directory");

    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_input;
    }

    try {
        if (*verify)
            return cmd_verify(vo, out);
        if (*derive_cmd)
            return cmd_derive(dopt, out, err);
        if (*expand_cmd)
            return cmd_expand(eo, out);
        if (*surgery)
            return cmd_surgery(so, out);
        if (*pipeline)
            return cmd_pipeline(po, out);
        if (*bound) {
            orientation_claim(bound_orientable, bo.nonorientable);
            return cmd_bound(bo, out);
        }
        if (*search_cmd)
            return cmd_search(sopt, out);
        if (*fixtures)
            return cmd_fixtures(fixtures_dir, out);
    } catch (const LadderError& e) {
        err << "error: " << e.what() << "\n";
        return e.code() == LadderError::Code::out_of_range ? exit_input : exit_fail;
    } catch (const DerivationError& e) {
        err << "derivation failed: " << e.what() << "\n";
        return exit_fail;
    } catch (const SurgeryError& e) {
        err << "surgery failed: " << e.what() << "\n";
        return exit_fail;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input;
    }
    return exit_input;
}

}  // namespace rotsys
