#include "rotsys/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>
#include <stdexcept>

#include "rotsys/adj_format.hpp"

namespace rotsys {

std::string to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::found:
        return "found";
    case SearchStatus::exhausted:
        return "exhausted";
    case SearchStatus::impossible:
        return "impossible";
    case SearchStatus::budget_exceeded:
        return "budget-exceeded";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct LongGroup {
    int length = 0;
    std::vector<std::string> labels;
    int remaining = 0;
};

struct Placed {
    std::vector<int> cycle;
    int group = -1;  // long-face group, or -1 for a triangle
};

class Searcher {
public:
    explicit Searcher(const SearchSpec& spec) : spec_(spec), g_(spec.target), n_(g_.vertex_count())
    {
        eid_.assign(n_, std::vector<int>(n_, -1));
        for (int e = 0; e < g_.edge_count(); ++e) {
            eid_[g_.edge(e).u][g_.edge(e).v] = e;
            eid_[g_.edge(e).v][g_.edge(e).u] = e;
        }
        nbrs_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            nbrs_[v] = g_.neighbors(v);
            std::sort(nbrs_[v].begin(), nbrs_[v].end());
        }
        on_edge_.assign(g_.edge_count(), {});
        link_.assign(n_, std::vector<std::vector<std::pair<int, int>>>(n_));
        for (const auto& lf : spec.shape.long_faces) {
            auto it = std::find_if(groups_.begin(), groups_.end(), [&](const LongGroup& gr) {
                return gr.length == lf.length && gr.labels == lf.labels;
            });
            if (it == groups_.end())
                groups_.push_back({lf.length, lf.labels, 1});
            else
                ++it->remaining;
        }
    }

    SearchResult run();

private:
    // faces placed on an edge: (face id, traverses edge.u -> edge.v)
    struct EdgeUse {
        int count = 0;
        int face[2] = {-1, -1};
        bool forward[2] = {false, false};
    };

    bool forward(int a, int b) const { return g_.edge(eid_[a][b]).u == a; }
    bool can_place(const std::vector<int>& cycle) const;
    bool link_accepts(int v, int a, int b) const;
    void place(std::vector<int> cycle, int group);
    void unplace();
    struct Candidate {
        std::vector<int> cycle;
        int group = -1;
    };
    std::vector<Candidate> candidates(int p, int q) const;
    void extend_paths(std::vector<int>& path, int q, int length, const LongGroup& gr,
                      std::vector<std::vector<int>>& out) const;
    bool tick();
    bool dfs();
    Embedding build() const;

    const SearchSpec& spec_;
    const Graph& g_;
    int n_;
    std::vector<std::vector<int>> eid_;
    std::vector<std::vector<int>> nbrs_;
    std::vector<EdgeUse> on_edge_;
    std::vector<std::vector<std::vector<std::pair<int, int>>>> link_;  // [v][a] -> (b, face)
    std::vector<Placed> faces_;
    std::vector<LongGroup> groups_;
    int full_edges_ = 0;
    long long nodes_ = 0;
    bool stopped_ = false;
    std::string stop_reason_;
    Clock::time_point start_;
};

bool Searcher::link_accepts(int v, int a, int b) const
{
    const auto& la = link_[v][a];
    const auto& lb = link_[v][b];
    if (la.size() >= 2 || lb.size() >= 2)
        return false;
    // walk the link path that starts at a
    int cur = a, came = -1, count = 1;
    for (;;) {
        const auto& l = link_[v][cur];
        const auto next = std::find_if(l.begin(), l.end(), [&](const auto& x) { return x.second != came; });
        if (next == l.end())
            break;
        came = next->second;
        cur = next->first;
        ++count;
    }
    if (cur != b)
        return true;
    return count == static_cast<int>(nbrs_[v].size());
}

bool Searcher::can_place(const std::vector<int>& cycle) const
{
    const size_t k = cycle.size();
    for (size_t i = 0; i < k; ++i) {
        const int a = cycle[i], b = cycle[(i + 1) % k];
        const EdgeUse& use = on_edge_[eid_[a][b]];
        if (use.count >= 2)
            return false;
        if (spec_.orientable_only && use.count == 1 && use.forward[0] == forward(a, b))
            return false;
    }
    for (size_t i = 0; i < k; ++i)
        if (!link_accepts(cycle[i], cycle[(i + k - 1) % k], cycle[(i + 1) % k]))
            return false;
    return true;
}

void Searcher::place(std::vector<int> cycle, int group)
{
    const int id = static_cast<int>(faces_.size());
    const size_t k = cycle.size();
    for (size_t i = 0; i < k; ++i) {
        const int a = cycle[i], b = cycle[(i + 1) % k];
        EdgeUse& use = on_edge_[eid_[a][b]];
        use.face[use.count] = id;
        use.forward[use.count] = forward(a, b);
        if (++use.count == 2)
            ++full_edges_;
        const int p = cycle[(i + k - 1) % k];
        link_[a][p].emplace_back(b, id);
        link_[a][b].emplace_back(p, id);
    }
    if (group >= 0)
        --groups_[group].remaining;
    faces_.push_back({std::move(cycle), group});
}

void Searcher::unplace()
{
    const Placed f = faces_.back();
    faces_.pop_back();
    const size_t k = f.cycle.size();
    for (size_t i = 0; i < k; ++i) {
        const int a = f.cycle[i], b = f.cycle[(i + 1) % k];
        EdgeUse& use = on_edge_[eid_[a][b]];
        if (use.count-- == 2)
            --full_edges_;
        const int p = f.cycle[(i + k - 1) % k];
        link_[a][p].pop_back();
        link_[a][b].pop_back();
    }
    if (f.group >= 0)
        ++groups_[f.group].remaining;
}

void Searcher::extend_paths(std::vector<int>& path, int q, int length, const LongGroup& gr,
                            std::vector<std::vector<int>>& out) const
{
    if (static_cast<int>(path.size()) == length) {
        if (eid_[path.back()][q] < 0)
            return;
        for (const auto& label : gr.labels)
            if (std::none_of(path.begin(), path.end(), [&](int v) { return g_.name(v) == label; }))
                return;
        out.push_back(path);
        return;
    }
    for (int x : nbrs_[path.back()]) {
        if (std::find(path.begin(), path.end(), x) != path.end())
            continue;
        path.push_back(x);
        extend_paths(path, q, length, gr, out);
        path.pop_back();
    }
}

// Faces that traverse q -> p -> ... -> q.
std::vector<Searcher::Candidate> Searcher::candidates(int p, int q) const
{
    std::vector<Candidate> out;
    for (int x : nbrs_[p])
        if (x != q && eid_[x][q] >= 0) {
            std::vector<int> c{q, p, x};
            if (can_place(c))
                out.push_back({std::move(c), -1});
        }
    for (size_t i = 0; i < groups_.size(); ++i) {
        if (groups_[i].remaining == 0)
            continue;
        std::vector<std::vector<int>> cycles;
        std::vector<int> path{q, p};
        extend_paths(path, q, groups_[i].length, groups_[i], cycles);
        for (auto& c : cycles)
            if (can_place(c))
                out.push_back({std::move(c), static_cast<int>(i)});
    }
    return out;
}

bool Searcher::tick()
{
    ++nodes_;
    if (nodes_ > spec_.node_budget) {
        stopped_ = true;
        stop_reason_ = "node budget of " + std::to_string(spec_.node_budget) + " reached";
    } else if ((nodes_ & 1023) == 0 &&
               std::chrono::duration<double>(Clock::now() - start_).count() > spec_.time_budget) {
        stopped_ = true;
        stop_reason_ = "time budget reached";
    }
    return !stopped_;
}

bool Searcher::dfs()
{
    if (full_edges_ == g_.edge_count())
        return std::all_of(groups_.begin(), groups_.end(), [](const LongGroup& gr) { return gr.remaining == 0; });
    // open edge with the fewest ways to finish it
    std::vector<Candidate> best;
    bool have = false;
    for (int e = 0; e < g_.edge_count(); ++e) {
        const EdgeUse& use = on_edge_[e];
        if (use.count != 1)
            continue;
        // the existing face runs a -> b; the new one runs b -> a
        int a = g_.edge(e).u, b = g_.edge(e).v;
        if (!use.forward[0])
            std::swap(a, b);
        auto c = candidates(a, b);
        if (!have || c.size() < best.size()) {
            best = std::move(c);
            have = true;
        }
        if (best.empty())
            return false;
    }
    if (!have)
        return false;
    for (auto& cand : best) {
        if (!tick())
            return false;
        place(cand.cycle, cand.group);
        if (dfs())
            return true;
        unplace();
        if (stopped_)
            return false;
    }
    return false;
}

Embedding Searcher::build() const
{
    std::vector<std::vector<int>> rot(n_);
    std::vector<std::vector<int>> after(n_, std::vector<int>(n_, -1));   // face after neighbour
    std::vector<std::vector<int>> before(n_, std::vector<int>(n_, -1));  // face before neighbour
    for (int v = 0; v < n_; ++v) {
        const int n0 = nbrs_[v].front();
        // start with the face that arrives at v from n0, when there is one
        const auto& l0 = link_[v][n0];
        auto pick = l0.begin();
        for (auto it = l0.begin(); it != l0.end(); ++it) {
            const auto& c = faces_[it->second].cycle;
            const size_t k = c.size();
            const size_t i = std::find(c.begin(), c.end(), v) - c.begin();
            if (c[(i + k - 1) % k] == n0) {
                pick = it;
                break;
            }
        }
        int cur = n0, face = pick->second, next = pick->first;
        for (;;) {
            rot[v].push_back(arc_end(eid_[v][cur], g_.edge(eid_[v][cur]).u == v ? 0 : 1));
            after[v][cur] = face;
            before[v][next] = face;
            if (next == n0)
                break;
            const auto& l = link_[v][next];
            const auto it = std::find_if(l.begin(), l.end(), [&](const auto& x) { return x.second != face; });
            cur = next;
            face = it->second;
            next = it->first;
        }
    }
    std::vector<std::uint8_t> sig(g_.edge_count(), 0);
    for (int e = 0; e < g_.edge_count(); ++e) {
        const int u = g_.edge(e).u, v = g_.edge(e).v;
        sig[e] = before[u][v] == after[v][u] ? 0 : 1;
    }
    return Embedding(g_, std::move(rot), std::move(sig));
}

SearchResult Searcher::run()
{
    SearchResult res;
    start_ = Clock::now();
    int anchor = 0;
    if (spec_.anchor) {
        anchor = g_.index(*spec_.anchor);
    } else {
        for (int v = 0; v < n_; ++v)
            if (g_.degree(v) > g_.degree(anchor))
                anchor = v;
    }

    bool ok = true;
    if (!spec_.anchor_rotation.empty()) {
        std::vector<int> r;
        for (const auto& name : spec_.anchor_rotation)
            r.push_back(g_.index(name));
        std::vector<int> sorted = r;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != nbrs_[anchor])
            throw InputError("anchor rotation must list every neighbour of " + g_.name(anchor) + " once");
        for (size_t i = 0; i < r.size() && ok; ++i) {
            const int a = r[i], b = r[(i + 1) % r.size()];
            if (eid_[a][b] < 0)
                throw InputError("anchor rotation: " + g_.name(a) + " and " + g_.name(b) + " are not adjacent");
            std::vector<int> c{anchor, b, a};
            ok = can_place(c);
            if (ok)
                place(c, -1);
        }
        ok = ok && dfs();
    } else {
        // the first face runs anchor -> n0 -> ...; its mirror image is not tried
        const int n0 = nbrs_[anchor].front();
        auto first = candidates(n0, anchor);
        ok = false;
        for (auto& c : first) {
            if (!tick())
                break;
            place(c.cycle, c.group);
            if (dfs()) {
                ok = true;
                break;
            }
            unplace();
            if (stopped_)
                break;
        }
    }

    res.nodes = nodes_;
    res.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
    if (ok) {
        res.status = SearchStatus::found;
        res.embedding = build();
        const FaceSet fs = trace_faces(*res.embedding);
        std::map<int, int> want;
        for (const auto& f : faces_)
            ++want[static_cast<int>(f.cycle.size())];
        if (fs.count() != static_cast<int>(faces_.size()) || fs.length_histogram() != want)
            throw std::logic_error("search produced an embedding whose faces do not match");
    } else if (stopped_) {
        res.status = SearchStatus::budget_exceeded;
        res.reason = stop_reason_;
    } else {
        res.status = SearchStatus::exhausted;
        res.reason = spec_.anchor_rotation.empty() ? "no embedding" : "no embedding with the anchor rotation";
    }
    return res;
}

}  // namespace

SearchResult search(const SearchSpec& spec)
{
    const Graph& g = spec.target;
    if (g.vertex_count() == 0 || g.edge_count() == 0)
        throw InputError("search target has no edges");
    if (!g.is_simple())
        throw InputError("search target must be a simple graph");
    if (!g.is_connected())
        throw InputError("search target must be connected");
    if (spec.node_budget <= 0 || spec.time_budget <= 0)
        throw InputError("search budgets must be positive");
    if (spec.anchor && !g.find(*spec.anchor))
        throw InputError("anchor '" + *spec.anchor + "' is not a vertex of the target");
    for (const auto& lf : spec.shape.long_faces)
        if (lf.length < 4)
            throw InputError("long faces in a search must have length at least 4");

    SearchResult res;
    long long long_total = 0;
    for (const auto& lf : spec.shape.long_faces)
        long_total += lf.length;
    const long long rest = 2LL * g.edge_count() - long_total;
    if (rest < 0 || rest % 3 != 0) {
        res.status = SearchStatus::impossible;
        res.reason = "2E minus the long face lengths is " + std::to_string(rest) + ", not a multiple of 3";
        return res;
    }
    const long long faces = rest / 3 + static_cast<long long>(spec.shape.long_faces.size());
    const long long chi = g.vertex_count() - g.edge_count() + faces;
    if (chi > 2) {
        res.status = SearchStatus::impossible;
        res.reason = "Euler characteristic would be " + std::to_string(chi);
        return res;
    }
    if (spec.orientable_only && chi % 2 != 0) {
        res.status = SearchStatus::impossible;
        res.reason = "Euler characteristic " + std::to_string(chi) + " is odd, so the surface is nonorientable";
        return res;
    }
    return Searcher(spec).run();
}

// ---------------------------------------------------------------------------
// SRC text

SearchSpec parse_search_spec(const std::string& text)
{
    SearchSpec spec;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_graph = false;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        if (line[first] == '#') {
            spec.comments.push_back(line);
            continue;
        }
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest;
        std::getline(ls, rest);
        rest.erase(0, rest.find_first_not_of(" \t"));
        while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\t'))
            rest.pop_back();
        try {
            if (key == "graph") {
                spec.graph_text = rest;
                spec.target = parse_graph_spec(rest);
                have_graph = true;
            } else if (key == "faces") {
                spec.shape = ShapeSpec::parse(rest);
            } else if (key == "orientable") {
                if (rest != "yes" && rest != "no")
                    throw InputError("orientable takes yes or no");
                spec.orientable_only = rest == "yes";
            } else if (key == "nodes") {
                size_t used = 0;
                spec.node_budget = std::stoll(rest, &used);
                if (used != rest.size())
                    throw InputError("bad node budget '" + rest + "'");
            } else if (key == "seconds") {
                size_t used = 0;
                spec.time_budget = std::stod(rest, &used);
                if (used != rest.size())
                    throw InputError("bad time budget '" + rest + "'");
            } else if (key == "anchor") {
                spec.anchor = rest;
            } else if (key == "anchor-rotation") {
                std::istringstream rs(rest);
                std::string v;
                while (rs >> v)
                    spec.anchor_rotation.push_back(v);
            } else {
                throw InputError("unknown key '" + key + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const std::invalid_argument&) {
            throw ParseError(lineno, "bad number in '" + line + "'");
        } catch (const std::out_of_range&) {
            throw ParseError(lineno, "number out of range in '" + line + "'");
        } catch (const InputError& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!have_graph)
        throw ParseError(0, "search spec has no graph line");
    return spec;
}

std::string print_search_spec(const SearchSpec& spec)
{
    std::ostringstream out;
    for (const auto& c : spec.comments)
        out << c << "\n";
    out << "graph " << spec.graph_text << "\n";
    out << "faces " << spec.shape.to_string() << "\n";
    out << "orientable " << (spec.orientable_only ? "yes" : "no") << "\n";
    out << "nodes " << spec.node_budget << "\n";
    out << "seconds " << spec.time_budget << "\n";
    if (spec.anchor)
        out << "anchor " << *spec.anchor << "\n";
    if (!spec.anchor_rotation.empty()) {
        out << "anchor-rotation";
        for (const auto& v : spec.anchor_rotation)
            out << " " << v;
        out << "\n";
    }
    return out.str();
}

}  // namespace rotsys
