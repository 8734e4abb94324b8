#include "rotsys/graph.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace rotsys {

int Graph::add_vertex(const std::string& name)
{
    if (name.empty())
        throw InputError("empty vertex name");
    if (index_.count(name))
        throw InputError("duplicate vertex name '" + name + "'");
    const int v = vertex_count();
    names_.push_back(name);
    index_.emplace(name, v);
    return v;
}

int Graph::add_edge(int u, int v)
{
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw InputError("edge endpoint out of range");
    edges_.push_back({u, v});
    return edge_count() - 1;
}

void Graph::remove_edge(int e)
{
    edges_.erase(edges_.begin() + e);
}

void Graph::remove_vertex(int v)
{
    for (const Edge& ed : edges_)
        if (ed.u == v || ed.v == v)
            throw InputError("cannot remove vertex '" + names_[v] + "' with incident edges");
    index_.erase(names_[v]);
    names_.erase(names_.begin() + v);
    for (auto& [name, idx] : index_)
        if (idx > v)
            --idx;
    for (Edge& ed : edges_) {
        if (ed.u > v) --ed.u;
        if (ed.v > v) --ed.v;
    }
}

void Graph::rename_vertex(int v, const std::string& name)
{
    if (names_.at(v) == name)
        return;
    if (index_.count(name))
        throw InputError("duplicate vertex name '" + name + "'");
    index_.erase(names_[v]);
    names_[v] = name;
    index_.emplace(name, v);
}

std::optional<int> Graph::find(const std::string& name) const
{
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

int Graph::index(const std::string& name) const
{
    auto v = find(name);
    if (!v)
        throw InputError("unknown vertex '" + name + "'");
    return *v;
}

std::vector<int> Graph::edges_between(int u, int v) const
{
    std::vector<int> out;
    for (int e = 0; e < edge_count(); ++e) {
        const Edge& ed = edges_[e];
        if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u))
            out.push_back(e);
    }
    return out;
}

std::vector<int> Graph::neighbors(int v) const
{
    std::vector<int> out;
    for (const Edge& ed : edges_) {
        if (ed.u == v) out.push_back(ed.v);
        if (ed.v == v) out.push_back(ed.u);
    }
    return out;
}

int Graph::degree(int v) const
{
    int d = 0;
    for (const Edge& ed : edges_)
        d += (ed.u == v) + (ed.v == v);
    return d;
}

bool Graph::is_simple() const
{
    std::set<std::pair<int, int>> seen;
    for (const Edge& ed : edges_) {
        if (ed.u == ed.v)
            return false;
        if (!seen.insert(std::minmax(ed.u, ed.v)).second)
            return false;
    }
    return true;
}

bool Graph::is_connected() const
{
    const int n = vertex_count();
    if (n == 0)
        return true;
    std::vector<std::vector<int>> adj(n);
    for (const Edge& ed : edges_) {
        adj[ed.u].push_back(ed.v);
        adj[ed.v].push_back(ed.u);
    }
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++count;
                q.push(y);
            }
    }
    return count == n;
}

std::vector<std::pair<std::string, std::string>> Graph::edge_key() const
{
    std::vector<std::pair<std::string, std::string>> key;
    key.reserve(edges_.size());
    for (const Edge& ed : edges_) {
        auto a = names_[ed.u], b = names_[ed.v];
        if (b < a)
            std::swap(a, b);
        key.emplace_back(a, b);
    }
    std::sort(key.begin(), key.end());
    return key;
}

bool is_numeric_name(const std::string& name)
{
    return !name.empty() && std::all_of(name.begin(), name.end(), [](unsigned char c) {
        return std::isdigit(c) != 0;
    });
}

Graph build_circulant(int n, const std::vector<int>& generators)
{
    if (n <= 0)
        throw InputError("circulant order must be positive");
    if (generators.empty())
        throw InputError("circulant generating set is empty");
    std::set<int> gens;
    for (int s : generators) {
        if (s < 1 || s > n / 2)
            throw InputError("circulant generator " + std::to_string(s) + " outside 1.." +
                             std::to_string(n / 2));
        gens.insert(s);
    }
    Graph g;
    for (int i = 0; i < n; ++i)
        g.add_vertex(std::to_string(i));
    for (int u = 0; u < n; ++u)
        for (int s : gens) {
            const int v = (u + s) % n;
            // s == n/2 with n even reaches each antipodal pair from both sides
            if (2 * s == n && v < u)
                continue;
            g.add_edge(u, v);
        }
    return g;
}

static std::vector<int> range_set(int lo, int hi)
{
    std::vector<int> s;
    for (int i = lo; i <= hi; ++i)
        s.push_back(i);
    return s;
}

Graph complete_graph(int n)
{
    if (n == 1) {
        Graph g;
        g.add_vertex("0");
        return g;
    }
    return build_circulant(n, range_set(1, n / 2));
}

Graph octahedral_graph(int vertices)
{
    if (vertices < 4 || vertices % 2 != 0)
        throw InputError("octahedral graph needs an even vertex count >= 4");
    return build_circulant(vertices, range_set(1, vertices / 2 - 1));
}

Graph hamiltonian_complement(int n)
{
    if (n < 4)
        throw InputError("Hamiltonian cycle complement needs n >= 4");
    return build_circulant(n, range_set(2, n / 2));
}

Graph join_with_empty(const Graph& g, const std::vector<std::string>& labels)
{
    Graph out = g;
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (distinct.size() != labels.size())
        throw InputError("join labels are not distinct");
    const int base = g.vertex_count();
    for (const auto& l : labels) {
        if (g.find(l))
            throw InputError("join label '" + l + "' collides with an existing vertex");
        const int x = out.add_vertex(l);
        for (int v = 0; v < base; ++v)
            out.add_edge(v, x);
    }
    return out;
}

bool same_graph(const Graph& a, const Graph& b)
{
    if (a.vertex_count() != b.vertex_count())
        return false;
    std::vector<std::string> na = a.names(), nb = b.names();
    std::sort(na.begin(), na.end());
    std::sort(nb.begin(), nb.end());
    return na == nb && a.edge_key() == b.edge_key();
}

// ---------------------------------------------------------------------------
// graph expressions

namespace {

std::string trim(const std::string& s)
{
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        cur = trim(cur);
        if (!cur.empty())
            out.push_back(cur);
    }
    return out;
}

int to_int(const std::string& s)
{
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size())
            throw InputError("");
        return v;
    } catch (const std::exception&) {
        throw InputError("expected an integer, got '" + s + "'");
    }
}

int numeric_count(const Graph& g)
{
    int n = 0;
    for (const auto& name : g.names())
        n += is_numeric_name(name);
    return n;
}

}  // namespace

int resolve_vertex(const Graph& g, const std::string& token)
{
    if (!token.empty() && token[0] == '-' && token.size() > 1) {
        const int n = numeric_count(g);
        if (n == 0)
            throw InputError("negative reference '" + token + "' without numeric vertices");
        const int k = ((to_int(token) % n) + n) % n;
        return g.index(std::to_string(k));
    }
    return g.index(token);
}

Graph parse_graph_spec(const std::string& text)
{
    // tokenise into (sign, name, args)
    struct Term {
        char sign;
        std::string name;
        std::string args;
    };
    std::vector<Term> terms;
    size_t i = 0;
    const std::string s = trim(text);
    char sign = '+';
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
        if (i >= s.size())
            break;
        if (!terms.empty()) {
            if (s[i] != '+' && s[i] != '-')
                throw InputError("graph spec: expected '+' or '-' at '" + s.substr(i) + "'");
            sign = s[i++];
        }
        size_t open = s.find('(', i);
        if (open == std::string::npos)
            throw InputError("graph spec: missing '(' in '" + s.substr(i) + "'");
        size_t close = s.find(')', open);
        if (close == std::string::npos)
            throw InputError("graph spec: missing ')'");
        terms.push_back({sign, trim(s.substr(i, open - i)), s.substr(open + 1, close - open - 1)});
        i = close + 1;
    }
    if (terms.empty())
        throw InputError("empty graph spec");

    Graph g;
    const Term& base = terms.front();
    if (base.name == "complete") {
        g = complete_graph(to_int(trim(base.args)));
    } else if (base.name == "octahedral") {
        g = octahedral_graph(to_int(trim(base.args)));
    } else if (base.name == "hamcomp") {
        g = hamiltonian_complement(to_int(trim(base.args)));
    } else if (base.name == "circulant") {
        auto parts = split(base.args, ';');
        if (parts.size() != 2)
            throw InputError("circulant(n;s1,s2,...) expected");
        std::vector<int> gens;
        for (const auto& t : split(parts[1], ','))
            gens.push_back(to_int(t));
        g = build_circulant(to_int(parts[0]), gens);
    } else if (base.name == "vertices") {
        for (const auto& t : split(base.args, ','))
            g.add_vertex(t);
    } else {
        throw InputError("graph spec: unknown base '" + base.name + "'");
    }

    for (size_t t = 1; t < terms.size(); ++t) {
        const Term& term = terms[t];
        if (term.name == "join") {
            if (term.sign != '+')
                throw InputError("graph spec: join cannot be subtracted");
            g = join_with_empty(g, split(term.args, ','));
        } else if (term.name == "star") {
            if (term.sign != '+')
                throw InputError("graph spec: star cannot be subtracted");
            auto parts = split(term.args, ';');
            if (parts.size() != 2)
                throw InputError("star(c;a,b,...) expected");
            std::vector<int> targets;
            for (const auto& n : split(parts[1], ','))
                targets.push_back(resolve_vertex(g, n));
            const int c = g.add_vertex(parts[0]);
            for (int v : targets)
                g.add_edge(c, v);
        } else if (term.name == "edges") {
            for (const auto& pair : split(term.args, ',')) {
                // split on the '-' separating the two names; names may
                // themselves start with '-'
                size_t cut = pair.find('-', 1);
                if (cut == std::string::npos)
                    throw InputError("graph spec: edge '" + pair + "' is not u-v");
                const int u = resolve_vertex(g, trim(pair.substr(0, cut)));
                const int v = resolve_vertex(g, trim(pair.substr(cut + 1)));
                auto ids = g.edges_between(u, v);
                if (term.sign == '+') {
                    if (!ids.empty())
                        throw InputError("graph spec: edge " + pair + " already present");
                    g.add_edge(u, v);
                } else {
                    if (ids.empty())
                        throw InputError("graph spec: edge " + pair + " absent");
                    g.remove_edge(ids.front());
                }
            }
        } else {
            throw InputError("graph spec: unknown operation '" + term.name + "'");
        }
    }
    return g;
}

}  // namespace rotsys
