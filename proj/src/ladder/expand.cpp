#include "rotsys/ladder.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace rotsys {

bool LadderTemplate::valid(long long s) const
{
    if (group_order.at(s) < 2)
        return false;
    if (!rungs)
        return true;
    if (rungs->parity && ((s % 2) + 2) % 2 != *rungs->parity)
        return false;
    return rungs->count.at(s) >= 0;
}

namespace {

using Code = LadderError::Code;

// Parity union-find with undo, over corner behaviours.
class BehaviorSolver {
public:
    explicit BehaviorSolver(int n) : parent_(n), parity_(n, 0), size_(n, 1) { std::iota(parent_.begin(), parent_.end(), 0); }

    // Requires value(a) xor value(b) == d.
    bool relate(int a, int b, int d)
    {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb)
            return (pa ^ pb) == d;
        if (size_[ra] > size_[rb])
            std::swap(ra, rb);
        parent_[ra] = rb;
        parity_[ra] = pa ^ pb ^ d;
        size_[rb] += size_[ra];
        history_.push_back(ra);
        return true;
    }
    size_t mark() const { return history_.size(); }
    void undo(size_t to)
    {
        while (history_.size() > to) {
            const int r = history_.back();
            history_.pop_back();
            size_[parent_[r]] -= size_[r];
            parent_[r] = r;
            parity_[r] = 0;
        }
    }

private:
    std::pair<int, int> find(int a) const
    {
        int p = 0;
        while (parent_[a] != a) {
            p ^= parity_[a];
            a = parent_[a];
        }
        return {a, p};
    }

    std::vector<int> parent_, parity_, size_;
    std::vector<int> history_;
};

long long mod(long long x, long long n)
{
    return ((x % n) + n) % n;
}

// Sum of fragment currents into v, by the cascade rule for type 1 edges.
long long fragment_excess(const LadderTemplate& t, const std::string& v, long long s, long long n)
{
    long long ex = 0;
    for (const Fragment* f : {&t.left, &t.right})
        for (const auto& e : f->edges) {
            const long long c = e.current.at(s);
            if (e.v == v)
                ex += c;
            if (e.u == v)
                ex += e.type == 1 ? c : -c;
        }
    return mod(ex, n);
}

const FragmentVertex* find_vertex(const LadderTemplate& t, const std::string& name)
{
    for (const Fragment* f : {&t.left, &t.right})
        for (const auto& v : f->vertices)
            if (v.name == name)
                return &v;
    return nullptr;
}

// Chooses the rotation at every ladder vertex so that the corner
// behaviours agree with the attachment flags and with (N6) inside the
// ladder. Vertices are fixed left to right; a wrong choice shows up as a
// parity conflict within a step or two.
void solve_rotations(const LadderTemplate& t, LadderInstance& inst)
{
    int enters = 0, leaves = 0, normal = 0;
    for (const auto& a : t.attach) {
        enters += static_cast<int>(a.enter.size());
        leaves += static_cast<int>(a.leave.size());
        normal += static_cast<int>(std::count(a.enter.begin(), a.enter.end(), Behavior::normal));
    }
    if (enters != 4 || leaves != 4)
        throw LadderError(Code::template_error, "the attachments must list four entering and four leaving traversals");
    if (normal != 1 && normal != 3)
        throw LadderError(Code::template_error,
                          std::to_string(normal) + " traversals enter in normal behaviour; expected 1 or 3");
    const auto& lv = inst.ladder_vertices;
    if (lv.empty())
        return;

    CurrentGraph& cg = inst.cgt.graph;
    Embedding& emb = cg.skeleton;
    const int k = static_cast<int>(lv.size());
    std::map<int, int> slot;  // vertex -> index in lv
    for (int i = 0; i < k; ++i)
        slot[lv[i]] = i;
    std::vector<std::array<int, 3>> base(k);
    for (int i = 0; i < k; ++i) {
        const auto& r = emb.rotation(lv[i]);
        base[i] = {r[0], r[1], r[2]};
    }
    // boundary: ladder-side arc of each horizontal with its flags
    std::map<int, const Attachment*> boundary;
    for (int a = 0; a < 4; ++a) {
        const int e = a < 2 ? inst.left_horizontals[a] : inst.right_horizontals[a - 2];
        boundary[arc_end(e, a < 2 ? 1 : 0)] = &t.attach[a];
    }

    const int zero = 3 * k;
    BehaviorSolver solver(3 * k + 1);
    std::vector<int> bits(k, -1);
    auto order = [&](int i) -> std::array<int, 3> {
        const auto& b = base[i];
        return bits[i] == 0 ? b : std::array<int, 3>{b[0], b[2], b[1]};
    };
    auto position = [&](int i, int arc) {
        const auto o = order(i);
        return static_cast<int>(std::find(o.begin(), o.end(), arc) - o.begin());
    };
    auto corner = [&](int i, int j) { return 3 * i + (j + 3) % 3; };

    // constraints that become decidable once vertex i is fixed
    auto place = [&](int i) {
        const auto o = order(i);
        for (int j = 0; j < 3; ++j) {
            const int arc = o[j];
            if (!solver.relate(corner(i, j - 1), corner(i, j), cg.current[edge_of(arc)] % 2))
                return false;
            const auto b = boundary.find(arc);
            if (b != boundary.end()) {
                for (Behavior beh : b->second->enter)
                    if (!(beh == Behavior::normal ? solver.relate(corner(i, j), zero, 0)
                                                  : solver.relate(corner(i, j - 1), zero, 1)))
                        return false;
                for (Behavior beh : b->second->leave)
                    if (!(beh == Behavior::normal ? solver.relate(corner(i, j - 1), zero, 0)
                                                  : solver.relate(corner(i, j), zero, 1)))
                        return false;
                continue;
            }
            const int other = emb.vertex_of(mate(arc));
            const auto it = slot.find(other);
            if (it == slot.end() || bits[it->second] < 0 || (it->second == i))
                continue;
            const int w = it->second, jy = position(w, mate(arc));
            if (!solver.relate(corner(i, j - 1), corner(w, jy), 0) || !solver.relate(corner(i, j), corner(w, jy - 1), 0))
                return false;
        }
        return true;
    };

    // (N6) leaves the rotation free wherever all three currents are even;
    // those are fixed by requiring every partial circuit to cross the
    // ladder and leave with the recorded behaviour.
    std::vector<std::vector<int>> candidates;
    std::function<void(int)> dfs = [&](int i) {
        if (candidates.size() >= 65536)
            return;
        if (i == k) {
            candidates.push_back(bits);
            return;
        }
        for (int b = 0; b < 2; ++b) {
            const size_t mark = solver.mark();
            bits[i] = b;
            if (place(i))
                dfs(i + 1);
            solver.undo(mark);
            bits[i] = -1;
        }
    };
    dfs(0);

    std::array<int, 4> outer{};
    for (int a = 0; a < 4; ++a) {
        const int e = a < 2 ? inst.left_horizontals[a] : inst.right_horizontals[a - 2];
        outer[a] = arc_end(e, a < 2 ? 0 : 1);
    }
    auto apply = [&](const std::vector<int>& choice) {
        for (int i = 0; i < k; ++i) {
            const auto& b = base[i];
            const std::array<int, 3> o = choice[i] == 0 ? b : std::array<int, 3>{b[0], b[2], b[1]};
            emb.set_rotation(lv[i], {o.begin(), o.end()});
        }
    };
    auto crosses = [&]() {
        std::array<std::vector<Behavior>, 4> exits;
        for (int a = 0; a < 4; ++a)
            for (Behavior beh : t.attach[a].enter) {
                FaceStep st{outer[a], beh == Behavior::reverse};
                int exit = -1;
                for (int guard = 0; exit < 0 && guard <= 6 * k + 6; ++guard) {
                    st = next_step(emb, st);
                    for (int b = 0; b < 4; ++b)
                        if (st.arc == mate(outer[b]))
                            exit = b;
                }
                if (exit < 0 || (exit < 2) == (a < 2))
                    return false;
                exits[exit].push_back(st.reverse ? Behavior::reverse : Behavior::normal);
            }
        for (int a = 0; a < 4; ++a) {
            auto want = t.attach[a].leave;
            std::sort(want.begin(), want.end());
            std::sort(exits[a].begin(), exits[a].end());
            if (want != exits[a])
                return false;
        }
        return true;
    };
    std::vector<int> found;
    int solutions = 0;
    for (const auto& c : candidates) {
        apply(c);
        if (crosses() && ++solutions == 1)
            found = c;
    }
    if (solutions == 0)
        throw LadderError(Code::template_error, "no ladder rotations agree with the attachment behaviours");
    if (solutions > 1)
        throw LadderError(Code::template_error, "the attachment behaviours leave the ladder rotations undetermined");
    apply(found);
}

}  // namespace

LadderInstance expand(const LadderTemplate& t, long long s)
{
    if (!t.valid(s))
        throw LadderError(Code::out_of_range, "s = " + std::to_string(s) + " is outside the template's range");
    if (t.rungs && t.rungs->increment % 2 == 0)
        throw LadderError(Code::even_increment, "rung increment " + std::to_string(t.rungs->increment) +
                                                    " is even; only odd increments are supported");
    const long long n = t.group_order.at(s);
    const long long gmax = t.generator_max.at(s);
    if (gmax < 1 || gmax >= n)
        throw LadderError(Code::out_of_range, "S = {1.." + std::to_string(gmax) + "} does not fit the group");

    LadderInstance inst;
    inst.s = s;
    std::set<std::string> names;
    int next_id = 0;
    for (const Fragment* f : {&t.left, &t.right}) {
        for (const auto& v : f->vertices)
            names.insert(v.name);
        for (const auto& e : f->edges)
            next_id = std::max(next_id, e.id + 1);
    }

    // ladder edges: (u, v, current) with ids from next_id
    struct LEdge {
        std::string u, v;
        long long current;
    };
    std::vector<LEdge> ladder;
    std::vector<std::string> lnames;
    long long m = 0;
    if (t.rungs) {
        m = t.rungs->count.at(s);
        for (const auto& a : t.attach) {
            const FragmentVertex* fv = find_vertex(t, a.vertex);
            if (!fv || std::count(fv->rotation.begin(), fv->rotation.end(), "ladder") != 1)
                throw LadderError(Code::template_error,
                                  "attachment vertex '" + a.vertex + "' needs exactly one 'ladder' end");
        }
        for (long long i = 1; i <= m; ++i)
            for (const std::string p : {"t", "b"}) {
                const std::string name = p + std::to_string(i);
                if (names.count(name))
                    throw LadderError(Code::template_error, "fragment vertex name '" + name + "' clashes with the ladder");
                lnames.push_back(name);
            }
        long long top = fragment_excess(t, t.attach[0].vertex, s, n);
        long long bottom = fragment_excess(t, t.attach[1].vertex, s, n);
        std::string tprev = t.attach[0].vertex, bprev = t.attach[1].vertex;
        for (long long i = 0; i < m; ++i) {
            const std::string tv = "t" + std::to_string(i + 1), bv = "b" + std::to_string(i + 1);
            const long long r = mod(t.rungs->first.at(s) + i * t.rungs->increment, n);
            ladder.push_back({tprev, tv, top});
            ladder.push_back({bprev, bv, bottom});
            if (i % 2 == 0) {
                ladder.push_back({tv, bv, r});
                top = mod(top - r, n);
                bottom = mod(bottom + r, n);
            } else {
                ladder.push_back({bv, tv, r});
                top = mod(top + r, n);
                bottom = mod(bottom - r, n);
            }
            tprev = tv;
            bprev = bv;
        }
        ladder.push_back({tprev, t.attach[2].vertex, top});
        ladder.push_back({bprev, t.attach[3].vertex, bottom});
        for (int k : {2, 3})
            if (mod(fragment_excess(t, t.attach[k].vertex, s, n) + (k == 2 ? top : bottom), n) != 0)
                throw LadderError(Code::template_error, "KCL fails at " + t.attach[k].vertex + " for s = " +
                                                            std::to_string(s) + ": the fragments do not balance");
    }

    // pairs {c, -c} must not repeat when every pair is used once
    if (t.kind == CurrentKind::index1 || t.kind == CurrentKind::cascade) {
        std::map<long long, std::string> seen;
        auto claim = [&](long long c, const std::string& where) {
            c = mod(c, n);
            const long long p = std::min(c, n - c);
            if (p == 0)
                throw LadderError(Code::collision, "zero current on " + where);
            auto [it, fresh] = seen.emplace(p, where);
            if (!fresh)
                throw LadderError(Code::collision, "current " + std::to_string(p) + " appears on " + it->second +
                                                       " and on " + where + " for s = " + std::to_string(s));
        };
        for (const Fragment* f : {&t.left, &t.right})
            for (const auto& e : f->edges)
                claim(e.current.at(s), "edge " + std::to_string(e.id));
        for (const auto& e : ladder)
            claim(e.current, e.u + "-" + e.v);
    }

    // CGT text: fragment vertices, ladder vertices, fragment edges, ladder edges
    const int first_ladder_id = next_id;
    auto ladder_id = [&](size_t k) { return first_ladder_id + static_cast<int>(k); };
    std::map<std::string, std::vector<std::string>> ladder_ends;  // ladder vertex -> [left, right, rung]
    std::map<std::string, std::string> attach_end;                // fragment vertex -> token
    for (size_t k = 0; k < ladder.size(); ++k) {
        const std::string id = std::to_string(ladder_id(k));
        const LEdge& e = ladder[k];
        const bool rung = k + 2 < ladder.size() && k % 3 == 2;
        for (auto [name, tok] : {std::pair{e.u, id + "+"}, std::pair{e.v, id + "-"}}) {
            if (!names.count(name)) {
                auto& ends = ladder_ends[name];
                ends.resize(3);
                if (rung)
                    ends[2] = tok;
                else
                    ends[name == e.v ? 0 : 1] = tok;
            } else {
                attach_end[name] = tok;
            }
        }
    }
    std::string text = "group " + std::to_string(n) + "\nkind " + to_string(t.kind) + "\nS = {";
    for (long long g = 1; g <= gmax; ++g)
        text += (g > 1 ? "," : "") + std::to_string(g);
    text += "}\n";
    for (const Fragment* f : {&t.left, &t.right})
        for (const auto& v : f->vertices) {
            text += "v " + v.name + " rot:";
            for (const auto& tok : v.rotation)
                text += " " + (tok == "ladder" ? attach_end.at(v.name) : tok);
            text += std::string(" orient: ") + (v.reversed ? "-" : "+") + "\n";
        }
    for (const auto& name : lnames) {
        const auto& ends = ladder_ends.at(name);
        text += "v " + name + " rot: " + ends[0] + " " + ends[1] + " " + ends[2] + " orient: +\n";
    }
    for (const Fragment* f : {&t.left, &t.right})
        for (const auto& e : f->edges)
            text += "e " + std::to_string(e.id) + " " + e.u + " " + e.v + " current " +
                    std::to_string(mod(e.current.at(s), n)) + " type " + std::to_string(e.type) + "\n";
    for (size_t k = 0; k < ladder.size(); ++k)
        text += "e " + std::to_string(ladder_id(k)) + " " + ladder[k].u + " " + ladder[k].v + " current " +
                std::to_string(ladder[k].current) + " type 0\n";
    try {
        inst.cgt = parse_cgt(text);
    } catch (const ParseError& e) {
        throw LadderError(Code::template_error, std::string("fragments do not form a current graph: ") + e.what());
    }
    inst.cgt.comments = t.comments;
    if (!t.rungs)
        return inst;

    const Graph& g = inst.cgt.graph.skeleton.graph();
    for (const auto& name : lnames)
        inst.ladder_vertices.push_back(*g.find(name));
    const int first_edge = g.edge_count() - static_cast<int>(ladder.size());
    for (size_t k = 0; k < ladder.size(); ++k)
        inst.ladder_edges.push_back(first_edge + static_cast<int>(k));
    inst.left_horizontals = {inst.ladder_edges[0], inst.ladder_edges[1]};
    inst.right_horizontals = {inst.ladder_edges[ladder.size() - 2], inst.ladder_edges[ladder.size() - 1]};
    solve_rotations(t, inst);
    return inst;
}

}  // namespace rotsys
