#include "rotsys/ladder.hpp"

#include <map>
#include <regex>
#include <set>
#include <sstream>

namespace rotsys {

Affine Affine::parse(const std::string& text)
{
    static const std::regex with_s(R"(([+-]?)(\d*)s(?:([+-])(\d+))?)");
    static const std::regex plain(R"([+-]?\d+)");
    std::smatch m;
    try {
        if (std::regex_match(text, m, with_s)) {
            Affine f;
            f.a = m[2].length() ? std::stoll(m[2]) : 1;
            if (m[1] == "-")
                f.a = -f.a;
            if (m[3].matched)
                f.b = (m[3] == "-" ? -1 : 1) * std::stoll(m[4]);
            return f;
        }
        if (std::regex_match(text, plain))
            return {0, std::stoll(text)};
    } catch (const std::out_of_range&) {
    }
    throw InputError("expected a value like 2s+1, found '" + text + "'");
}

std::string Affine::str() const
{
    if (a == 0)
        return std::to_string(b);
    std::string out = a == 1 ? "s" : a == -1 ? "-s" : std::to_string(a) + "s";
    if (b > 0)
        out += "+" + std::to_string(b);
    else if (b < 0)
        out += std::to_string(b);
    return out;
}

namespace {

const std::array<std::string, 4> end_names{"left-top", "left-bottom", "right-top", "right-bottom"};

std::vector<std::string> words(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> w;
    std::string t;
    while (in >> t)
        w.push_back(t);
    return w;
}

std::vector<Behavior> parse_behaviors(const std::string& list)
{
    std::vector<Behavior> out;
    std::istringstream in(list);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok == "normal")
            out.push_back(Behavior::normal);
        else if (tok == "reverse")
            out.push_back(Behavior::reverse);
        else
            throw InputError("behaviour must be normal or reverse, found '" + tok + "'");
    }
    return out;
}

std::string format_behaviors(const std::vector<Behavior>& bs)
{
    std::string out;
    for (size_t i = 0; i < bs.size(); ++i)
        out += std::string(i ? "," : "") + (bs[i] == Behavior::normal ? "normal" : "reverse");
    return out;
}

// "key=value," pieces of the rungs line
std::map<std::string, std::string> key_values(const std::vector<std::string>& w, size_t from)
{
    std::map<std::string, std::string> kv;
    for (size_t i = from; i < w.size(); ++i) {
        std::string tok = w[i];
        if (!tok.empty() && tok.back() == ',')
            tok.pop_back();
        const auto eq = tok.find('=');
        if (eq == std::string::npos || kv.count(tok.substr(0, eq)))
            throw InputError("expected key=value, found '" + w[i] + "'");
        kv[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return kv;
}

int parse_small(const std::string& tok)
{
    const Affine f = Affine::parse(tok);
    if (f.a != 0)
        throw InputError("expected an integer, found '" + tok + "'");
    return static_cast<int>(f.b);
}

std::string fragment_text(const Fragment& f)
{
    std::string out;
    for (const auto& v : f.vertices) {
        out += "v " + v.name + " rot:";
        for (const auto& t : v.rotation)
            out += " " + t;
        out += std::string(" orient: ") + (v.reversed ? "-" : "+") + "\n";
    }
    for (const auto& e : f.edges)
        out += "e " + std::to_string(e.id) + " " + e.u + " " + e.v + " current " + e.current.str() + " type " +
               std::to_string(e.type) + "\n";
    return out;
}

}  // namespace

LadderTemplate parse_ladder_template(const std::string& text)
{
    LadderTemplate t;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_group = false, have_kind = false, have_s = false, body = false;
    int attached = 0;
    Fragment* section = nullptr;
    std::set<std::string> seen_ends;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        if (line[0] == '#') {
            if (body)
                throw ParseError(lineno, "comments are only allowed at the top");
            t.comments.push_back(line);
            continue;
        }
        body = true;
        const auto w = words(line);
        const std::string& key = w[0];
        try {
            if (key == "group" && w.size() == 2) {
                t.group_order = Affine::parse(w[1]);
                have_group = true;
            } else if (key == "kind" && w.size() == 2) {
                t.kind = parse_kind(w[1]);
                have_kind = true;
            } else if (key == "S" && w.size() == 3 && w[1] == "=" && w[2].rfind("1..", 0) == 0) {
                t.generator_max = Affine::parse(w[2].substr(3));
                have_s = true;
            } else if (key == "target" && w.size() == 3) {
                t.target = parse_family(w[1]);
                t.target_vertices = Affine::parse(w[2]);
            } else if (key == "rungs:" && !t.rungs) {
                const auto kv = key_values(w, 1);
                if (kv.size() != 4 || !kv.count("first") || !kv.count("inc") || !kv.count("count") || !kv.count("parity"))
                    throw InputError("rungs needs first=, inc=, count= and parity=");
                RungSpec r;
                r.first = Affine::parse(kv.at("first"));
                r.increment = parse_small(kv.at("inc"));
                r.count = Affine::parse(kv.at("count"));
                const std::string& p = kv.at("parity");
                if (p == "even")
                    r.parity = 0;
                else if (p == "odd")
                    r.parity = 1;
                else if (p != "both")
                    throw InputError("parity must be even, odd or both");
                t.rungs = r;
            } else if (key == "attach:" && w.size() >= 3) {
                Attachment a;
                a.end = w[1];
                a.vertex = w[2];
                size_t idx = 0;
                while (idx < 4 && end_names[idx] != a.end)
                    ++idx;
                if (idx == 4 || seen_ends.count(a.end))
                    throw InputError("attachment end must be one of left-top, left-bottom, right-top, right-bottom, once each");
                seen_ends.insert(a.end);
                const auto kv = key_values(w, 3);
                for (const auto& [k, v] : kv) {
                    if (k == "enter")
                        a.enter = parse_behaviors(v);
                    else if (k == "leave")
                        a.leave = parse_behaviors(v);
                    else
                        throw InputError("attachment flags are enter= and leave=");
                }
                t.attach[idx] = a;
                ++attached;
            } else if ((key == "left" || key == "right") && w.size() == 1) {
                section = key == "left" ? &t.left : &t.right;
            } else if (key == "v" && w.size() >= 5 && w[2] == "rot:" && w[w.size() - 2] == "orient:") {
                if (!section)
                    throw InputError("vertex outside a 'left' or 'right' section");
                const std::string& o = w.back();
                if (o != "+" && o != "-")
                    throw InputError("orient must be + or -");
                section->vertices.push_back({w[1], {w.begin() + 3, w.end() - 2}, o == "-"});
            } else if (key == "e" && w.size() == 8 && w[4] == "current" && w[6] == "type") {
                if (!section)
                    throw InputError("edge outside a 'left' or 'right' section");
                const int type = parse_small(w[7]);
                if (type != 0 && type != 1)
                    throw InputError("edge type must be 0 or 1");
                section->edges.push_back({parse_small(w[1]), w[2], w[3], Affine::parse(w[5]), type});
            } else {
                throw InputError("unrecognised line '" + line + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const InputError& e) {
            throw ParseError(lineno, e.what());
        }
    }
    if (!have_group || !have_kind || !have_s)
        throw ParseError(0, "LDR file needs 'group', 'kind' and 'S' lines");
    if (t.rungs && attached != 4)
        throw ParseError(0, "a ladder needs all four attach: lines");
    if (!t.rungs && attached != 0)
        throw ParseError(0, "attach: lines need a rungs: line");
    return t;
}

std::string print_ladder_template(const LadderTemplate& t)
{
    std::string out;
    for (const auto& c : t.comments)
        out += c + "\n";
    out += "group " + t.group_order.str() + "\n";
    out += "kind " + to_string(t.kind) + "\n";
    out += "S = 1.." + t.generator_max.str() + "\n";
    if (t.target) {
        static const std::map<Family, std::string> names{
            {Family::complete, "complete"}, {Family::octahedral, "octahedral"}, {Family::ham_complement, "ham_complement"}};
        out += "target " + names.at(*t.target) + " " + t.target_vertices.str() + "\n";
    }
    if (t.rungs) {
        const RungSpec& r = *t.rungs;
        out += "rungs: first=" + r.first.str() + ", inc=" + std::to_string(r.increment) + ", count=" + r.count.str() +
               ", parity=" + (!r.parity ? "both" : *r.parity == 0 ? "even" : "odd") + "\n";
        for (const auto& a : t.attach) {
            out += "attach: " + a.end + " " + a.vertex;
            if (!a.enter.empty())
                out += " enter=" + format_behaviors(a.enter);
            if (!a.leave.empty())
                out += " leave=" + format_behaviors(a.leave);
            out += "\n";
        }
    }
    if (!t.left.vertices.empty() || !t.left.edges.empty())
        out += "left\n" + fragment_text(t.left);
    if (!t.right.vertices.empty() || !t.right.edges.empty())
        out += "right\n" + fragment_text(t.right);
    return out;
}

}  // namespace rotsys
