#include "rotsys/derive.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rotsys {

namespace {

using Row = std::vector<LogEntry>;

std::vector<Row> additive_rows(const std::vector<Log>& logs, const CurrentGroup& group, CurrentKind kind,
                               const LetterPairs& pairs)
{
    const int index = declared_index(kind);
    if (static_cast<int>(logs.size()) != index)
        throw InputError(to_string(kind) + " derivation needs " + std::to_string(index) + " log(s), got " +
                         std::to_string(logs.size()));
    if (group.order() % index != 0)
        throw InputError("group order " + std::to_string(group.order()) + " is not a multiple of the index");
    std::map<std::string, std::string> swap;
    for (const auto& [a, b] : pairs) {
        swap[a] = b;
        swap[b] = a;
    }
    std::vector<Row> rows(group.order());
    for (int k = 0; k < group.order(); ++k) {
        Row row = logs[k % index];
        const bool flipped = kind == CurrentKind::cascade && k % 2 == 1;
        if (flipped)
            std::reverse(row.begin(), row.end());
        for (auto& e : row) {
            if (!e.is_letter())
                e.value = group.add(e.value, k);
            else if (flipped && swap.count(e.letter))
                e.letter = swap[e.letter];
        }
        rows[k] = std::move(row);
    }
    return rows;
}

int arc_towards(const Embedding& emb, int v, int w)
{
    for (int a : emb.rotation(v))
        if (emb.head_of(a) == w)
            return a;
    throw DerivationError("vertex " + emb.graph().name(v) + " has no neighbour " + emb.graph().name(w));
}

}  // namespace

Derivation derive(const std::vector<Log>& logs, const CurrentGroup& group, CurrentKind kind,
                  const LetterPairs& pairs, const std::vector<VortexInfo>& vortices)
{
    const std::vector<Row> rows = additive_rows(logs, group, kind, pairs);
    const int n = group.order();

    std::vector<std::string> names;
    std::vector<std::vector<std::string>> numeric_rows(n);
    std::set<std::string> letters;
    for (int k = 0; k < n; ++k) {
        names.push_back(std::to_string(k));
        for (const auto& e : rows[k])
            if (e.is_letter())
                letters.insert(e.letter);
            else
                numeric_rows[k].push_back(std::to_string(e.value));
    }

    Derivation out;
    try {
        out.unsubdivided = embedding_from_rows(names, numeric_rows);
    } catch (const InputError& e) {
        throw DerivationError(std::string("derived rows do not form a rotation system: ") + e.what());
    }
    Embedding& base = out.unsubdivided;

    // letters mark corners between their numeric neighbours in each row
    for (int k = 0; k < n; ++k) {
        const Row& row = rows[k];
        const size_t len = row.size();
        for (size_t i = 0; i < len; ++i) {
            if (!row[i].is_letter())
                continue;
            const LogEntry& prev = row[(i + len - 1) % len];
            const LogEntry& next = row[(i + 1) % len];
            if (prev.is_letter() || next.is_letter())
                throw DerivationError("row " + std::to_string(k) + " has adjacent letters");
            base.set_corner_label({arc_towards(base, k, prev.value), arc_towards(base, k, next.value)},
                                  row[i].letter);
        }
    }

    std::map<std::string, int> predicted;
    for (const auto& v : vortices)
        for (const auto& lf : predicted_vortex_faces(v, group, kind))
            for (const auto& l : lf.labels)
                predicted[l] = lf.length;

    const FaceSet fs = trace_faces(base);
    const auto& labels = base.corner_labels();
    std::map<std::string, std::vector<std::string>> letter_rows;
    for (const auto& letter : letters) {
        int corners = 0;
        for (const auto& [c, l] : labels)
            corners += l == letter;
        const Face* face = nullptr;
        for (const auto& f : fs.faces)
            for (size_t i = 0; i < f.steps.size() && !face; ++i)
                if (auto it = labels.find(step_corner(f, i)); it != labels.end() && it->second == letter)
                    face = &f;
        bool closed = face && face->length() == corners;
        for (size_t i = 0; closed && i < face->steps.size(); ++i) {
            auto it = labels.find(step_corner(*face, i));
            closed = it != labels.end() && it->second == letter;
        }
        if (!closed)
            throw DerivationError("letter " + letter + " does not close a face" +
                                  (face ? ": " + face_to_string(base, *face) : std::string()));
        if (auto it = predicted.find(letter); it != predicted.end() && it->second != face->length())
            throw DerivationError("face " + face_to_string(base, *face) + " of letter " + letter + " has length " +
                                  std::to_string(face->length()) + ", predicted " + std::to_string(it->second));

        // the new vertex sees the face boundary the other way round
        std::vector<int> vs = face->vertices(base);
        std::reverse(vs.begin(), vs.end());
        std::rotate(vs.begin(), std::min_element(vs.begin(), vs.end()), vs.end());
        for (int v : vs)
            letter_rows[letter].push_back(std::to_string(v));
    }

    std::vector<std::vector<std::string>> full(n);
    for (int k = 0; k < n; ++k)
        for (const auto& e : rows[k])
            full[k].push_back(e.is_letter() ? e.letter : std::to_string(e.value));
    for (auto& [letter, row] : letter_rows) {
        names.push_back(letter);
        full.push_back(row);
    }
    try {
        out.embedding = embedding_from_rows(names, full);
    } catch (const InputError& e) {
        throw DerivationError(std::string("subdivision failed: ") + e.what());
    }
    return out;
}

Embedding derive_index2(const std::vector<Log>& logs, const CurrentGroup& group,
                        const std::vector<VortexInfo>& vortices)
{
    return derive(logs, group, CurrentKind::index2, {}, vortices).embedding;
}

Embedding derive_cascade(const Log& log, const CurrentGroup& group, const LetterPairs& pairs,
                         const std::vector<VortexInfo>& vortices)
{
    return derive({log}, group, CurrentKind::cascade, pairs, vortices).embedding;
}

Embedding derive_index4(const std::vector<Log>& logs, const CurrentGroup& group)
{
    return derive(logs, group, CurrentKind::index4).embedding;
}

Derivation derive(const CurrentGraph& cg)
{
    const auto circuits = compute_circuits(cg);
    if (static_cast<int>(circuits.size()) != declared_index(cg.kind))
        throw DerivationError("current graph has " + std::to_string(circuits.size()) + " circuits, " +
                              to_string(cg.kind) + " needs " + std::to_string(declared_index(cg.kind)));
    std::vector<Log> logs;
    for (const auto& c : circuits)
        logs.push_back(log_of(cg, c));

    // letters as they appear in the logs
    std::map<std::string, std::string> written;
    const bool subscript = cg.kind == CurrentKind::index2 || cg.kind == CurrentKind::index4;
    const auto& labels = cg.skeleton.corner_labels();
    for (const auto& c : circuits)
        for (size_t i = 0; i < c.face.steps.size(); ++i)
            if (auto it = labels.find(step_corner(c.face, i)); it != labels.end())
                written[it->second] = it->second + (subscript ? std::to_string(c.label) : "");

    LetterPairs pairs;
    std::vector<VortexInfo> vortices;
    for (auto v : classify_vortices(cg)) {
        for (auto& l : v.letters)
            if (written.count(l))
                l = written[l];
        if (v.kind == VortexKind::V1 && v.letters.size() == 2)
            pairs.emplace_back(v.letters[0], v.letters[1]);
        vortices.push_back(v);
    }
    return derive(logs, cg.group, cg.kind, pairs, vortices);
}

std::vector<Log> extract_logs(const Embedding& emb, int index)
{
    const Graph& g = emb.graph();
    int n = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        n += is_numeric_name(g.name(v));
    if (n == 0 || index < 1 || n % index != 0)
        throw DerivationError("cannot read index " + std::to_string(index) + " logs from " + std::to_string(n) +
                              " group-element vertices");
    const CurrentGroup group(n);
    auto row_of = [&](int k) {
        const auto v = g.find(std::to_string(k));
        if (!v)
            throw DerivationError("vertex " + std::to_string(k) + " is missing");
        Log row;
        for (const auto& name : emb.neighbor_row(*v))
            row.push_back(is_numeric_name(name) ? LogEntry{group.normalize(std::stoll(name)), {}}
                                                : LogEntry{0, name});
        return row;
    };

    std::vector<Log> logs;
    for (int j = 0; j < index; ++j) {
        Log l = row_of(j);
        for (auto& e : l)
            if (!e.is_letter())
                e.value = group.add(e.value, -j);
        logs.push_back(std::move(l));
    }
    for (int k = index; k < n; ++k) {
        Log expected = logs[k % index];
        for (auto& e : expected)
            if (!e.is_letter())
                e.value = group.add(e.value, k);
        const Log actual = row_of(k);
        if (same_cyclic(expected, actual))
            continue;
        // align on the first entry where possible to name the break
        size_t shift = 0;
        for (size_t s = 0; s < expected.size(); ++s)
            if (!actual.empty() && expected[s] == actual[0]) {
                shift = s;
                break;
            }
        size_t pos = 0;
        while (pos < actual.size() && pos < expected.size() && actual[pos] == expected[(pos + shift) % expected.size()])
            ++pos;
        auto show = [](const Log& l, size_t i) { return i < l.size() ? format_log({l[i]}) : std::string("nothing"); };
        throw DerivationError("row " + std::to_string(k) + " position " + std::to_string(pos) + ": expected " +
                              show(expected, expected.empty() ? 0 : (pos + shift) % expected.size()) + ", found " +
                              show(actual, pos));
    }
    return logs;
}

}  // namespace rotsys
