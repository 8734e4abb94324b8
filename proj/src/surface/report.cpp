#include "rotsys/report.hpp"

namespace rotsys {

void Report::check(const std::string& name, bool ok, const std::string& detail)
{
    add("check." + name, std::string(ok ? "pass" : "fail") + (detail.empty() ? "" : " (" + detail + ")"));
    pass_ = pass_ && ok;
}

void Report::merge(const Report& other, const std::string& prefix)
{
    for (const auto& [k, v] : other.items_)
        items_.emplace_back(prefix + k, v);
    pass_ = pass_ && other.pass_;
}

std::optional<std::string> Report::get(const std::string& key) const
{
    for (const auto& [k, v] : items_)
        if (k == key)
            return v;
    return std::nullopt;
}

std::string Report::to_text() const
{
    std::string out;
    for (const auto& [k, v] : items_)
        out += k + "=" + v + "\n";
    out += std::string("verdict=") + (pass_ ? "pass" : "fail") + "\n";
    return out;
}

std::string histogram_to_string(const std::map<int, int>& hist)
{
    std::string s;
    for (const auto& [len, count] : hist)
        s += (s.empty() ? "" : ",") + std::to_string(len) + ":" + std::to_string(count);
    return s;
}

Report describe_surface(const Embedding& emb, const FaceSet& faces)
{
    Report r;
    r.add("vertices", static_cast<long long>(emb.vertex_count()));
    r.add("edges", static_cast<long long>(emb.edge_count()));
    r.add("faces", static_cast<long long>(faces.count()));
    r.add("face_lengths", histogram_to_string(faces.length_histogram()));
    const SurfaceClass sc = classify_surface(emb, faces);
    r.add("euler_characteristic", static_cast<long long>(sc.euler_characteristic));
    r.add("orientable", sc.orientable);
    r.add("genus", static_cast<long long>(sc.genus));
    return r;
}

Report verify_embedding(const Embedding& emb, const SurfaceClaims& claims)
{
    const FaceSet faces = trace_faces(emb);
    Report r = describe_surface(emb, faces);
    const SurfaceClass sc = classify_surface(emb, faces);
    if (claims.graph) {
        const bool same = same_graph(emb.graph(), *claims.graph);
        r.add("graph_identity", same);
        r.check("graph", same);
    }
    if (claims.orientable)
        r.check("orientable", sc.orientable == *claims.orientable);
    if (claims.genus)
        r.check("genus", sc.genus == *claims.genus,
                "expected " + std::to_string(*claims.genus) + ", found " + std::to_string(sc.genus));
    if (claims.shape) {
        const ShapeReport sr = check_shape(emb, faces, *claims.shape);
        std::string detail = sr.message;
        for (size_t i = 0; i < sr.offending.size() && i < 5; ++i)
            detail += (detail.empty() ? "" : "; ") + face_to_string(emb, faces.faces[sr.offending[i]]);
        r.check("shape", sr.pass, detail);
    }
    return r;
}

}  // namespace rotsys
