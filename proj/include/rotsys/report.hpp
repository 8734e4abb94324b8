#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rotsys/faces.hpp"

namespace rotsys {

/// Ordered "key=value" lines plus an overall verdict.
class Report {
public:
    void add(const std::string& key, const std::string& value) { items_.emplace_back(key, value); }
    void add(const std::string& key, long long value) { add(key, std::to_string(value)); }
    void add(const std::string& key, bool value) { add(key, std::string(value ? "true" : "false")); }
    void add(const std::string& key, const char* value) { add(key, std::string(value)); }
    /// Records a named check; any failing check fails the report.
    void check(const std::string& name, bool ok, const std::string& detail = {});
    void merge(const Report& other, const std::string& prefix = {});

    bool pass() const { return pass_; }
    const std::vector<std::pair<std::string, std::string>>& items() const { return items_; }
    std::optional<std::string> get(const std::string& key) const;
    std::string to_text() const;

private:
    std::vector<std::pair<std::string, std::string>> items_;
    bool pass_ = true;
};

std::string histogram_to_string(const std::map<int, int>& hist);

/// Face count, histogram, Euler characteristic, orientability and genus.
Report describe_surface(const Embedding& emb, const FaceSet& faces);

/// Claims a verification may be asked to confirm.
struct SurfaceClaims {
    std::optional<Graph> graph;
    std::optional<int> genus;
    std::optional<bool> orientable;
    std::optional<ShapeSpec> shape;
};

Report verify_embedding(const Embedding& emb, const SurfaceClaims& claims);

}  // namespace rotsys
