#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rotsys/report.hpp"

namespace rotsys {

/// PIP text: derive a start embedding, run a surgery script, verify.
///
///   # comment
///   name K13
///   start logs/k13.log        (.log, .cgt or .adj, relative to the base dir)
///   script scripts/k13.sur    (optional)
///   target complete(12)+join(x0)
///   genus 8
///   orientable yes
struct PipelineManifest {
    std::vector<std::string> comments;
    std::string name;
    std::string start;
    std::optional<std::string> script;
    std::string target;
    std::optional<int> genus;
    std::optional<bool> orientable;
};

PipelineManifest parse_pipeline(const std::string& text);
std::string print_pipeline(const PipelineManifest& m);

/// Embedding from a file, chosen by extension: ADJ as is, LOG and CGT by
/// derivation.
Embedding load_embedding(const std::string& path);

struct PipelineResult {
    bool pass = false;
    Report report;            // per-stage checks and the chi audit
    std::optional<Embedding> final;
    std::string summary;      // "K13 genus 8"
};

/// Stops at the first failing stage.
PipelineResult run_pipeline(const PipelineManifest& m, const std::string& base_dir);

}  // namespace rotsys
