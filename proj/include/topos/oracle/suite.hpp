#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "topos/oracle/model_io.hpp"

namespace topos::oracle {

struct CheckResult {
    std::string suite;
    std::string id;
    std::string scope;   // what was swept
    bool pass = true;
    size_t cases = 0;    // models, tuples or scenes examined
    std::string detail;  // first counterexample or summary
    double seconds = 0;
};

struct SuiteOptions {
    int max_points = 5;     // Alexandrov spaces 1..max_points
    int interval_max = 8;   // Allen endpoints
    int line_len = 6;       // metric-line domain
    int angle_step = 15;
    int metric_scenes = 1000;
    int angle_scenes = 200;
    uint64_t seed = 20240601;
    std::vector<NamedSpace> extra_spaces;  // from .model files
};

// alexandrov, cellbox, allen, distance, direction, embedding; geometry = all but
// embedding; all = everything.
const std::vector<std::string>& suite_names();
std::vector<CheckResult> run_suite(const std::string& name, const SuiteOptions& opts = {});

// Engine soundness against the concrete models.
struct EmbedReport {
    size_t scenes = 0;
    size_t literals = 0;     // entailed or refuted literals compared
    size_t asserted = 0;
    std::vector<std::string> violations;
};
EmbedReport embed_metric_scenes(int count, uint64_t seed);
EmbedReport embed_angle_scenes(int count, uint64_t seed, int step = 15);

nlohmann::json results_json(const std::vector<CheckResult>& rs);

}  // namespace topos::oracle
