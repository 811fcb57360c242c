// run.hpp — solver dispatch, bundled figure presets, and parameter sweeps.

#pragma once

#include <string>
#include <vector>

#include "qst/config.hpp"
#include "qst/csv.hpp"
#include "qst/dynamics.hpp"

namespace qst {

// Dispatch to the selected solver; no file output.
TimeSeries run_series(const RunConfig& config);

// run_series + CSV written to config.output_path.
TimeSeries run(const RunConfig& config);

// Bundled parameter-study presets, addressed as 3a..8b.
const std::vector<std::string>& preset_ids();
RunConfig figure_preset(const std::string& id); // throws ConfigError on unknown id

// Runs the preset and writes fig<ID>.csv under outdir; returns written paths.
std::vector<std::string> reproduce(const std::string& id, const std::string& outdir);

struct SweepRow {
    double value;
    TransferMetrics metrics;
};

// One row per swept value, in the order of the value list; jobs > 1 runs
// points concurrently, the summary does not depend on scheduling.
std::vector<SweepRow> sweep_rows(const SweepSpec& spec, int jobs = 1);
std::string sweep_summary_csv(const SweepSpec& spec, int jobs = 1);
void sweep(const SweepSpec& spec, int jobs, const std::string& out_path);

} // namespace qst
