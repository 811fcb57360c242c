// csv.hpp — deterministic CSV emission. Doubles use shortest round-trip
// formatting, so identical runs produce byte-identical files.

#pragma once

#include <string>

#include "qst/config.hpp"
#include "qst/dynamics.hpp"

namespace qst {

std::string format_double(double v);

// Header comment block (embedded canonical config between marker lines,
// plus the derived rad/ns rates), then
// t_ns,sigma_z_1,sigma_z_3,n_1,n_2,n_3[,n_b],p_q1,p_f1,p_f2,p_q3,p_f3[,p_k],norm
std::string series_to_csv(const TimeSeries& series, const RunConfig& config);

// The canonical config document embedded in a CSV header; throws if the
// marker lines are missing.
std::string extract_embedded_config(const std::string& csv_text);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

} // namespace qst
