#pragma once

#include <string>
#include <vector>

#include "uhs/builder.hpp"
#include "uhs/discretize.hpp"
#include "uhs/distance_sets.hpp"
#include "uhs/hedgehog.hpp"
#include "uhs/metric.hpp"
#include "uhs/ramsey.hpp"

namespace uhs::io {

// All rationals cross the disk boundary as lowest-term "p/q" strings.

std::string metric_space_to_json(const FiniteMetricSpace& x);
FiniteMetricSpace metric_space_from_json(const std::string& text);

std::string approx_space_to_json(const ApproxSpace& x);
ApproxSpace approx_space_from_json(const std::string& text);

std::string step_functions_to_json(const StepFunctionSpace& s);

std::string hedgehog_to_json(const HedgehogGraph& g);

std::vector<FiniteMetricSpace> targets_from_json(const std::string& text);

std::string classification_to_csv(const ClassificationReport& r);
std::string classification_to_json(const ClassificationReport& r);

std::string cycle_census_to_csv(const HedgehogGraph& g, const CycleCensus& census);

std::string cover_report_to_csv(const DenseCopyResult& r);

std::string experiment_to_csv(const std::vector<ExperimentRow>& rows);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace uhs::io
