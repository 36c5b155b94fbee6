#pragma once

#include <string>
#include <vector>

#include "qplab/app/config.hpp"
#include "qplab/app/report.hpp"

namespace qplab::app {

const std::vector<std::string>& command_names();

// Fills in m, q, l from one another for a case and checks the divisibility
// constraints; UsageError otherwise.
RunSpec validate(RunSpec spec);

// Runs one pipeline. Parameter problems raise UsageError; failed checks are
// recorded in the report.
Report dispatch(const RunSpec& spec, const Config& config = {});

}  // namespace qplab::app
