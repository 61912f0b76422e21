#pragma once

// Every worked example with a printed answer, grouped by module. Backs
// `mwb verify-all`.

#include <vector>

#include "mwb/report.hpp"

namespace mwb {

std::vector<Report> golden_reports();

}  // namespace mwb
