#pragma once

#include <string>
#include <vector>

#include "fedlab/fed.hpp"

namespace fedlab {

struct HypercubeRow {
  int d;
  std::string domination;  // known value, or a bracket for d = 10
  ClosedForm fed;
};

/// Rows d = 1..max_d; domination numbers are only known up to d = 10.
std::vector<HypercubeRow> hypercube_table(int max_d);
/// "[lo, hi]", "(lo, hi]" or the exact value.
std::string interval_text(const ClosedForm& c);
/// Tab separated, with a header line.
std::string format_hypercube_table(const std::vector<HypercubeRow>& rows);

}  // namespace fedlab
