#include "fedlab/tables.hpp"

#include <sstream>

#include "fedlab/error.hpp"
#include "fedlab/generators.hpp"

namespace fedlab {

namespace {

const char* const kCubeDomination[] = {"1", "2", "2", "4", "7", "12", "16", "32", "62", "[107, 120]"};

}  // namespace

std::vector<HypercubeRow> hypercube_table(int max_d) {
  if (max_d < 1) throw Error(ErrorCode::invalid_params, "max d must be positive");
  std::vector<HypercubeRow> rows;
  for (int d = 1; d <= max_d; ++d) {
    auto c = closed_form_fed(hypercube(d));
    rows.push_back({d, d <= 10 ? kCubeDomination[d - 1] : "?", *c});
  }
  return rows;
}

std::string interval_text(const ClosedForm& c) {
  if (c.exact) return to_string(c.lower);
  return std::string(c.lower_open ? "(" : "[") + to_string(c.lower) + ", " + to_string(c.upper) + (c.upper_open ? ")" : "]");
}

std::string format_hypercube_table(const std::vector<HypercubeRow>& rows) {
  std::ostringstream out;
  out << "d\tgamma\tfed\n";
  for (const auto& r : rows) out << r.d << "\t" << r.domination << "\t" << interval_text(r.fed) << "\n";
  return out.str();
}

}  // namespace fedlab
