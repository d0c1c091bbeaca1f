#pragma once

#include <string>
#include <vector>

#include "fedlab/fed.hpp"

namespace fedlab {

/// "z8", "c10k2", "petersen", "kneser(6)" .. "kneser(9)".
std::vector<std::string> fixture_names();
StrategyCertificate load_fixture(const std::string& name);
Graph fixture_graph(const std::string& name);

}  // namespace fedlab
