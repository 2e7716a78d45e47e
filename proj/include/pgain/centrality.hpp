#pragma once

#include "pgain/common.hpp"

#include <map>
#include <string>
#include <vector>

namespace pgain {

/// Per-node scores plus the metadata needed to reproduce them.
struct CentralityVector {
  VectorXd scores;
  std::string metric;
  std::map<std::string, double> params;
  Index iterations_used = 0;
  bool converged = true;
  std::vector<std::string> warnings;

  Index size() const noexcept { return scores.size(); }
};

}  // namespace pgain
