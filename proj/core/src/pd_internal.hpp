#pragma once

#include <vector>

#include "connord/pd.hpp"

namespace connord::detail {

PDCode relabel_arcs(const PDCode& pd);
PDCode drop_crossings(const PDCode& pd, const std::vector<bool>& removed);

}  // namespace connord::detail
