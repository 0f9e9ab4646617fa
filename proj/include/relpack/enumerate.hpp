#pragma once

#include <vector>

#include "relpack/graph.hpp"

namespace relpack {

// All graphs on exactly n vertices up to isomorphism, as canonical forms,
// sorted by their graph6 encoding. Cached per n; intended for n <= 8.
const std::vector<Graph>& all_graphs(int n);

// The connected ones, same order.
const std::vector<Graph>& all_connected_graphs(int n);

}  // namespace relpack
