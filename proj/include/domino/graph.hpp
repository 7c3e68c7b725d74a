#pragma once

#include <vector>

namespace domino {

using Digraph = std::vector<std::vector<int>>;

// Strongly connected components; component ids are numbered by their least vertex.
std::vector<int> strongly_connected_components(const Digraph& g, int* count = nullptr);

}  // namespace domino
