#pragma once

#include <string>
#include <vector>

namespace racg {

// Isomorphism certificate of a small graph with a multiset of marked vertex
// subsets: two inputs get the same string iff some vertex bijection carries
// edges to edges and marks to marks. Exhaustive search; meant for rigid
// pieces with a handful of vertices.
std::string canonical_certificate(int n, const std::vector<std::vector<char>>& adj,
                                  const std::vector<std::vector<int>>& marks);

}  // namespace racg
