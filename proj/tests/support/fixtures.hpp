#pragma once

#include <string>
#include <utility>
#include <vector>

#include "racg/graph.hpp"
#include "racg/jsj.hpp"

namespace fixtures {

racg::DefiningGraph edges(const std::vector<std::pair<std::string, std::string>>& e);

racg::DefiningGraph g2e();     // theta graph, three branches of length 3 between a and b
racg::DefiningGraph gva();     // square a-c1-b-c2 plus a-p1-p2-b
racg::DefiningGraph gva2();    // gva plus a-q1-q2-b
racg::DefiningGraph gstar();   // 8-cycle a,x1,d,x2,b,x3,e,x4 plus centre c on a,b,d,e
racg::DefiningGraph gbad();    // square x-c-y-d plus c-n1-n2-d and x-m1-m2-y
racg::DefiningGraph k23();
racg::DefiningGraph k4();
racg::DefiningGraph cycle(int n);
// K4 with every edge replaced by a path with `inner` interior vertices.
racg::DefiningGraph subdivided_k4(int inner);
// Theta graph whose a,b share one common neighbour c, plus two length-3 branches.
racg::DefiningGraph theta_with_hub();
// K_{2,n} on a,b plus `branches` paths a-pK-qK-b.
racg::DefiningGraph k2n_with_branches(int n, int branches);

// Same graph with vertices renamed and reordered by `perm` (new position -> old vertex).
racg::DefiningGraph relabel(const racg::DefiningGraph& g, const std::vector<int>& perm, const std::string& prefix);

// Every bundled corpus graph that passes level-3 validation, with a name.
std::vector<std::pair<std::string, racg::DefiningGraph>> valid_corpus();

// Hand-built graphs of cylinders shaped like the worked examples of the
// structure invariant: one VA cylinder with one hanging and one rigid
// neighbour, and the same with two hanging neighbours.
racg::GraphOfCylinders single_va_goc(int hanging_neighbours);
// Six cylinders (three bare two-ended, one two-ended with a hanging
// neighbour, two VA), four hanging vertices and one rigid vertex.
racg::GraphOfCylinders refinement_goc();

}  // namespace fixtures
