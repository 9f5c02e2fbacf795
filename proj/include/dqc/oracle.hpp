#pragma once

#include <vector>

#include "dqc/graph.hpp"
#include "dqc/quasi_clique.hpp"

namespace dqc {

// Exhaustive ground truth for small instances. These exist so the heuristics
// have something independent to be judged against; they refuse inputs beyond
// their stated caps instead of silently taking hours.

// Largest α-quasi-clique, ties broken by lexicographically smallest member
// list. Graphs up to 20 vertices.
VertexSet max_quasi_clique_exact(const DynamicGraph& g, double alpha);

// Minimum r ∈ {0,1,2,3} such that removing some r members of s leaves an
// α-quasi-clique; 3 also stands for "three or more". |s| ≤ 15.
int min_repair_exact(const VertexSet& s, const DynamicGraph& g, double alpha);

// True iff every tracked candidate still has density ≥ alpha and caches that
// match a recomputation against g.
bool verify_list(const std::vector<QuasiClique>& list, const DynamicGraph& g, double alpha);

} // namespace dqc
