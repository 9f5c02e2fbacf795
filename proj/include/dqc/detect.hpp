#pragma once

#include <string>

#include "dqc/graph.hpp"
#include "dqc/sketch.hpp"

namespace dqc {

struct DetectParams {
    double gamma = 0.9;
    double b = 0.6;
    double alpha = 0.8;

    // The detect density guarantee 1 − (1−γ)/b must exceed α, otherwise the
    // configuration cannot promise α-quasi-cliques. Checked at configuration
    // time; `why` names the violated constraint.
    bool valid(std::string* why = nullptr) const;
    double density_bound() const { return 1.0 - (1.0 - gamma) / b; }
};

// Containment score t̂(u,v): exact |N(u)∩N(v)|/|N(u)| when sigs is null,
// otherwise converted from the backend's Jaccard estimate.
double containment_score(const DynamicGraph& g, VertexId u, VertexId v, const SignatureStore* sigs);

// Alg. 1: C = {v ∈ N(u) : t̂(u,v) ≥ γ}, emptied when (|C|−1)/|N(u)| < b.
// N(u) is closed, so u itself is always scored (t̂(u,u) = 1) and belongs to
// any non-empty result.
VertexSet detect(const DynamicGraph& g, VertexId u, const DetectParams& p, const SignatureStore* sigs);

} // namespace dqc
