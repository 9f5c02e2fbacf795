#include "dqc/detect.hpp"

namespace dqc {

bool DetectParams::valid(std::string* why) const {
    auto fail = [&](const char* msg) {
        if (why != nullptr) *why = msg;
        return false;
    };
    if (!(gamma > 0.0 && gamma <= 1.0)) return fail("gamma must lie in (0, 1]");
    if (!(b > 0.0 && b <= 1.0)) return fail("b must lie in (0, 1]");
    if (!(alpha > 0.0 && alpha <= 1.0)) return fail("alpha must lie in (0, 1]");
    if (!(density_bound() > alpha)) return fail("density guarantee violated: need 1 - (1 - gamma)/b > alpha");
    return true;
}

double containment_score(const DynamicGraph& g, VertexId u, VertexId v, const SignatureStore* sigs) {
    const std::size_t cu = g.closed_size(u);
    if (sigs == nullptr || sigs->backend() == Backend::Exact) {
        return static_cast<double>(g.closed_intersection_size(u, v)) / static_cast<double>(cu);
    }
    return estimate_containment(cu, g.closed_size(v), sigs->jaccard(u, v));
}

VertexSet detect(const DynamicGraph& g, VertexId u, const DetectParams& p, const SignatureStore* sigs) {
    VertexSet c;
    auto score = [&](VertexId v) {
        if (containment_score(g, u, v, sigs) >= p.gamma) c.insert(v);
    };
    for (VertexId v : g.neighbors(u)) score(v);
    score(u);
    const double selected = static_cast<double>(c.size()) - 1.0;
    if (selected < p.b * static_cast<double>(g.closed_size(u))) return VertexSet{};
    return c;
}

} // namespace dqc
