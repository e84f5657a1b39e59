#include "ordo/result.hpp"

#include <algorithm>

namespace ordo {

namespace {
std::vector<Vertex> sorted(std::vector<Vertex> vs) {
    std::sort(vs.begin(), vs.end());
    return vs;
}
}  // namespace

Witness Witness::induced_set(std::vector<Vertex> vs) {
    Witness w;
    w.kind = WitnessKind::InducedSet;
    w.vertices = sorted(std::move(vs));
    w.validated = true;
    return w;
}

Witness Witness::cut_set(std::vector<Vertex> vs, int k) {
    Witness w;
    w.kind = WitnessKind::CutSet;
    w.vertices = sorted(std::move(vs));
    w.k = k;
    w.validated = true;
    return w;
}

Witness Witness::stuck_set(std::vector<Vertex> vs, bool validated) {
    Witness w;
    w.kind = WitnessKind::StuckSet;
    w.vertices = sorted(std::move(vs));
    w.validated = validated;
    return w;
}

Witness Witness::sum_mismatch(long long lhs, long long rhs) {
    Witness w;
    w.kind = WitnessKind::SumMismatch;
    w.lhs = lhs;
    w.rhs = rhs;
    w.validated = true;
    return w;
}

SolveResult make_feasible(const Digraph& d, VertexOrder order) {
    DegreeProfile p = degree_profile(d, order);
    return Feasible{std::move(order), std::move(p)};
}

}  // namespace ordo
