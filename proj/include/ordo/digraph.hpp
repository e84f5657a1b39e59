#ifndef ORDO_DIGRAPH_HPP
#define ORDO_DIGRAPH_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace ordo {

using Vertex = int;
using ArcId = int;
using VertexOrder = std::vector<Vertex>;

// Extended reals live in plain doubles; bounds use both infinities, arc
// weights any finite value or +inf (never -inf, never NaN).
inline constexpr double pos_inf = std::numeric_limits<double>::infinity();
inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// Input validation failures (bad ids, malformed specs, unparsable files).
struct SpecError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured search cap was exceeded; never silently degrades to sampling.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;
    double weight = 1.0;
};

// Loop-free multidigraph on vertices 0..n-1. Arc identity is the index in
// the construction sequence, stable across serialization. Parallel arcs are
// allowed. Immutable after construction.
class Digraph {
  public:
    Digraph() = default;
    explicit Digraph(int n, std::vector<Arc> arcs = {});

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const Arc& arc(ArcId a) const { return arcs_[static_cast<size_t>(a)]; }
    const std::vector<Arc>& arcs() const { return arcs_; }

    // Arc ids leaving / entering v.
    const std::vector<ArcId>& out_arcs(Vertex v) const { return out_[static_cast<size_t>(v)]; }
    const std::vector<ArcId>& in_arcs(Vertex v) const { return in_[static_cast<size_t>(v)]; }

    int out_degree(Vertex v) const { return static_cast<int>(out_[static_cast<size_t>(v)].size()); }
    int in_degree(Vertex v) const { return static_cast<int>(in_[static_cast<size_t>(v)].size()); }
    double weighted_out_degree(Vertex v) const;

    bool has_negative_weight() const { return has_negative_weight_; }

    Digraph reversed() const;

  private:
    int n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::vector<ArcId>> out_;
    std::vector<std::vector<ArcId>> in_;
    bool has_negative_weight_ = false;
};

enum class ArcFamilyKind {
    InBranching,
    InArborescence,
    Matching,
    PerfectMatching,
    DisjointDipaths,
    Dipath,
    HamiltonianDipath,
    Acyclic,
};

std::string to_string(ArcFamilyKind kind);
std::optional<ArcFamilyKind> arc_family_kind_from_string(const std::string& name);

// Per-vertex degree statistics of a digraph under a fixed vertex order.
// An arc is left-going when its head precedes its tail.
struct DegreeProfile {
    std::vector<int> delta_left;    // arcs from v to earlier vertices
    std::vector<int> delta_right;   // arcs from v to later vertices
    std::vector<int> rho_left;      // arcs into v from earlier vertices
    std::vector<int> rho_right;     // arcs into v from later vertices
    std::vector<double> delta_left_w;
    std::vector<double> rho_right_w;
};

// Throws SpecError if the order is not a permutation of 0..n-1.
DegreeProfile degree_profile(const Digraph& d, const VertexOrder& order);

// Positions of each vertex in the order (inverse permutation); validates.
std::vector<int> order_positions(const Digraph& d, const VertexOrder& order);

bool is_acyclic(const Digraph& d);

// Directed cycle witnessing that no topological order exists, as a sequence
// of arc ids whose heads/tails chain around the cycle.
struct CycleWitness {
    std::vector<ArcId> arcs;
};

// Topological order (delta_left == 0 everywhere) or a directed cycle.
// Peels zero-outdegree vertices from the right, lowest id first.
std::variant<VertexOrder, CycleWitness> topological_order(const Digraph& d);

// True iff the sub-multidigraph on the given arc ids belongs to the family.
// Throws SpecError on out-of-range ids.
bool classify_arc_set(const Digraph& d, const std::vector<ArcId>& arc_ids, ArcFamilyKind kind);

// Weighted outdegree of each v in vs restricted to heads in vs \ {v}; the
// witness-checking primitive for induced-subgraph certificates.
std::vector<double> induced_min_outdegree(const Digraph& d, const std::vector<Vertex>& vs);

// Weighted outdegree of v restricted to heads in the given set.
double outdegree_into(const Digraph& d, Vertex v, const std::vector<bool>& in_set);

// Unweighted variants (each arc counts 1 regardless of stored weight).
int outdegree_count_into(const Digraph& d, Vertex v, const std::vector<bool>& in_set);
int indegree_count_from(const Digraph& d, Vertex v, const std::vector<bool>& in_set);

std::vector<bool> make_membership(int n, const std::vector<Vertex>& vs);

}  // namespace ordo

#endif
