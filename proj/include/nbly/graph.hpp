#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nbly/partition.hpp"
#include "nbly/series.hpp"

namespace nbly {

/* One connected component of the partition graph: the backbone run
 * k, k+1, ..., n of mu1 together with the cuts (parts of mu2 inside the
 * run, each contributing a second vertex and a hanging edge). */
struct Component {
    int k = 0;
    int n = 0;
    std::vector<int> cuts;

    friend bool operator==(const Component&, const Component&) = default;
};

/* The graph of a neighborly partition: vertices are the parts (with
 * multiplicity), backbone edges join consecutive parts within runs of mu1,
 * hanging edges join the two copies of each repeated part. Every component
 * is a tree: a backbone path plus pendant duplicate vertices. */
struct PartitionGraph {
    std::vector<Component> components;
    int total_vertices = 0;
    int total_edges = 0;
};

/* Multiset of chain edge-lengths cut out of the components by the hanging
 * edges; stored sorted ascending. */
struct SignatureMultiset {
    std::vector<int> elements;

    friend bool operator==(const SignatureMultiset&, const SignatureMultiset&) = default;
};

/* Ingredients of the closed-form signature: t counts the chain lengths
 * congruent to 1 mod 3, s is the number of parts of mu2 (hanging edges),
 * zero_flag records a chain length divisible by 3. */
struct SignDiagnostics {
    int t = 0;
    int s = 0;
    bool zero_flag = false;
};

/* A connected component of the pruned graph: its vertex labels (sorted,
 * with multiplicity) and its edges as label pairs (lo, hi). */
struct PrunedComponent {
    std::vector<int> labels;
    std::vector<std::pair<int, int>> edges;

    friend bool operator==(const PrunedComponent&, const PrunedComponent&) = default;
};

struct PrunedGraph {
    std::vector<PrunedComponent> components;
    int vertex_count = 0;
    int edge_count = 0;
};

/* The stated deletion rule for chains of length 6m+4 removes
 * e_3,...,e_{3m} and e_{3m+2},...,e_{6m+2}; the variant shifts the split
 * one notch right (e_3,...,e_{3m+3} and e_{3m+5},...,e_{6m+2}), which is
 * what the 4-edge worked example does. Both delete the same number of
 * edges from every chain, so all derived counts agree. */
enum class PruneRule { literal, example_consistent };

/* The six shapes a pruned component can take, named by their vertex labels
 * relative to the smallest: {a,a}, {a,a+1}, {a,a,a+1}, {a,a+1,a+1},
 * {a,a+1,a+2}, {a,a+1,a+1,a+2}. */
enum class ComponentType { t_aa, t_ab, t_aab, t_abb, t_abc, t_abbc };

std::string component_type_name(ComponentType t);

PartitionGraph build_graph(const NeighborlyPartition& np);

/* Generating polynomial B_n(x) of vertex-covering edge subsets of an
 * n-edge path, by number of edges: coefficient of x^{n-k} counts the
 * compositions of n-k into k+1 parts, i.e. binomial(n-k-1, k). Returned as
 * coefficients indexed by x-power. Requires n >= 1. */
std::vector<Coeff> chain_poly(int n);

/* B_n(-1): -1 for n = 1 mod 3, +1 for n = 2 mod 3, 0 for n = 0 mod 3. */
int chain_sign(int n);

/* Signed count of vertex-covering edge subsets, enumerated per component
 * and multiplied (components choose independently). Throws budget_error
 * when the graph has more than edge_cap edges. */
int signature_bruteforce(const PartitionGraph& g, int edge_cap = 40);
int component_signature_bruteforce(const Component& c);

/* Chain lengths of one component, in chain order along the backbone:
 * {a_1-k+1, a_2-a_1+2, ..., a_s-a_{s-1}+2, n-a_s+1}, or {n-k} if there are
 * no cuts. */
std::vector<int> component_sig(const Component& c);

SignatureMultiset sig_multiset(const PartitionGraph& g);

/* Mod-3 closed form: 0 iff some chain length is divisible by 3, otherwise
 * (-1)^(t+s). */
std::pair<int, SignDiagnostics> signature_closed(const PartitionGraph& g);

/* Product formula (-1)^s * B_{l_1} * ... * B_{l_r} over the component's
 * chain lengths; label-shift invariant. */
int component_signature_product(const Component& c);

/* True iff no chain length of SIG is divisible by 3; the empty partition
 * is admissible. */
bool is_admissible(const NeighborlyPartition& np);

/* (-1)^(t+s) for an admissible partition. Throws std::domain_error when
 * the partition is not admissible (its signature would be 0). */
int sign(const NeighborlyPartition& np);

/* 1-based indices of the edges deleted from a chain of the given length.
 * Requires length >= 1 and not divisible by 3. The first and last edge of
 * a chain are never deleted, so hanging edges always survive. */
std::vector<int> chain_deletions(int length, PruneRule rule);

/* Deletes every-third edges per chain and regroups the survivors into
 * connected components. Requires an admissible underlying partition
 * (throws std::domain_error on a chain length divisible by 3). */
PrunedGraph prune(const PartitionGraph& g, PruneRule rule = PruneRule::literal);

/* Tags each pruned component with one of the six types; throws
 * classify_error naming the component otherwise. */
std::vector<ComponentType> classify_components(const PrunedGraph& pg);

/* (-1)^(number of edges of the pruned graph); agrees with sign(). */
int sign_via_pruned(const NeighborlyPartition& np, PruneRule rule = PruneRule::literal);

}  // namespace nbly
