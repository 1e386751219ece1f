#pragma once

#include <string>

#include "nbly/graph.hpp"
#include "nbly/partition.hpp"

namespace nbly {

/* Compact "mu1/mu2" form, e.g. "1,2,3/3"; the empty partition is "/". */
std::string format_partition(const NeighborlyPartition& np);

/* Parses "1,2,3/3" (mu1/mu2) or a bare multiset "1,2,3,3" which is
 * decomposed. Throws std::invalid_argument on malformed or non-neighborly
 * input. */
NeighborlyPartition parse_partition(const std::string& text);

std::string format_multiset(const SignatureMultiset& sig);

/* Two-row ASCII picture of the partition graph: backbone on top, duplicate
 * parts below their originals, "--" for backbone edges and "|" for hanging
 * edges. */
std::string render_graph(const NeighborlyPartition& np);

/* Same layout for the pruned graph: deleted backbone edges leave a gap. */
std::string render_pruned(const NeighborlyPartition& np, const PrunedGraph& pg);

}  // namespace nbly
