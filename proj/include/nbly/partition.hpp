#pragma once

#include <functional>
#include <vector>

namespace nbly {

/* Integer partition with parts written in weakly increasing order. */
struct Partition {
    std::vector<int> parts;
    long long weight = 0;  // cached sum of parts
};

/* Validates and builds a Partition (weakly increasing, all parts >= 1). */
Partition make_partition(std::vector<int> parts);

/* A neighborly partition as an ordered pair (mu1, mu2): mu1 is the distinct
 * support, mu2 the parts that occur twice. Both lists are strictly
 * increasing and mu2 is a subset of mu1. */
struct NeighborlyPartition {
    std::vector<int> mu1;
    std::vector<int> mu2;

    friend bool operator==(const NeighborlyPartition&, const NeighborlyPartition&) = default;
};

/* A maximal block of consecutive parts start, start+1, ..., end of mu1. */
struct Run {
    int start;
    int end;

    friend bool operator==(const Run&, const Run&) = default;
};

/* True iff every multiplicity is at most 2 and every part has another part
 * (counted with multiplicity) within distance 1. The empty list is
 * neighborly. Throws std::invalid_argument on non-monotone or non-positive
 * input. */
bool is_neighborly(const std::vector<int>& parts);

/* Splits a neighborly multiset into (mu1, mu2). Throws if the input is not
 * neighborly. */
NeighborlyPartition decompose(const std::vector<int>& parts);

/* Builds and validates a NeighborlyPartition from the two part lists. */
NeighborlyPartition make_neighborly(std::vector<int> mu1, std::vector<int> mu2);

/* Checks the structural invariants: strictly increasing lists, mu2 a subset
 * of mu1, and every isolated part of mu1 present in mu2. Throws
 * std::invalid_argument on violation. */
void validate(const NeighborlyPartition& np);

/* The combined multiset mu1 + mu2, weakly increasing. */
std::vector<int> recombine(const NeighborlyPartition& np);

long long weight(const NeighborlyPartition& np);
int part_count(const NeighborlyPartition& np);

/* Maximal consecutive blocks of mu1, in increasing order. */
std::vector<Run> runs(const NeighborlyPartition& np);

inline constexpr long long kDefaultEnumerationCap = 50'000'000;

/* Streams every neighborly partition of weight <= max_weight exactly once,
 * including the empty partition. The visit order is the generation order:
 * mu1 grows by appending ever-larger parts (pre-order over strictly
 * increasing sequences), and for each mu1 the admissible mu2 subsets are
 * visited in lexicographic order. Use enumerate_neighborly() for the
 * weight-sorted order. Throws budget_error past count_cap partitions. */
void for_each_neighborly(int max_weight,
                         const std::function<void(const NeighborlyPartition&)>& fn,
                         long long count_cap = kDefaultEnumerationCap);

/* All neighborly partitions of weight <= max_weight, sorted by
 * (weight, mu1, mu2) with the lists compared lexicographically. */
std::vector<NeighborlyPartition> enumerate_neighborly(
    int max_weight, long long count_cap = kDefaultEnumerationCap);

}  // namespace nbly
