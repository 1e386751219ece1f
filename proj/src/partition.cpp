#include "nbly/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "nbly/errors.hpp"

namespace nbly {

namespace {

void validate_weakly_increasing(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1)
            throw std::invalid_argument("parts must be positive");
        if (i > 0 && parts[i - 1] > parts[i])
            throw std::invalid_argument("parts must be weakly increasing");
    }
}

bool strictly_increasing(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] >= v[i]) return false;
    return true;
}

bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

Partition make_partition(std::vector<int> parts) {
    validate_weakly_increasing(parts);
    Partition p;
    p.weight = std::accumulate(parts.begin(), parts.end(), 0LL);
    p.parts = std::move(parts);
    return p;
}

bool is_neighborly(const std::vector<int>& parts) {
    validate_weakly_increasing(parts);
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        const std::size_t mult = j - i;
        if (mult > 2) return false;
        if (mult == 1) {
            /* A part of multiplicity 1 needs a part at distance exactly 1. */
            const bool left = i > 0 && parts[i - 1] == parts[i] - 1;
            const bool right = j < parts.size() && parts[j] == parts[i] + 1;
            if (!left && !right) return false;
        }
        i = j;
    }
    return true;
}

NeighborlyPartition decompose(const std::vector<int>& parts) {
    if (!is_neighborly(parts))
        throw std::invalid_argument("input multiset is not neighborly");
    NeighborlyPartition np;
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        np.mu1.push_back(parts[i]);
        if (j - i == 2) np.mu2.push_back(parts[i]);
        i = j;
    }
    return np;
}

NeighborlyPartition make_neighborly(std::vector<int> mu1, std::vector<int> mu2) {
    NeighborlyPartition np{std::move(mu1), std::move(mu2)};
    validate(np);
    return np;
}

void validate(const NeighborlyPartition& np) {
    if (!strictly_increasing(np.mu1) || (!np.mu1.empty() && np.mu1.front() < 1))
        throw std::invalid_argument("mu1 must be strictly increasing and positive");
    if (!strictly_increasing(np.mu2))
        throw std::invalid_argument("mu2 must be strictly increasing");
    for (int x : np.mu2)
        if (!contains(np.mu1, x))
            throw std::invalid_argument("mu2 part " + std::to_string(x) + " is not in mu1");
    /* Singleton rule: a part of mu1 with no mu1-neighbor at distance 1 has
     * no neighbor at all unless it is repeated, so it must be in mu2. */
    for (int x : np.mu1) {
        if (!contains(np.mu1, x - 1) && !contains(np.mu1, x + 1) && !contains(np.mu2, x))
            throw std::invalid_argument("isolated part " + std::to_string(x) +
                                        " of mu1 is missing from mu2");
    }
}

std::vector<int> recombine(const NeighborlyPartition& np) {
    std::vector<int> parts;
    parts.reserve(np.mu1.size() + np.mu2.size());
    auto it2 = np.mu2.begin();
    for (int x : np.mu1) {
        parts.push_back(x);
        if (it2 != np.mu2.end() && *it2 == x) {
            parts.push_back(x);
            ++it2;
        }
    }
    return parts;
}

long long weight(const NeighborlyPartition& np) {
    return std::accumulate(np.mu1.begin(), np.mu1.end(), 0LL) +
           std::accumulate(np.mu2.begin(), np.mu2.end(), 0LL);
}

int part_count(const NeighborlyPartition& np) {
    return static_cast<int>(np.mu1.size() + np.mu2.size());
}

std::vector<Run> runs(const NeighborlyPartition& np) {
    std::vector<Run> result;
    for (std::size_t i = 0; i < np.mu1.size();) {
        std::size_t j = i;
        while (j + 1 < np.mu1.size() && np.mu1[j + 1] == np.mu1[j] + 1) ++j;
        result.push_back({np.mu1[i], np.mu1[j]});
        i = j + 1;
    }
    return result;
}

namespace {

struct Enumerator {
    int max_weight;
    long long count_cap;
    const std::function<void(const NeighborlyPartition&)>& fn;
    long long emitted = 0;

    std::vector<int> mu1;
    std::vector<int> optional_parts;  // mu1 parts free to repeat or not
    std::vector<int> mu2;

    void emit() {
        if (++emitted > count_cap)
            throw budget_error("neighborly enumeration exceeded the cap of " +
                               std::to_string(count_cap) + " partitions");
        NeighborlyPartition np{mu1, mu2};
        std::sort(np.mu2.begin(), np.mu2.end());  // mandatory and optional interleave
        fn(np);
    }

    /* Chooses which optional parts join mu2, keeping the weight budget. The
     * mandatory (isolated) parts are already in mu2 when this runs. */
    void choose_mu2(std::size_t idx, long long budget) {
        if (idx == optional_parts.size()) {
            emit();
            return;
        }
        choose_mu2(idx + 1, budget);
        const int p = optional_parts[idx];
        if (p <= budget) {
            mu2.push_back(p);
            choose_mu2(idx + 1, budget - p);
            mu2.pop_back();
        }
    }

    void close_mu1(long long used) {
        optional_parts.clear();
        mu2.clear();
        long long mandatory = 0;
        for (std::size_t i = 0; i < mu1.size(); ++i) {
            const bool left = i > 0 && mu1[i - 1] == mu1[i] - 1;
            const bool right = i + 1 < mu1.size() && mu1[i + 1] == mu1[i] + 1;
            if (!left && !right) {
                mu2.push_back(mu1[i]);  // isolated: forced into mu2
                mandatory += mu1[i];
            } else {
                optional_parts.push_back(mu1[i]);
            }
        }
        if (used + mandatory > max_weight) return;
        choose_mu2(0, max_weight - used - mandatory);
    }

    void grow_mu1(int next_min, long long used) {
        close_mu1(used);
        for (int p = next_min; used + p <= max_weight; ++p) {
            mu1.push_back(p);
            grow_mu1(p + 1, used + p);
            mu1.pop_back();
        }
    }
};

}  // namespace

void for_each_neighborly(int max_weight,
                         const std::function<void(const NeighborlyPartition&)>& fn,
                         long long count_cap) {
    if (max_weight < 0) throw std::invalid_argument("max_weight must be >= 0");
    if (count_cap < 1) throw std::invalid_argument("count_cap must be >= 1");
    Enumerator e{max_weight, count_cap, fn};
    e.grow_mu1(1, 0);
}

std::vector<NeighborlyPartition> enumerate_neighborly(int max_weight, long long count_cap) {
    std::vector<NeighborlyPartition> all;
    for_each_neighborly(
        max_weight, [&](const NeighborlyPartition& np) { all.push_back(np); }, count_cap);
    std::sort(all.begin(), all.end(),
              [](const NeighborlyPartition& a, const NeighborlyPartition& b) {
                  const long long wa = weight(a), wb = weight(b);
                  if (wa != wb) return wa < wb;
                  if (a.mu1 != b.mu1) return a.mu1 < b.mu1;
                  return a.mu2 < b.mu2;
              });
    return all;
}

}  // namespace nbly
