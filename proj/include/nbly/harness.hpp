#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nbly/identities.hpp"
#include "nbly/partition.hpp"
#include "nbly/series.hpp"

namespace nbly::harness {

struct Mismatch {
    std::string location;
    std::string expected;
    std::string actual;
};

/* Outcome of one verification run. `seconds` is informational only and is
 * never serialized, so identical configurations produce byte-identical
 * machine output. */
struct Report {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    bool pass = true;
    std::vector<Mismatch> mismatches;
    std::map<std::string, long long> counts;
    double seconds = 0.0;
    std::optional<Series> series;  // coefficient table, for series-producing checks
    std::string note;
};

inline std::string status(const Report& r) { return r.pass ? "PASS" : "FAIL"; }

enum class Exec { serial, parallel };

/* Serial reference kernels: one partition at a time, straight loops.
 * Kept as the ground truth the parallel kernels are tested against. */
namespace reference {

/* Sum of sign(lambda) q^|lambda| over admissible neighborly partitions with
 * every part >= min_part and weight <= max_weight. Complete enumeration by
 * weight makes each coefficient exact. */
Series signed_sum(int max_weight, int min_part = 1,
                  long long count_cap = kDefaultEnumerationCap);

/* signed_sum restricted to partitions with exactly n_parts parts. */
Series gf_by_parts(int n_parts, int max_weight,
                   long long count_cap = kDefaultEnumerationCap);

/* Signed sums bucketed by (vertex count, pruned-graph edge count). */
std::map<std::pair<int, int>, Series> edgevertex_buckets(
    int max_weight, long long count_cap = kDefaultEnumerationCap);

}  // namespace reference

/* OpenMP kernels over the weight-sorted enumeration; per-thread partial
 * sums merge exactly (integer addition commutes), so results are identical
 * to the serial reference regardless of schedule. */
Series signed_sum(int max_weight, int min_part = 1,
                  long long count_cap = kDefaultEnumerationCap);
Series gf_by_parts(int n_parts, int max_weight,
                   long long count_cap = kDefaultEnumerationCap);
std::map<std::pair<int, int>, Series> edgevertex_buckets(
    int max_weight, long long count_cap = kDefaultEnumerationCap);

/* Chain signs: the mod-3 pattern against B_n(-1) from the binomial
 * polynomial, plus the frozen B_5 forest counts (1,3,1). */
Report check_chain_signs(int nmax = 60);

/* Brute force vs mod-3 closed form vs per-component product for every
 * neighborly partition up to max_weight. perturb_closed_form flips the
 * closed form's sign (sensitivity control: the sweep must then fail). */
Report check_signature_consistency(int max_weight = 20, bool perturb_closed_form = false,
                                   Exec exec = Exec::parallel,
                                   long long count_cap = kDefaultEnumerationCap);

/* For every admissible partition up to max_weight: the pruned-graph edge
 * parity realizes the sign, all components classify into the six types
 * under both deletion-rule variants, the variants delete the same number
 * of edges from every chain, and per-chain kept-edge parity matches the
 * chain length mod 3. */
Report check_prune_consistency(int max_weight = 25, Exec exec = Exec::parallel,
                               long long count_cap = kDefaultEnumerationCap);

/* Enumerated signed sum vs the (2,3,5 mod 5) product and the bilateral
 * sum; also pins the weight-8 cancellation (2 positive, 2 negative). */
Report check_rr1(int max_weight = 30, long long count_cap = kDefaultEnumerationCap);

/* min_part = 2 variant against the (4,5,6 mod 5) product and its sum form. */
Report check_rr2(int max_weight = 30, long long count_cap = kDefaultEnumerationCap);

/* gf_by_parts(n) = recurrence GF_n = H_n = x^n slice of the closed form,
 * for n <= nmax through q^order. */
Report check_gf(int nmax = 12, int order = 30,
                long long count_cap = kDefaultEnumerationCap);

/* Functional-equation residual is identically zero; with drop_qx_term the
 * residual must instead be nonzero (sensitivity control). */
Report check_functional(int x_order = 8, int q_order = 25, bool drop_qx_term = false);

/* Classical product-times-sum form equals the closed form; its x = 1
 * specialization equals the first Rogers-Ramanujan numerator. */
Report check_classical(int x_order = 8, int q_order = 25);

/* Enumerated (vertices, edges) buckets against the refined generating
 * functions. The report records which odd-case sign convention matches. */
Report check_edgevertex(int max_weight = 30, int max_vertices = 12,
                        OddSign convention = OddSign::empirical,
                        long long count_cap = kDefaultEnumerationCap);

/* The canonical check names, in registry order. The two negative controls
 * verify that a perturbed closed form and the dropped-term functional
 * equation fail with located witnesses. */
std::vector<std::string> all_check_names();

struct RunConfig {
    std::vector<std::string> checks = all_check_names();
    int rr_weight = 30;
    int sig_weight = 20;
    int prune_weight = 25;
    int gf_nmax = 12;
    int gf_order = 30;
    int x_order = 8;
    int q_order = 25;
    int ev_weight = 30;
    int ev_vertices = 12;
    OddSign odd_sign = OddSign::empirical;
    long long enum_cap = kDefaultEnumerationCap;
};

/* Runs the requested checks in order; an empty list yields no reports. */
std::vector<Report> run_all(const RunConfig& config = {});

}  // namespace nbly::harness
