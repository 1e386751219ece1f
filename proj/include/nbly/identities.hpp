#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nbly/bivariate.hpp"
#include "nbly/series.hpp"

namespace nbly {

/* First Rogers-Ramanujan numerator, product form:
 * prod_{k>=0} (1-q^{5k+2})(1-q^{5k+3})(1-q^{5k+5}). */
Series rr1_product(int order);

/* Same series as a bilateral sum: sum over all integers k of
 * (-1)^k q^{k(5k+1)/2}. */
Series rr1_bilateral(int order);

/* One-sided regrouping 1 + sum_{k>=1} (-1)^k q^{(5k^2-k)/2} (1+q^k);
 * equal to the bilateral form by pairing k with -k. */
Series rr1_folded(int order);

/* Second Rogers-Ramanujan numerator, product form:
 * prod_{k>=0} (1-q^{5k+4})(1-q^{5k+5})(1-q^{5k+6}). */
Series rr2_product(int order);

/* Sum form: sum_{k>=0} (-1)^k q^{k(5k+3)/2} (1+q+...+q^{2k}). */
Series rr2_sum(int order);

/* GF_n for n = 0..nmax via the four-term recurrence
 *   (1-q^n) GF_n = -(q^{2n-2}+q^{3n-3}) GF_{n-2}
 *                  +(q^{2n-2}+q^{3n-4}+q^{3n-3}) GF_{n-3}
 *                  -q^{3n-4} GF_{n-4}
 * with GF_0 = 1 and GF_n = 0 for n < 0. Each division by (1-q^n) is an
 * exact division with a re-multiplication check. */
std::vector<Series> gf_sequence(int nmax, int order);

/* H_n for n = 0..nmax via
 *   (1-q^n) H_n = -q^n (1-q^{n-1}) H_{n-1} - (q^{2n-2}+q^{2n-1}) H_{n-2}
 *                 + q^{2n-2} H_{n-3}
 * with H_0 = 1 and H_n = 0 for n < 0. Agrees with gf_sequence. */
std::vector<Series> h_recurrence_sequence(int nmax, int order);

/* The closed bivariate form
 *   1 + sum_{k>=1} (-1)^k x^{2k} / (q;q)_k * q^{(5k^2-k)/2}
 *                  * (xq;q)_{k-1} (1 - x q^{2k}),
 * whose x^n slice is GF_n. */
BivariateSeries main_theorem_rhs(int x_order, int q_order);

/* H(x)/(xq;q)_inf - H(xq)/(xq^2;q)_inf - qx H(xq^2)/(xq^3;q)_inf, which is
 * identically zero. drop_qx_term omits the last term (a deliberately broken
 * variant used as a sensitivity control). */
BivariateSeries functional_equation_residual(int x_order, int q_order,
                                             bool drop_qx_term = false);

/* (xq;q)_inf * sum_{k>=0} q^{k^2} x^k / (q;q)_k; equals main_theorem_rhs. */
BivariateSeries classical_lhs(int x_order, int q_order);

/* Sign convention for the odd-vertex-count refinement below: the printed
 * prefactor (-1)^{n+j} disagrees with direct enumeration (the 3-vertex
 * 2-edge stratum comes out +q^4/(1-q), not negative), so the empirically
 * matching (-1)^{n+j+1} is the default. Both remain computable. */
enum class OddSign { printed, empirical };

std::string odd_sign_name(OddSign s);

/* Generating function for signed admissible partitions whose pruned graph
 * has 2n vertices and n+j edges:
 *   (-1)^{n+j} (-q;q^2)_{n-j} (q^{2n-2j-1};q^{-2})_j
 *   / ((q^2;q^2)_{2j} (q^2;q^2)_{n-2j}) * q^{2(n-j)^2+4j^2+2j}.
 * Requires n >= 2j >= 0. */
Series edgevertex_even(int n, int j, int order);

/* The 2n+1 vertex, n+j+1 edge analogue with q-power 2(n-j)^2+4j^2+6j+2 and
 * denominators (q^2;q^2)_{2j+1} (q^2;q^2)_{n-2j-1}. Requires n >= 2j+1. */
Series edgevertex_odd(int n, int j, int order, OddSign convention = OddSign::empirical);

/* Outcome of comparing two series (or two bivariate series) that are
 * claimed equal: agreement holds through valid_order, and the first
 * mismatch, if any, is recorded. */
struct IdentityCheck {
    std::string name;
    int valid_order = 0;
    bool match = true;
    std::string first_mismatch;  // human-readable "(location) lhs=.. rhs=..", empty if match
};

IdentityCheck check_identity(const std::string& name, const Series& lhs, const Series& rhs);
IdentityCheck check_identity(const std::string& name, const BivariateSeries& lhs,
                             const BivariateSeries& rhs);

}  // namespace nbly
