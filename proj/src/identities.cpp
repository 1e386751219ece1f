#include "nbly/identities.hpp"

#include <sstream>
#include <stdexcept>

#include "nbly/errors.hpp"

namespace nbly {

namespace {

long long pentagonal_like(long long k, long long a, long long b) {
    return k * (a * k + b) / 2;  // k(ak+b)/2, always integral for our (a,b)
}

/* 1/(x q^base; q)_inf as a bivariate series: the product over i >= 0 of
 * 1/(1 - x q^{base+i}) = sum_m x^m q^{m(base+i)}. Factors with base+i
 * beyond the q-order contribute only the constant 1 at this truncation. */
BivariateSeries inv_poch_x(int base, int x_order, int q_order) {
    BivariateSeries result = BivariateSeries::one(x_order, q_order);
    for (int i = 0; base + i <= q_order; ++i) {
        BivariateSeries factor(x_order, q_order);
        for (int m = 0; m <= x_order; ++m) {
            const long long e = static_cast<long long>(m) * (base + i);
            if (e > q_order) break;
            factor.slice(m).set_coeff(static_cast<int>(e), 1);
        }
        result = result * factor;
    }
    return result;
}

/* (x q^{shift}; q)_{count} as a bivariate series: factors (1 - x q^{shift+i}). */
BivariateSeries poch_x_finite(int shift, int count, int x_order, int q_order) {
    BivariateSeries result = BivariateSeries::one(x_order, q_order);
    for (int i = 0; i < count; ++i) {
        const long long e = static_cast<long long>(shift) + i;
        if (e > q_order) break;  // remaining factors are 1 - (invisible)
        BivariateSeries factor = BivariateSeries::one(x_order, q_order);
        if (x_order >= 1) factor.slice(1).set_coeff(static_cast<int>(e), -1);
        result = result * factor;
    }
    return result;
}

}  // namespace

Series rr1_product(int order) {
    return infinite_product({2, 3, 5}, 5, order);
}

Series rr1_bilateral(int order) {
    Series s(order);
    for (long long k = 0;; ++k) {
        const long long e = pentagonal_like(k, 5, 1);  // k(5k+1)/2
        if (e > order) break;
        s.add_coeff(static_cast<int>(e), k % 2 == 0 ? 1 : -1);
    }
    for (long long m = 1;; ++m) {
        const long long e = pentagonal_like(m, 5, -1);  // (-m)(5(-m)+1)/2 = m(5m-1)/2
        if (e > order) break;
        s.add_coeff(static_cast<int>(e), m % 2 == 0 ? 1 : -1);
    }
    return s;
}

Series rr1_folded(int order) {
    Series s = Series::one(order);
    for (long long k = 1;; ++k) {
        const long long e = (5 * k * k - k) / 2;
        if (e > order) break;
        const Coeff c = k % 2 == 0 ? 1 : -1;
        s.add_coeff(static_cast<int>(e), c);
        if (e + k <= order) s.add_coeff(static_cast<int>(e + k), c);
    }
    return s;
}

Series rr2_product(int order) {
    return infinite_product({4, 5, 6}, 5, order);
}

Series rr2_sum(int order) {
    Series s(order);
    for (long long k = 0;; ++k) {
        const long long e = pentagonal_like(k, 5, 3);  // k(5k+3)/2
        if (e > order) break;
        const Coeff c = k % 2 == 0 ? 1 : -1;
        for (long long i = 0; i <= 2 * k && e + i <= order; ++i)
            s.add_coeff(static_cast<int>(e + i), c);
    }
    return s;
}

std::vector<Series> gf_sequence(int nmax, int order) {
    if (nmax < 0) throw std::invalid_argument("nmax must be >= 0");
    std::vector<Series> gf;
    gf.push_back(Series::one(order));
    for (int n = 1; n <= nmax; ++n) {
        Series rhs(order);
        if (n >= 2) {
            rhs -= (Series::monomial(1, 2 * n - 2, order) +
                    Series::monomial(1, 3 * n - 3, order)) *
                   gf[n - 2];
        }
        if (n >= 3) {
            rhs += (Series::monomial(1, 2 * n - 2, order) +
                    Series::monomial(1, 3 * n - 4, order) +
                    Series::monomial(1, 3 * n - 3, order)) *
                   gf[n - 3];
        }
        if (n >= 4) rhs -= Series::monomial(1, 3 * n - 4, order) * gf[n - 4];
        const Series divisor = Series::one(order) - Series::monomial(1, n, order);
        gf.push_back(divide_exact(rhs, divisor));
    }
    return gf;
}

std::vector<Series> h_recurrence_sequence(int nmax, int order) {
    if (nmax < 0) throw std::invalid_argument("nmax must be >= 0");
    std::vector<Series> h;
    h.push_back(Series::one(order));
    for (int n = 1; n <= nmax; ++n) {
        Series rhs(order);
        const Series one_minus_qn1 =
            Series::one(order) - Series::monomial(1, n - 1, order);  // zero when n = 1
        rhs -= Series::monomial(1, n, order) * one_minus_qn1 * h[n - 1];
        if (n >= 2) {
            rhs -= (Series::monomial(1, 2 * n - 2, order) +
                    Series::monomial(1, 2 * n - 1, order)) *
                   h[n - 2];
        }
        if (n >= 3) rhs += Series::monomial(1, 2 * n - 2, order) * h[n - 3];
        const Series divisor = Series::one(order) - Series::monomial(1, n, order);
        h.push_back(divide_exact(rhs, divisor));
    }
    return h;
}

BivariateSeries main_theorem_rhs(int x_order, int q_order) {
    BivariateSeries result = BivariateSeries::one(x_order, q_order);
    for (long long k = 1; 2 * k <= x_order + 1; ++k) {
        const long long p = (5 * k * k - k) / 2;
        if (p > q_order) break;
        const Series unit = reciprocal(poch_q(static_cast<int>(k), q_order));
        BivariateSeries term =
            BivariateSeries::lift(truncate(shift(unit, static_cast<int>(p)), q_order),
                                  static_cast<int>(2 * k), x_order);
        term = term * poch_x_finite(1, static_cast<int>(k) - 1, x_order, q_order);
        BivariateSeries last = BivariateSeries::one(x_order, q_order);
        if (x_order >= 1 && 2 * k <= q_order)
            last.slice(1).set_coeff(static_cast<int>(2 * k), -1);  // 1 - x q^{2k}
        term = term * last;
        if (k % 2 == 1) term = -term;
        result += term;
    }
    return result;
}

BivariateSeries functional_equation_residual(int x_order, int q_order, bool drop_qx_term) {
    const BivariateSeries h = main_theorem_rhs(x_order, q_order);
    BivariateSeries residual = h * inv_poch_x(1, x_order, q_order);
    residual -= h.subst_x_scale(1) * inv_poch_x(2, x_order, q_order);
    if (!drop_qx_term) {
        const BivariateSeries tail = h.subst_x_scale(2) * inv_poch_x(3, x_order, q_order);
        residual -= BivariateSeries::monomial(1, 1, 1, x_order, q_order) * tail;  // * qx
    }
    return residual;
}

BivariateSeries classical_lhs(int x_order, int q_order) {
    BivariateSeries sum(x_order, q_order);
    for (int k = 0; k <= x_order; ++k) {
        const long long e = static_cast<long long>(k) * k;
        if (e > q_order) break;
        const Series term =
            truncate(shift(reciprocal(poch_q(k, q_order)), static_cast<int>(e)), q_order);
        sum += BivariateSeries::lift(term, k, x_order);
    }
    return poch_x_finite(1, q_order, x_order, q_order) * sum;
}

std::string odd_sign_name(OddSign s) {
    return s == OddSign::printed ? "(-1)^(n+j)" : "(-1)^(n+j+1)";
}

namespace {

Series edgevertex_assemble(int n, int j, int order, long long q_power, int parity,
                           int poch_a, int poch_b) {
    /* Numerator (-q;q^2)_{n-j} (q^{2n-2j-1};q^{-2})_j: the descending-base
     * symbol is expanded to its explicit factor list, exponents
     * 2n-2j-1-2i >= 1 for i < j. */
    std::vector<SignedExponent> factors;
    for (int i = 0; i < n - j; ++i) factors.push_back({1 + 2 * i, +1});
    for (int i = 0; i < j; ++i) factors.push_back({2 * n - 2 * j - 1 - 2 * i, -1});
    if (q_power > order) return Series(order);  // zero at this truncation
    const int reduced = order - static_cast<int>(q_power);
    Series numerator = finite_product(std::span<const SignedExponent>(factors), reduced);
    std::vector<int> denom_exponents;
    for (int i = 1; i <= poch_a; ++i) denom_exponents.push_back(2 * i);
    for (int i = 1; i <= poch_b; ++i) denom_exponents.push_back(2 * i);
    const Series denominator = finite_product(std::span<const int>(denom_exponents), reduced);
    Series quotient = divide_exact(numerator, denominator);
    if (parity % 2 != 0) quotient = -quotient;
    return truncate(shift(quotient, static_cast<int>(q_power)), order);
}

}  // namespace

Series edgevertex_even(int n, int j, int order) {
    if (j < 0 || n < 2 * j)
        throw std::invalid_argument("even refinement requires n >= 2j >= 0");
    const long long p = 2LL * (n - j) * (n - j) + 4LL * j * j + 2LL * j;
    return edgevertex_assemble(n, j, order, p, n + j, 2 * j, n - 2 * j);
}

Series edgevertex_odd(int n, int j, int order, OddSign convention) {
    if (j < 0 || n < 2 * j + 1)
        throw std::invalid_argument("odd refinement requires n >= 2j+1");
    const long long p = 2LL * (n - j) * (n - j) + 4LL * j * j + 6LL * j + 2;
    const int parity = n + j + (convention == OddSign::empirical ? 1 : 0);
    return edgevertex_assemble(n, j, order, p, parity, 2 * j + 1, n - 2 * j - 1);
}

IdentityCheck check_identity(const std::string& name, const Series& lhs, const Series& rhs) {
    IdentityCheck c;
    c.name = name;
    const SeriesDiff d = compare(lhs, rhs);
    c.valid_order = d.valid_order;
    c.match = d.match;
    if (!d.match) {
        std::ostringstream os;
        os << "q^" << d.exponent << " lhs=" << d.lhs << " rhs=" << d.rhs;
        c.first_mismatch = os.str();
    }
    return c;
}

IdentityCheck check_identity(const std::string& name, const BivariateSeries& lhs,
                             const BivariateSeries& rhs) {
    IdentityCheck c;
    c.name = name;
    const BivariateDiff d = compare(lhs, rhs);
    c.valid_order = d.q_valid;
    c.match = d.match;
    if (!d.match) {
        std::ostringstream os;
        os << "x^" << d.x_degree << " q^" << d.q_degree << " lhs=" << d.lhs << " rhs=" << d.rhs;
        c.first_mismatch = os.str();
    }
    return c;
}

}  // namespace nbly
