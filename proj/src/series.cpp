#include "nbly/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nbly/errors.hpp"

namespace nbly {

Coeff checked_add(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("coefficient overflow in addition");
    return r;
}

Coeff checked_sub(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_sub_overflow(a, b, &r))
        throw std::overflow_error("coefficient overflow in subtraction");
    return r;
}

Coeff checked_mul(Coeff a, Coeff b) {
    Coeff r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("coefficient overflow in multiplication");
    return r;
}

Series::Series(int order) {
    if (order < 0) throw std::invalid_argument("series order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

Series Series::one(int order) {
    Series s(order);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::monomial(Coeff c, int exponent, int order) {
    if (exponent < 0) throw std::invalid_argument("monomial exponent must be >= 0");
    Series s(order);
    if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = c;
    return s;
}

Series Series::from_coeffs(std::initializer_list<Coeff> coeffs) {
    if (coeffs.size() == 0) throw std::invalid_argument("empty coefficient list");
    Series s(static_cast<int>(coeffs.size()) - 1);
    std::copy(coeffs.begin(), coeffs.end(), s.coeffs_.begin());
    return s;
}

Coeff Series::coeff(int exponent) const {
    if (exponent < 0 || exponent > order())
        throw std::out_of_range("coefficient of q^" + std::to_string(exponent) +
                                " is outside the truncation order " + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(exponent)];
}

void Series::set_coeff(int exponent, Coeff value) {
    if (exponent < 0 || exponent > order())
        throw std::out_of_range("set_coeff beyond truncation order");
    coeffs_[static_cast<std::size_t>(exponent)] = value;
}

void Series::add_coeff(int exponent, Coeff value) {
    if (exponent < 0 || exponent > order())
        throw std::out_of_range("add_coeff beyond truncation order");
    auto& c = coeffs_[static_cast<std::size_t>(exponent)];
    c = checked_add(c, value);
}

std::optional<int> Series::valuation() const {
    for (int e = 0; e <= order(); ++e)
        if (coeffs_[static_cast<std::size_t>(e)] != 0) return e;
    return std::nullopt;
}

Series& Series::operator+=(const Series& rhs) {
    const int n = std::min(order(), rhs.order());
    coeffs_.resize(static_cast<std::size_t>(n) + 1);
    for (int e = 0; e <= n; ++e)
        coeffs_[e] = checked_add(coeffs_[e], rhs.coeffs_[e]);
    return *this;
}

Series& Series::operator-=(const Series& rhs) {
    const int n = std::min(order(), rhs.order());
    coeffs_.resize(static_cast<std::size_t>(n) + 1);
    for (int e = 0; e <= n; ++e)
        coeffs_[e] = checked_sub(coeffs_[e], rhs.coeffs_[e]);
    return *this;
}

Series& Series::operator*=(Coeff scalar) {
    for (auto& c : coeffs_) c = checked_mul(c, scalar);
    return *this;
}

Series operator-(const Series& a) {
    Series r(a.order());
    for (int e = 0; e <= a.order(); ++e)
        r.coeffs_[e] = checked_sub(0, a.coeffs_[e]);
    return r;
}

Series operator*(const Series& a, const Series& b) {
    const int n = std::min(a.order(), b.order());
    Series r(n);
    for (int i = 0; i <= n; ++i) {
        const Coeff ai = a.coeffs_[i];
        if (ai == 0) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (b.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] = checked_add(r.coeffs_[i + j], checked_mul(ai, b.coeffs_[j]));
        }
    }
    return r;
}

Series truncate(const Series& a, int new_order) {
    if (new_order < 0 || new_order > a.order())
        throw std::out_of_range("truncate: order not within the known range");
    Series r(new_order);
    for (int e = 0; e <= new_order; ++e) r.set_coeff(e, a.coeff(e));
    return r;
}

Series shift(const Series& a, int m) {
    if (m < 0) throw std::invalid_argument("shift amount must be >= 0");
    Series r(a.order() + m);
    for (int e = 0; e <= a.order(); ++e) r.set_coeff(e + m, a.coeff(e));
    return r;
}

SeriesDiff compare(const Series& a, const Series& b) {
    SeriesDiff d;
    d.valid_order = std::min(a.order(), b.order());
    for (int e = 0; e <= d.valid_order; ++e) {
        if (a.coeff(e) != b.coeff(e)) {
            d.match = false;
            d.exponent = e;
            d.lhs = a.coeff(e);
            d.rhs = b.coeff(e);
            return d;
        }
    }
    return d;
}

Series geometric_inverse_factor(int exponent, int order) {
    if (exponent < 1) throw std::invalid_argument("geometric factor exponent must be >= 1");
    Series r(order);
    for (int e = 0; e <= order; e += exponent) r.set_coeff(e, 1);
    return r;
}

namespace {

/* In-place multiplication by (1 + sign * q^e). Descending index order keeps
 * the untouched low coefficients available as the pre-multiplication values. */
void mul_binomial_inplace(Series& s, int e, int sign) {
    if (e < 1) throw std::invalid_argument("non-positive expanded exponent in product");
    const int n = s.order();
    for (int i = n; i >= e; --i) {
        const Coeff lo = s.coeff(i - e);
        if (lo == 0) continue;
        s.set_coeff(i, sign > 0 ? checked_add(s.coeff(i), lo) : checked_sub(s.coeff(i), lo));
    }
}

}  // namespace

Series finite_product(std::span<const int> exponents, int order) {
    Series r = Series::one(order);
    for (int e : exponents) mul_binomial_inplace(r, e, -1);
    return r;
}

Series finite_product(std::initializer_list<int> exponents, int order) {
    return finite_product(std::span<const int>(exponents.begin(), exponents.size()), order);
}

Series finite_product(std::span<const SignedExponent> factors, int order) {
    Series r = Series::one(order);
    for (const auto& f : factors) {
        if (f.sign != 1 && f.sign != -1)
            throw std::invalid_argument("factor sign must be +1 or -1");
        mul_binomial_inplace(r, f.exponent, f.sign);
    }
    return r;
}

Series finite_product(std::initializer_list<SignedExponent> factors, int order) {
    return finite_product(std::span<const SignedExponent>(factors.begin(), factors.size()), order);
}

Series infinite_product(std::span<const int> residues, int modulus, int order) {
    if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
    for (int r : residues)
        if (r < 1) throw std::invalid_argument("residues must be >= 1");
    Series result = Series::one(order);
    for (long long k = 0;; ++k) {
        bool any = false;
        for (int r : residues) {
            const long long e = r + k * modulus;
            if (e > order) continue;
            any = true;
            mul_binomial_inplace(result, static_cast<int>(e), -1);
        }
        if (!any) break;
    }
    return result;
}

Series infinite_product(std::initializer_list<int> residues, int modulus, int order) {
    return infinite_product(std::span<const int>(residues.begin(), residues.size()), modulus, order);
}

Series poch_q(int k, int order) {
    if (k < 0) throw std::invalid_argument("Pochhammer subscript must be >= 0");
    Series r = Series::one(order);
    for (int i = 1; i <= k; ++i) mul_binomial_inplace(r, i, -1);
    return r;
}

Series reciprocal(const Series& a) {
    const Coeff a0 = a.coeff(0);
    if (a0 != 1 && a0 != -1)
        throw std::domain_error("reciprocal requires constant coefficient +1 or -1");
    /* b_n = (1/a_0) * (-sum_{k=1..n} a_k b_{n-k}), with 1/a_0 = a_0. */
    Series b(a.order());
    b.set_coeff(0, a0);
    for (int n = 1; n <= a.order(); ++n) {
        Coeff acc = 0;
        for (int k = 1; k <= n; ++k)
            acc = checked_add(acc, checked_mul(a.coeff(k), b.coeff(n - k)));
        b.set_coeff(n, checked_mul(a0, checked_sub(0, acc)));
    }
    return b;
}

Series divide_exact(const Series& dividend, const Series& divisor) {
    const auto val = divisor.valuation();
    if (!val) throw std::domain_error("division by a series that is zero through its order");
    const int v = *val;
    const int n = std::min(dividend.order(), divisor.order());
    if (v > n) throw std::domain_error("divisor valuation exceeds the common order");
    for (int e = 0; e < v && e <= dividend.order(); ++e) {
        if (dividend.coeff(e) != 0)
            throw divisibility_error("dividend has a nonzero coefficient at q^" +
                                     std::to_string(e) + " below the divisor valuation " +
                                     std::to_string(v));
    }
    /* Strip q^v from both sides, invert the remaining unit. */
    Series f(n - v), d(n - v);
    for (int e = 0; e <= n - v; ++e) {
        f.set_coeff(e, dividend.coeff(e + v));
        d.set_coeff(e, divisor.coeff(e + v));
    }
    Series q = f * reciprocal(d);
    if (auto diff = compare(q * d, f); !diff.match)
        throw divisibility_error("exact division check failed at q^" +
                                 std::to_string(diff.exponent));
    return q;
}

}  // namespace nbly
