#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace nbly {

using Coeff = std::int64_t;

/* Overflow-checked coefficient arithmetic. Throws std::overflow_error
 * instead of wrapping silently. */
Coeff checked_add(Coeff a, Coeff b);
Coeff checked_sub(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

/* Truncated formal power series in q with exact integer coefficients.
 *
 * A Series of order N stores the coefficients of q^0 .. q^N. Coefficients
 * beyond the order are unknown, not zero: operations on operands of
 * different orders truncate the result to the smaller order, and equality
 * of two series is only meaningful through their common order (see
 * compare()). */
class Series {
public:
    Series() : coeffs_(1, 0) {}
    explicit Series(int order);

    static Series zero(int order) { return Series(order); }
    static Series one(int order);
    /* c * q^exponent. An exponent beyond the order yields the zero series
     * (the term is invisible at this truncation). */
    static Series monomial(Coeff c, int exponent, int order);
    /* Series from explicit coefficients c0, c1, ...; order = size - 1. */
    static Series from_coeffs(std::initializer_list<Coeff> coeffs);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    Coeff coeff(int exponent) const;
    void set_coeff(int exponent, Coeff value);
    void add_coeff(int exponent, Coeff value);
    const std::vector<Coeff>& coeffs() const { return coeffs_; }

    /* Exponent of the lowest nonzero known coefficient, or nothing if the
     * series is zero through its order. */
    std::optional<int> valuation() const;

    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    Series& operator*=(Coeff scalar);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(const Series& a);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Coeff scalar, Series a) { return a *= scalar; }
    friend Series operator*(Series a, Coeff scalar) { return a *= scalar; }

    /* Strict equality: same order and identical coefficients. Use
     * compare() to check agreement through the common order. */
    friend bool operator==(const Series& a, const Series& b) = default;

private:
    std::vector<Coeff> coeffs_;  // index = exponent of q
};

/* Restriction to a smaller order (new_order <= order). */
Series truncate(const Series& a, int new_order);

/* Multiplication by q^m, m >= 0. No information is lost: the result has
 * order a.order() + m. */
Series shift(const Series& a, int m);

/* Coefficientwise comparison through the common truncation order. */
struct SeriesDiff {
    int valid_order = 0;  // orders agree through min(a.order, b.order)
    bool match = true;
    int exponent = -1;    // first mismatching exponent when !match
    Coeff lhs = 0;
    Coeff rhs = 0;
};
SeriesDiff compare(const Series& a, const Series& b);

/* 1/(1 - q^e) = sum of q^{ie}, truncated. Requires e >= 1. */
Series geometric_inverse_factor(int exponent, int order);

/* One factor (1 + sign * q^exponent) of a finite product; sign is +1 or -1. */
struct SignedExponent {
    int exponent;
    int sign;
};

/* Product of (1 - q^{e_i}) over the given exponents, truncated. Every
 * exponent must be >= 1. */
Series finite_product(std::span<const int> exponents, int order);
Series finite_product(std::initializer_list<int> exponents, int order);
/* Signed variant: product of (1 + s_i * q^{e_i}). */
Series finite_product(std::span<const SignedExponent> factors, int order);
Series finite_product(std::initializer_list<SignedExponent> factors, int order);

/* Product over k >= 0 and r in residues of (1 - q^{r + k*modulus}),
 * including exactly the factors whose exponent is <= order. */
Series infinite_product(std::span<const int> residues, int modulus, int order);
Series infinite_product(std::initializer_list<int> residues, int modulus, int order);

/* q-Pochhammer (q;q)_k = (1-q)(1-q^2)...(1-q^k). */
Series poch_q(int k, int order);

/* Reciprocal of a series with constant coefficient +1 or -1. */
Series reciprocal(const Series& a);

/* Exact division: strips the divisor's valuation, multiplies by the
 * reciprocal of the remaining unit, and asserts that re-multiplying
 * reproduces the dividend. Throws divisibility_error when the dividend
 * does not vanish under the divisor's valuation or the re-multiplication
 * check fails. The result has order min(orders) - valuation(divisor). */
Series divide_exact(const Series& dividend, const Series& divisor);

}  // namespace nbly
