#pragma once

#include <vector>

#include "nbly/series.hpp"

namespace nbly {

/* Truncated series in x and q: a list of q-Series indexed by x-degree.
 * The x-order M and q-order N bound what is known; coefficient access
 * beyond (M, N) is an error, not zero. Mixed-order operations truncate
 * both gradings to the smaller order. */
class BivariateSeries {
public:
    BivariateSeries(int x_order, int q_order);

    static BivariateSeries one(int x_order, int q_order);
    /* s(q) * x^x_power. */
    static BivariateSeries lift(const Series& s, int x_power, int x_order);
    /* c * x^xd * q^qd. Degrees beyond the orders yield zero. */
    static BivariateSeries monomial(Coeff c, int xd, int qd, int x_order, int q_order);

    int x_order() const { return static_cast<int>(slices_.size()) - 1; }
    int q_order() const { return q_order_; }

    const Series& coeff_x(int x_degree) const;
    Series& slice(int x_degree);
    Coeff coeff(int x_degree, int q_degree) const;

    /* Substitute x -> x * q^m: the x^n slice picks up a factor q^{n*m}. */
    BivariateSeries subst_x_scale(int m) const;

    BivariateSeries& operator+=(const BivariateSeries& rhs);
    BivariateSeries& operator-=(const BivariateSeries& rhs);
    BivariateSeries& operator*=(Coeff scalar);

    friend BivariateSeries operator+(BivariateSeries a, const BivariateSeries& b) { return a += b; }
    friend BivariateSeries operator-(BivariateSeries a, const BivariateSeries& b) { return a -= b; }
    friend BivariateSeries operator-(const BivariateSeries& a);
    friend BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b);
    friend BivariateSeries operator*(Coeff scalar, BivariateSeries a) { return a *= scalar; }

    friend bool operator==(const BivariateSeries& a, const BivariateSeries& b) = default;

private:
    int q_order_;
    std::vector<Series> slices_;  // index = x-degree, each of q-order q_order_
};

BivariateSeries truncate(const BivariateSeries& a, int x_order, int q_order);

/* Reciprocal of a bivariate series whose x^0 slice has constant term +-1.
 * Slicewise: B_0 = 1/A_0 and B_n = -B_0 * sum_{i=1..n} A_i B_{n-i}. */
BivariateSeries reciprocal(const BivariateSeries& a);

bool is_zero(const BivariateSeries& a);

struct BivariateDiff {
    int x_valid = 0;
    int q_valid = 0;
    bool match = true;
    int x_degree = -1;  // first mismatch location when !match
    int q_degree = -1;
    Coeff lhs = 0;
    Coeff rhs = 0;
};
BivariateDiff compare(const BivariateSeries& a, const BivariateSeries& b);

}  // namespace nbly
