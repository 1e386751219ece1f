#include "nbly/bivariate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace nbly {

BivariateSeries::BivariateSeries(int x_order, int q_order) : q_order_(q_order) {
    if (x_order < 0) throw std::invalid_argument("x-order must be >= 0");
    slices_.assign(static_cast<std::size_t>(x_order) + 1, Series(q_order));
}

BivariateSeries BivariateSeries::one(int x_order, int q_order) {
    BivariateSeries b(x_order, q_order);
    b.slices_[0].set_coeff(0, 1);
    return b;
}

BivariateSeries BivariateSeries::lift(const Series& s, int x_power, int x_order) {
    if (x_power < 0) throw std::invalid_argument("x-power must be >= 0");
    BivariateSeries b(x_order, s.order());
    if (x_power <= x_order) b.slices_[static_cast<std::size_t>(x_power)] = s;
    return b;
}

BivariateSeries BivariateSeries::monomial(Coeff c, int xd, int qd, int x_order, int q_order) {
    BivariateSeries b(x_order, q_order);
    if (xd <= x_order && qd <= q_order)
        b.slices_[static_cast<std::size_t>(xd)].set_coeff(qd, c);
    return b;
}

const Series& BivariateSeries::coeff_x(int x_degree) const {
    if (x_degree < 0 || x_degree > x_order())
        throw std::out_of_range("x-degree " + std::to_string(x_degree) +
                                " is outside the truncation order " + std::to_string(x_order()));
    return slices_[static_cast<std::size_t>(x_degree)];
}

Series& BivariateSeries::slice(int x_degree) {
    if (x_degree < 0 || x_degree > x_order())
        throw std::out_of_range("x-degree outside the truncation order");
    return slices_[static_cast<std::size_t>(x_degree)];
}

Coeff BivariateSeries::coeff(int x_degree, int q_degree) const {
    return coeff_x(x_degree).coeff(q_degree);
}

BivariateSeries BivariateSeries::subst_x_scale(int m) const {
    if (m < 0) throw std::invalid_argument("substitution power must be >= 0");
    BivariateSeries r(x_order(), q_order_);
    for (int n = 0; n <= x_order(); ++n) {
        const long long s = static_cast<long long>(n) * m;
        if (s > q_order_) break;  // the whole slice moves past the q truncation
        r.slices_[n] = truncate(shift(slices_[n], static_cast<int>(s)), q_order_);
    }
    return r;
}

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& rhs) {
    const int xo = std::min(x_order(), rhs.x_order());
    const int qo = std::min(q_order_, rhs.q_order_);
    slices_.resize(static_cast<std::size_t>(xo) + 1);
    for (int n = 0; n <= xo; ++n)
        slices_[n] = truncate(slices_[n], qo) + truncate(rhs.slices_[n], qo);
    q_order_ = qo;
    return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& rhs) {
    const int xo = std::min(x_order(), rhs.x_order());
    const int qo = std::min(q_order_, rhs.q_order_);
    slices_.resize(static_cast<std::size_t>(xo) + 1);
    for (int n = 0; n <= xo; ++n)
        slices_[n] = truncate(slices_[n], qo) - truncate(rhs.slices_[n], qo);
    q_order_ = qo;
    return *this;
}

BivariateSeries& BivariateSeries::operator*=(Coeff scalar) {
    for (auto& s : slices_) s *= scalar;
    return *this;
}

BivariateSeries operator-(const BivariateSeries& a) {
    BivariateSeries r(a.x_order(), a.q_order_);
    for (int n = 0; n <= a.x_order(); ++n) r.slices_[n] = -a.slices_[n];
    return r;
}

BivariateSeries operator*(const BivariateSeries& a, const BivariateSeries& b) {
    const int xo = std::min(a.x_order(), b.x_order());
    const int qo = std::min(a.q_order_, b.q_order_);
    BivariateSeries r(xo, qo);
    for (int i = 0; i <= xo; ++i) {
        for (int j = 0; i + j <= xo; ++j) {
            r.slices_[i + j] += truncate(a.slices_[i], qo) * truncate(b.slices_[j], qo);
        }
    }
    return r;
}

BivariateSeries truncate(const BivariateSeries& a, int x_order, int q_order) {
    if (x_order > a.x_order() || q_order > a.q_order())
        throw std::out_of_range("truncate: orders not within the known range");
    BivariateSeries r(x_order, q_order);
    for (int n = 0; n <= x_order; ++n) r.slice(n) = truncate(a.coeff_x(n), q_order);
    return r;
}

BivariateSeries reciprocal(const BivariateSeries& a) {
    BivariateSeries b(a.x_order(), a.q_order());
    const Series inv0 = reciprocal(a.coeff_x(0));
    b.slice(0) = inv0;
    for (int n = 1; n <= a.x_order(); ++n) {
        Series acc(a.q_order());
        for (int i = 1; i <= n; ++i) acc += a.coeff_x(i) * b.coeff_x(n - i);
        b.slice(n) = -(inv0 * acc);
    }
    return b;
}

bool is_zero(const BivariateSeries& a) {
    for (int n = 0; n <= a.x_order(); ++n)
        if (a.coeff_x(n).valuation()) return false;
    return true;
}

BivariateDiff compare(const BivariateSeries& a, const BivariateSeries& b) {
    BivariateDiff d;
    d.x_valid = std::min(a.x_order(), b.x_order());
    d.q_valid = std::min(a.q_order(), b.q_order());
    for (int n = 0; n <= d.x_valid; ++n) {
        for (int e = 0; e <= d.q_valid; ++e) {
            if (a.coeff(n, e) != b.coeff(n, e)) {
                d.match = false;
                d.x_degree = n;
                d.q_degree = e;
                d.lhs = a.coeff(n, e);
                d.rhs = b.coeff(n, e);
                return d;
            }
        }
    }
    return d;
}

}  // namespace nbly
