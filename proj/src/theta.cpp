#include "qformlab/theta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qformlab {

namespace {

long long isqrt_floor(double v) {
    if (v <= 0) return 0;
    auto r = static_cast<long long>(std::sqrt(v));
    while (r * r > static_cast<long long>(v)) --r;
    while ((r + 1) * (r + 1) <= static_cast<long long>(v)) ++r;
    return r;
}

}  // namespace

long long rep_count_bruteforce(const quad_form& q, long long n) {
    if (!is_positive_definite(q))
        throw std::invalid_argument("rep count: form must be positive definite");
    if (n < 0) return 0;
    if (n == 0) return 1;
    const long long bigD = -discriminant_of(q);
    // 4a Q = (2ax + by)^2 + D y^2 bounds y; the x <-> y mirror bounds x
    const long long ymax = isqrt_floor(4.0 * (double)q.a * (double)n / (double)bigD);
    const long long xmax = isqrt_floor(4.0 * (double)q.c * (double)n / (double)bigD);
    long long count = 0;
    for (long long y = -ymax; y <= ymax; ++y)
        for (long long x = -xmax; x <= xmax; ++x)
            if (q.eval(x, y) == n) ++count;
    return count;
}

rep_count_table theta_series(const quad_form& q, int order) {
    if (!is_positive_definite(q))
        throw std::invalid_argument("theta series: form must be positive definite");
    rep_count_table out;
    out.form = q;
    out.order = order;
    out.counts.assign(static_cast<std::size_t>(order) + 1, 0);

    const long long bigD = -discriminant_of(q);
    const long long n = order;
    const long long ymax = isqrt_floor(4.0 * (double)q.a * (double)n / (double)bigD);
    for (long long y = -ymax; y <= ymax; ++y) {
        // a x^2 + (b y) x + (c y^2 - n) <= 0
        double s = std::sqrt(std::max(0.0, 4.0 * (double)q.a * (double)n -
                                               (double)bigD * (double)(y * y)));
        auto xlo = static_cast<long long>(std::ceil((-(double)q.b * (double)y - s) /
                                                    (2.0 * (double)q.a)));
        auto xhi = static_cast<long long>(std::floor((-(double)q.b * (double)y + s) /
                                                     (2.0 * (double)q.a)));
        // repair floating-point edge error with exact evaluations
        while (q.eval(xlo - 1, y) <= n) --xlo;
        while (xlo <= xhi && q.eval(xlo, y) > n) ++xlo;
        while (q.eval(xhi + 1, y) <= n) ++xhi;
        while (xhi >= xlo && q.eval(xhi, y) > n) --xhi;
        for (long long x = xlo; x <= xhi; ++x) {
            long long v = q.eval(x, y);
            if (v <= n) ++out.counts[static_cast<std::size_t>(v)];
        }
    }
    return out;
}

int_series half_theta_difference(const quad_form& qs, const quad_form& qr,
                                 int order) {
    long long d1 = discriminant_of(qs);
    long long d2 = discriminant_of(qr);
    if (d1 != d2) throw discriminant_mismatch(d1, d2);
    rep_count_table ts = theta_series(qs, order);
    rep_count_table tr = theta_series(qr, order);
    int_series out(order);
    for (int n = 0; n <= order; ++n) {
        long long diff = ts.counts[static_cast<std::size_t>(n)] -
                         tr.counts[static_cast<std::size_t>(n)];
        if (diff % 2 != 0)
            throw std::logic_error("theta difference is odd");  // impossible
        out.at(n) = to_mpz(diff / 2);
    }
    return out;
}

root_of_unity_series cusp_expansion_at_one(const quad_form& q, long long m_bound) {
    const long long bigD = -discriminant_of(q);
    if (bigD < 3)
        throw std::invalid_argument("cusp expansion: need discriminant <= -3");
    rep_count_table counts = theta_series(q, static_cast<int>(m_bound));

    root_of_unity_series out;
    out.level = bigD;
    const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(bigD));
    const std::complex<double> minus_i(0.0, -1.0);
    for (long long m = 0; m <= m_bound; ++m) {
        long long a_m = counts.counts[static_cast<std::size_t>(m)];
        if (a_m == 0) continue;
        double phase = 2.0 * std::numbers::pi * static_cast<double>(m) /
                       static_cast<double>(bigD);
        std::complex<double> root(std::cos(phase), std::sin(phase));
        out.terms[m] = minus_i * inv_sqrt_d * static_cast<double>(a_m) * root;
    }
    return out;
}

cusp_orders cusp_vanishing_orders(const discriminant& d, int r, int m_bound) {
    form_class_list classes = enumerate_reduced(d);
    if (!classes.odd_class_number || classes.h < 3)
        throw std::invalid_argument("cusp orders: need odd class number >= 3");
    if (r < 1 || r > static_cast<int>(classes.pairs.size()))
        throw std::invalid_argument("cusp orders: pair index out of range");
    const quad_form& q0 = classes.principal;
    const quad_form& qr = classes.pairs[static_cast<std::size_t>(r - 1)].first;

    cusp_orders out;

    int_series diff = half_theta_difference(q0, qr, m_bound);
    out.at_infinity = diff.valuation();

    root_of_unity_series e0 = cusp_expansion_at_one(q0, m_bound);
    root_of_unity_series er = cusp_expansion_at_one(qr, m_bound);
    constexpr double kZero = 1e-9;
    for (long long m = 0; m <= m_bound; ++m) {
        std::complex<double> c0 =
            e0.terms.count(m) ? e0.terms.at(m) : std::complex<double>(0.0);
        std::complex<double> cr =
            er.terms.count(m) ? er.terms.at(m) : std::complex<double>(0.0);
        std::complex<double> half = 0.5 * (c0 - cr);
        if (std::abs(half) > kZero) {
            out.at_one = static_cast<int>(m);
            out.leading_magnitude = std::abs(half);
            break;
        }
    }
    return out;
}

}  // namespace qformlab
