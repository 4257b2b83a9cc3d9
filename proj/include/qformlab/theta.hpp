#ifndef QFORMLAB_THETA_HPP
#define QFORMLAB_THETA_HPP

#include <complex>
#include <map>

#include "qformlab/qforms.hpp"
#include "qformlab/qseries.hpp"

namespace qformlab {

/* Representation counts a(n, Q) for n = 0 .. order; a(0) = 1 (the origin)
 * and every a(n), n >= 1, is even under (x, y) -> (-x, -y). */
struct rep_count_table {
    quad_form form;
    int order = 0;
    std::vector<long long> counts;
};

/* #{(x, y) in Z^2 : Q(x, y) = n} by a plain double scan over the box
 * |y| <= sqrt(4an/D), |x| <= sqrt(4cn/D). Deliberately naive: this is the
 * independent oracle every formula is checked against. */
long long rep_count_bruteforce(const quad_form& q, long long n);

/* All a(n, Q) for n <= order in one sweep: y runs over its strip and the
 * x-interval with Q(x, y) <= order comes from the quadratic formula, each
 * lattice point incrementing its bucket. */
rep_count_table theta_series(const quad_form& q, int order);

/* (a(n, Qs) - a(n, Qr))/2 for n <= order; the halving is exact. Throws
 * discriminant_mismatch when the forms have different discriminants. When
 * Qs is principal and Qr is not, the result starts q + O(q^2). */
int_series half_theta_difference(const quad_form& qs, const quad_form& qr,
                                 int order);

/* Expansion of the theta series at the cusp 1/1 in powers of q^(1/D):
 * finitely many terms m -> coefficient, m <= the requested bound. The phase
 * of each lattice point's contribution depends only on Q(x,y) mod D, so the
 * level sets collapse to single terms (-i/sqrt(D)) a(m,Q) e^(2 pi i m / D). */
struct root_of_unity_series {
    long long level = 0;                              // D
    std::map<long long, std::complex<double>> terms;  // m -> coefficient of q^(m/D)
};

root_of_unity_series cusp_expansion_at_one(const quad_form& q, long long m_bound);

/* Orders of vanishing of the half theta difference F_{D,r} at the two
 * explicit cusps: at infinity the least n with t_r(n) != 0, at 1/1 the least
 * m whose coefficient in the half difference of the two cusp expansions
 * exceeds 1e-9 in magnitude. Also reports the magnitude of the leading
 * 1/1-coefficient (expected 1/sqrt(D)). */
struct cusp_orders {
    int at_infinity = 0;
    int at_one = 0;
    double leading_magnitude = 0.0;
};

cusp_orders cusp_vanishing_orders(const discriminant& d, int r, int m_bound);

}  // namespace qformlab

#endif
