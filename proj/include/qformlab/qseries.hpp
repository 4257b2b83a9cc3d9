#ifndef QFORMLAB_QSERIES_HPP
#define QFORMLAB_QSERIES_HPP

#include <gmpxx.h>

#include <vector>

#include "qformlab/errors.hpp"

namespace qformlab {

/* gmpxx has no long long overloads; long is 64-bit on every platform this
 * builds for. */
inline mpz_class to_mpz(long long v) { return mpz_class(static_cast<long>(v)); }

/* Truncated q-expansion with exact integer coefficients for q^0 .. q^N.
 * Mixed-order arithmetic truncates to the smaller order; nothing below the
 * declared order is ever dropped silently. */
class int_series {
  public:
    explicit int_series(int order)
        : order_(order), coef_(static_cast<std::size_t>(order) + 1) {}

    static int_series one(int order) {
        int_series s(order);
        s.coef_[0] = 1;
        return s;
    }

    int order() const { return order_; }

    const mpz_class& operator[](int n) const {
        return coef_[static_cast<std::size_t>(n)];
    }
    mpz_class& at(int n) { return coef_[static_cast<std::size_t>(n)]; }

    int_series truncated(int order) const;

    /* Least n with a nonzero coefficient, or -1 for the zero series. */
    int valuation() const;

    /* Formal inverse, requires constant term 1. */
    int_series inverse() const;

    /* Non-negative small power by repeated squaring. */
    int_series pow(unsigned long e) const;

    int_series& operator+=(const int_series& o);
    int_series& operator-=(const int_series& o);
    friend int_series operator+(int_series a, const int_series& b) { return a += b; }
    friend int_series operator-(int_series a, const int_series& b) { return a -= b; }
    friend int_series operator*(const int_series& a, const int_series& b);

    bool operator==(const int_series&) const = default;

  private:
    int order_;
    std::vector<mpz_class> coef_;
};

/* Cauchy product truncated at min(order f, order g). */
int_series series_mul(const int_series& f, const int_series& g);

/* prod_{n>=1} (1 - q^(delta n)) up to q^order, via the pentagonal-number
 * expansion in q^delta. This is eta(delta z) with its q^(delta/24) prefactor
 * stripped. */
int_series eta_core(long long delta, int order);

/* Eta quotient prod eta(delta z)^(r_delta): distinct positive deltas with
 * integer (possibly negative) exponents. */
struct eta_quotient_spec {
    std::vector<std::pair<long long, long long>> terms;  // (delta, r_delta)
    long long level() const;                             // lcm of deltas with r != 0
};

/* The quotient written as q^lead * series with series(0) = 1. The lead is
 * sum(delta * r_delta)/24; throws non_integral_lead when that is not an
 * integer. The series is computed to the requested order. */
struct eta_quotient_expansion {
    long long lead = 0;
    int_series series{0};
};

eta_quotient_expansion eta_quotient(const eta_quotient_spec& spec, int order);

/* Exponents c(n) of the product form t = q * prod (1 - q^n)^c(n), together
 * with the intermediate recurrence values alpha(n) = sum_{d|n} d c(d).
 * Entries are valid for n = 1 .. order-1; index 0 is unused. */
struct product_expansion {
    int order = 0;
    std::vector<mpz_class> alpha;
    std::vector<mpz_class> c;
};

/* Runs the exponent recurrence on t with t(0) = 0, t(1) = 1 (validated):
 *   alpha(n) = -n t(n+1) - sum_{k=1}^{n-1} t(n-k+1) alpha(k)
 *   c(n) = (1/n) sum_{d|n} alpha(d) mu(n/d)
 * The division is checked exact; a remainder raises integrality_violation. */
product_expansion product_exponents(const int_series& t);

/* q * prod_{n=1}^{order-1} (1 - q^n)^(c[n]) truncated at `order`, exponents
 * taken from the 1-indexed vector (c[0] ignored). Exponents may be any
 * integers, negative included. */
int_series expand_product(const std::vector<mpz_class>& c, int order);
int_series expand_product(const product_expansion& pe, int order);

/* Coefficients of Delta = q * prod (1 - q^n)^24 up to q^order. */
int_series ramanujan_tau(int order);

/* The growth statistic n -> |sum_{d|n} d c(d)| / n^alpha_exp for
 * n = 1 .. order-1 (entry 0 of the result corresponds to n = 1). */
std::vector<double> weighted_divisor_growth(const product_expansion& pe,
                                            double alpha_exp);

}  // namespace qformlab

#endif
