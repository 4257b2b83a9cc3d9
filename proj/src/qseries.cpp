#include "qformlab/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qformlab/ntheory.hpp"

namespace qformlab {

int_series int_series::truncated(int order) const {
    int_series out(order);
    int keep = std::min(order, order_);
    for (int n = 0; n <= keep; ++n) out.coef_[n] = coef_[n];
    return out;
}

int int_series::valuation() const {
    for (int n = 0; n <= order_; ++n)
        if (coef_[n] != 0) return n;
    return -1;
}

int_series& int_series::operator+=(const int_series& o) {
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int n = 0; n <= order_; ++n) coef_[n] += o.coef_[n];
    return *this;
}

int_series& int_series::operator-=(const int_series& o) {
    if (o.order_ < order_) *this = truncated(o.order_);
    for (int n = 0; n <= order_; ++n) coef_[n] -= o.coef_[n];
    return *this;
}

int_series operator*(const int_series& a, const int_series& b) {
    return series_mul(a, b);
}

int_series series_mul(const int_series& f, const int_series& g) {
    const int order = std::min(f.order(), g.order());
    int_series out(order);
    mpz_class term;
    for (int i = 0; i <= order; ++i) {
        if (sgn(f[i]) == 0) continue;
        for (int j = 0; i + j <= order; ++j) {
            if (sgn(g[j]) == 0) continue;
            term = f[i] * g[j];
            out.at(i + j) += term;
        }
    }
    return out;
}

int_series int_series::inverse() const {
    if (coef_[0] != 1)
        throw std::invalid_argument("series inverse needs constant term 1");
    int_series inv(order_);
    inv.at(0) = 1;
    // forward substitution: sum_{j=0}^{n} f(j) inv(n-j) = 0 for n >= 1
    for (int n = 1; n <= order_; ++n) {
        mpz_class acc = 0;
        for (int j = 1; j <= n; ++j) {
            if (sgn(coef_[j]) == 0) continue;
            acc += coef_[j] * inv[n - j];
        }
        inv.at(n) = -acc;
    }
    return inv;
}

int_series int_series::pow(unsigned long e) const {
    int_series result = int_series::one(order_);
    int_series base = *this;
    while (e > 0) {
        if (e & 1UL) result = result * base;
        e >>= 1UL;
        if (e > 0) base = base * base;
    }
    return result;
}

int_series eta_core(long long delta, int order) {
    if (delta < 1) throw std::invalid_argument("eta_core: delta must be >= 1");
    int_series out(order);
    out.at(0) = 1;
    // generalized pentagonal exponents k(3k-1)/2 for k = 1, -1, 2, -2, ...
    for (long long k = 1;; ++k) {
        long long e1 = delta * (k * (3 * k - 1) / 2);
        long long e2 = delta * (k * (3 * k + 1) / 2);
        if (e1 > order && e2 > order) break;
        int sign = (k % 2 == 0) ? 1 : -1;
        if (e1 <= order) out.at(static_cast<int>(e1)) += sign;
        if (e2 <= order) out.at(static_cast<int>(e2)) += sign;
    }
    return out;
}

long long eta_quotient_spec::level() const {
    long long l = 1;
    for (const auto& [delta, r] : terms)
        if (r != 0) l = std::lcm(l, delta);
    return l;
}

eta_quotient_expansion eta_quotient(const eta_quotient_spec& spec, int order) {
    long long lead24 = 0;
    for (const auto& [delta, r] : spec.terms) {
        if (delta < 1) throw std::invalid_argument("eta quotient: delta must be >= 1");
        lead24 += delta * r;
    }
    if (lead24 % 24 != 0) throw non_integral_lead(lead24);

    int_series prod = int_series::one(order);
    for (const auto& [delta, r] : spec.terms) {
        if (r == 0) continue;
        int_series core = eta_core(delta, order);
        if (r < 0) core = core.inverse();
        prod = prod * core.pow(static_cast<unsigned long>(std::llabs(r)));
    }
    return {lead24 / 24, std::move(prod)};
}

product_expansion product_exponents(const int_series& t) {
    const int order = t.order();
    if (order < 1 || t[0] != 0 || t[1] != 1)
        throw std::invalid_argument(
            "product_exponents: series must be q + O(q^2)");

    product_expansion pe;
    pe.order = order;
    pe.alpha.assign(static_cast<std::size_t>(order), 0);
    pe.c.assign(static_cast<std::size_t>(order), 0);

    // alpha(n) = -n t(n+1) - sum_{k<n} t(n-k+1) alpha(k); uses t(2..order)
    for (int n = 1; n < order; ++n) {
        mpz_class acc = -mpz_class(n) * t[n + 1];
        for (int k = 1; k < n; ++k) {
            if (sgn(t[n - k + 1]) == 0) continue;
            acc -= t[n - k + 1] * pe.alpha[k];
        }
        pe.alpha[n] = std::move(acc);
    }

    // Moebius inversion of alpha(n) = sum_{d|n} d c(d)
    mpz_class num, rem;
    for (int n = 1; n < order; ++n) {
        num = 0;
        for (long long d : divisors(n)) {
            int mu = moebius(n / d);
            if (mu == 1)
                num += pe.alpha[static_cast<std::size_t>(d)];
            else if (mu == -1)
                num -= pe.alpha[static_cast<std::size_t>(d)];
        }
        mpz_fdiv_qr_ui(pe.c[n].get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                       static_cast<unsigned long>(n));
        if (rem != 0) throw integrality_violation(n);
    }
    return pe;
}

namespace {

/* (1 - q^step)^e truncated at `order`, for arbitrary integer e: the binomial
 * series sum_j (-1)^j C(e, j) q^(step j) terminates at j = order/step. */
int_series binomial_power(int step, const mpz_class& e, int order) {
    int_series out(order);
    out.at(0) = 1;
    mpz_class binom = 1;
    for (int j = 1; j * step <= order; ++j) {
        binom *= e - (j - 1);
        mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                        static_cast<unsigned long>(j));
        if (j % 2 == 1)
            out.at(j * step) = -binom;
        else
            out.at(j * step) = binom;
    }
    return out;
}

}  // namespace

int_series expand_product(const std::vector<mpz_class>& c, int order) {
    int_series prod = int_series::one(order - 1 >= 0 ? order - 1 : 0);
    for (int n = 1; n < order && n < static_cast<int>(c.size()); ++n) {
        if (sgn(c[static_cast<std::size_t>(n)]) == 0) continue;
        prod = prod * binomial_power(n, c[static_cast<std::size_t>(n)], prod.order());
    }
    int_series out(order);
    for (int n = 0; n < order; ++n) out.at(n + 1) = prod[n];
    return out;
}

int_series expand_product(const product_expansion& pe, int order) {
    return expand_product(pe.c, order);
}

int_series ramanujan_tau(int order) {
    if (order < 1) throw std::invalid_argument("ramanujan_tau: order must be >= 1");
    int_series core = eta_core(1, order - 1).pow(24);
    int_series out(order);
    for (int n = 0; n < order; ++n) out.at(n + 1) = core[n];
    return out;
}

std::vector<double> weighted_divisor_growth(const product_expansion& pe,
                                            double alpha_exp) {
    std::vector<double> out;
    out.reserve(pe.order > 0 ? static_cast<std::size_t>(pe.order - 1) : 0);
    mpz_class acc;
    for (int n = 1; n < pe.order; ++n) {
        acc = 0;
        for (long long d : divisors(n))
            acc += to_mpz(d) * pe.c[static_cast<std::size_t>(d)];
        double mag = std::abs(acc.get_d());
        out.push_back(mag / std::pow(static_cast<double>(n), alpha_exp));
    }
    return out;
}

}  // namespace qformlab
