#ifndef QFORMLAB_REPNUM_HPP
#define QFORMLAB_REPNUM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qformlab/qforms.hpp"
#include "qformlab/qseries.hpp"

namespace qformlab {

/* Where the t_r(n) tables feeding the closed formulas come from. The theta
 * half-differences are the definitional source; the D = 23 eta product is
 * the alternative that keeps the van der Blij check independent of the
 * lattice enumeration. */
enum class t_source {
    theta_difference,
    eta_product_23,  // q prod (1-q^n)(1-q^23n); valid only for D = 23
};

/* Everything the closed formulas need for one discriminant: the class list
 * (k conjugate pairs), w, and the coefficient tables t_1..t_k up to `order`.
 * Each table satisfies t_j(1) = 1. */
struct rep_formula_context {
    long long bigD = 0;
    form_class_list classes;
    int k = 0;
    int w = 2;
    int order = 0;
    std::vector<int_series> t;  // t[j-1] is the table for pair j
};

rep_formula_context make_rep_context(const discriminant& d, int order,
                                     t_source source = t_source::theta_difference);

/* a(n, Q_index) from the closed formula: index 0 is the principal form,
 * index r in 1..k the r-th conjugate pair. All arithmetic is exact integer
 * arithmetic over the common denominator 2k+1; a non-integral or negative
 * value raises non_integral_result (impossible on a valid context). */
long long rep_formula(const rep_formula_context& ctx, int form_index, long long n);

/* a(n,Q0) + 2 sum_r a(n,Qr) - w sum_{d|n} (-D|d) with brute-force counts on
 * the left; identically zero. */
long long mass_formula_residual(const rep_formula_context& ctx, long long n);

/* The discriminant -23 closed formulas with t(n) from the eta product:
 * returns (a(n, x^2+xy+6y^2), a(n, 2x^2+xy+3y^2)). */
struct van_der_blij_tables {
    int order = 0;
    int_series t{0};  // eta-product coefficients t(1..order)
    std::pair<long long, long long> values(long long n) const;
};

van_der_blij_tables make_van_der_blij(int order);

std::pair<long long, long long> van_der_blij(long long n, int order);

/* Formula-vs-bruteforce sweep over every form index and every n <= order. */
struct validation_report {
    long long bigD = 0;
    int order = 0;
    long long checks_run = 0;
    struct mismatch {
        int index = 0;
        long long n = 0;
        long long expected = 0;  // brute force
        long long got = 0;       // formula
    };
    std::vector<mismatch> failures;
    double elapsed_ms = 0.0;
};

validation_report cross_validate(const discriminant& d, int order);

}  // namespace qformlab

#endif
