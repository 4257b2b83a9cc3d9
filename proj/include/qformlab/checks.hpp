#ifndef QFORMLAB_CHECKS_HPP
#define QFORMLAB_CHECKS_HPP

#include <functional>
#include <string>
#include <vector>

#include "qformlab/fixtures.hpp"

namespace qformlab {

/* One named verification with its outcome; `detail` carries the first
 * counterexample on failure and summary numbers on success. */
struct check_result {
    std::string name;
    bool pass = false;
    std::string detail;
    double elapsed_ms = 0.0;
};

using check_fn = std::function<check_result()>;

/* Number of workers for fan-out: the QFORMLAB_THREADS environment variable
 * when set (clamped to >= 1), hardware concurrency otherwise. */
int worker_count();

/* Runs the checks across `threads` workers; results keep the input order. */
std::vector<check_result> run_checks(const std::vector<check_fn>& checks,
                                     int threads);

/* --- table reproduction ------------------------------------------------- */

/* Class-number-1 rows: enumeration finds exactly the listed form with the
 * listed w. */
check_result check_class1_rows(const fixture_set& fx);

/* A class-number-3 row: enumerated (Q0, Q1) match and the theta half
 * difference reproduces the printed coefficients below the truncation. */
check_result check_class3_row(const class3_row& row);

/* A class-number-5 row: (Q0, Q1, Q2) and both printed expansions. */
check_result check_class5_row(const class5_row& row);

/* The tabulated small Schoeneberg pairs agree with schoeneberg_pair(). */
check_result check_schoeneberg_fixture(const fixture_set& fx);

/* --- identities ---------------------------------------------------------- */

/* Closed formulas with eta-product t(n) vs brute-force lattice counts for
 * the three discriminant -23 classes, n <= order. */
check_result check_van_der_blij(int order);

/* rep_formula == rep_count_bruteforce for every form index, n <= order. */
check_result check_dual_oracle(long long bigD, int order);

/* a(n,Q0) + 2 sum a(n,Qr) - w sum_d (-D|d) == 0 for n <= order. */
check_result check_mass_formula(long long bigD, int order);

/* a(n,Q0) - a(n,Qr) == 2 t_r(n) on formula outputs, n <= order. */
check_result check_difference_identity(long long bigD, int order);

/* Product exponents of the -23 series: c(n) = 2 iff 23 | n else 1. */
check_result check_product_exponents_23(int order);

/* t_1(n) = tau(n) mod 23 for n <= order. */
check_result check_tau_congruence(int order);

/* Half theta difference of the Schoeneberg pair equals the eta product. */
check_result check_schoeneberg_identity(long long bigD, int order);

/* --- searches and probes -------------------------------------------------- */

/* Cusp-form eta search over all primes D < dmax: solutions are {(1,1)} for
 * D = 23 mod 24 and empty otherwise. */
check_result check_eta_search_sweep(long long dmax);

/* Pair search returns exactly one pair class and it matches the table. */
check_result check_pair_search(const fixture_set& fx, long long bigD, int order);

/* |c(n)| exceeds the threshold somewhere below `order` (reports where). */
check_result check_growth_probe(long long bigD, int order, long long threshold);

/* Vanishing orders (1, 1) at the two explicit cusps for every pair index,
 * with leading 1/1-coefficient magnitude 1/sqrt(D) within 1e-9. */
check_result check_cusp_orders(long long bigD, int m_bound);

/* expand_product(product_exponents(F)) == F for the corpus series at
 * `order`. */
check_result check_roundtrip_corpus(const fixture_set& fx, int order);

/* product_exponents(expand_product(c)) == c on random small exponent
 * vectors. */
check_result check_roundtrip_random(int cases, int max_order, unsigned seed);

/* --- suites --------------------------------------------------------------- */

std::vector<check_fn> tables_suite(const fixture_set& fx);
std::vector<check_fn> identities_suite(const fixture_set& fx);
std::vector<check_fn> search_suite(const fixture_set& fx);
std::vector<check_fn> full_suite(const fixture_set& fx);

}  // namespace qformlab

#endif
