#ifndef QFORMLAB_CLASSIFY_HPP
#define QFORMLAB_CLASSIFY_HPP

#include <gmpxx.h>

#include <optional>
#include <utility>
#include <vector>

#include "qformlab/qforms.hpp"
#include "qformlab/qseries.hpp"

namespace qformlab {

/* Exponent pairs (i, j), i + j = 2, for which eta(z)^i eta(Dz)^j is
 * holomorphic at the two cusps of prime level D (cusp_form_only demands
 * strict vanishing). For cusp forms the answer is {(1,1)} exactly when
 * D = 23 mod 24 and empty otherwise. */
struct eta_search_result {
    long long bigD = 0;
    bool cusp_form_only = true;
    std::vector<std::pair<long long, long long>> solutions;
};

eta_search_result eta_quotient_search(long long bigD, bool cusp_form_only);

/* Whether the half theta difference of the Schoeneberg pair of -D equals
 * the level-D eta product coefficient-for-coefficient up to q^order.
 * D = 23 mod 24; primality/odd class number is not required. */
bool schoeneberg_identity_check(long long bigD, int order);

/* Exhaustive scan over unordered pairs of distinct reduced forms of
 * discriminant -D testing the eta-product identity to q^order. Matches are
 * reported as pair classes: conjugating either member does not change the
 * theta series, so each class is represented by forms with b >= 0, the
 * smaller (a, c, |b|) first. */
struct pair_search_result {
    long long bigD = 0;
    int order = 0;
    std::vector<std::pair<quad_form, quad_form>> matches;
};

pair_search_result schoeneberg_pair_search(long long bigD, int order);

/* Growth probe for the product exponents of F_{D,r}: the maximum of |c(n)|
 * over n < order and the first n where it exceeds the threshold. */
struct growth_probe {
    mpz_class max_abs_c;
    std::optional<int> first_exceed;
};

growth_probe unboundedness_probe(const discriminant& d, int r, int order,
                                 const mpz_class& threshold);

/* The weighted count of interior zeros of F_{D,r} on a fundamental domain,
 * (D-1)(D-23)/24 as an exact rational: zero for D = 23 and positive for
 * every larger prime D = 3 mod 4. */
mpq_class interior_zero_mass(long long bigD);

}  // namespace qformlab

#endif
