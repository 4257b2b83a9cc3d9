#ifndef QFORMLAB_NTHEORY_HPP
#define QFORMLAB_NTHEORY_HPP

#include <cstdint>
#include <map>
#include <vector>

namespace qformlab {

/* Prime -> exponent map; keys ascending, product reconstructs the input. */
using factor_map = std::map<long long, int>;

/* Trial-division factorization. Inputs are desk scale (< 10^7 or so). */
factor_map factorize(long long n);

bool is_prime(long long n);

/* Ascending list of all positive divisors of n. */
std::vector<long long> divisors(long long n);

bool is_squarefree(long long n);

/* Moebius function, n >= 1. */
int moebius(long long n);

/* Kronecker symbol (a|n), defined for all integer pairs. At n = 0 the value
 * is 1 iff a = +-1 and 0 otherwise. */
int kronecker(long long a, long long n);

/* sum over d | n of kronecker(-D, d) -- the twisted divisor sum in the
 * representation-number formulas. */
long long char_divisor_sum(long long n, long long bigD);

}  // namespace qformlab

#endif
