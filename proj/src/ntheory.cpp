#include "qformlab/ntheory.hpp"

#include <stdexcept>
#include <utility>

namespace qformlab {

factor_map factorize(long long n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    factor_map out;
    for (long long p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (long long p = 3; p * p <= n; p += 2)
        if (n % p == 0) return false;
    return true;
}

std::vector<long long> divisors(long long n) {
    if (n < 1) throw std::invalid_argument("divisors: n must be >= 1");
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_squarefree(long long n) {
    if (n < 1) throw std::invalid_argument("is_squarefree: n must be >= 1");
    for (const auto& [p, e] : factorize(n))
        if (e > 1) return false;
    return true;
}

int moebius(long long n) {
    if (n < 1) throw std::invalid_argument("moebius: n must be >= 1");
    int parity = 0;
    for (const auto& [p, e] : factorize(n)) {
        if (e > 1) return 0;
        parity ^= 1;
    }
    return parity ? -1 : 1;
}

int kronecker(long long a, long long n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;

    int k = 1;
    // strip the even part of n; (a|2) is the 2-adic rule on a mod 8
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos % 2 == 1) {
        long long a8 = ((a % 8) + 8) % 8;
        if (a8 == 3 || a8 == 5) k = -k;
        // a8 in {1,7}: factor +1; even a was excluded above
    }
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    // Jacobi symbol (a|n) for odd n > 0 by quadratic reciprocity
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            long long n8 = n % 8;
            if (n8 == 3 || n8 == 5) k = -k;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) k = -k;
        a %= n;
    }
    return n == 1 ? k : 0;
}

long long char_divisor_sum(long long n, long long bigD) {
    long long sum = 0;
    for (long long d : divisors(n)) sum += kronecker(-bigD, d);
    return sum;
}

}  // namespace qformlab
