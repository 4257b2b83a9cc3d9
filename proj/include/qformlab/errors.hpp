#ifndef QFORMLAB_ERRORS_HPP
#define QFORMLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qformlab {

/* Base class for all validation failures raised by the library. The CLI maps
 * these to exit code 2 and internal consistency failures to exit code 3. */
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/* -D is not congruent to 0 or 1 mod 4, so it is not a discriminant at all. */
struct not_a_discriminant : error {
    explicit not_a_discriminant(long long neg_d)
        : error("not a discriminant: " + std::to_string(neg_d) +
                " (must be 0 or 1 mod 4)") {}
};

/* -D is a discriminant but not fundamental (square-divisibility violation). */
struct not_fundamental : error {
    explicit not_fundamental(long long neg_d, const std::string& why)
        : error("not a fundamental discriminant: " + std::to_string(neg_d) +
                " (" + why + ")") {}
};

/* Operation defined only for D = 23 mod 24. */
struct wrong_residue : error {
    explicit wrong_residue(long long d)
        : error("D = " + std::to_string(d) + " is not 23 mod 24") {}
};

/* Two forms fed to a theta difference have different discriminants. */
struct discriminant_mismatch : error {
    discriminant_mismatch(long long d1, long long d2)
        : error("discriminant mismatch: " + std::to_string(d1) + " vs " +
                std::to_string(d2)) {}
};

/* Eta quotient whose q-power prefactor sum(delta * r_delta)/24 is not an
 * integer, so no integral-exponent series form exists. */
struct non_integral_lead : error {
    explicit non_integral_lead(long long num)
        : error("eta quotient lead exponent " + std::to_string(num) +
                "/24 is not integral") {}
};

/* The Moebius division in the product-exponent recurrence left a remainder;
 * signals an input series violating the integrality preconditions. */
struct integrality_violation : error {
    explicit integrality_violation(long long n)
        : error("product exponent c(" + std::to_string(n) +
                ") is not an integer") {}
};

/* A representation-number formula evaluated to a non-integer; only possible
 * on an inconsistent context. */
struct non_integral_result : error {
    non_integral_result(int index, long long n)
        : error("rep formula non-integral at form index " +
                std::to_string(index) + ", n = " + std::to_string(n)) {}
};

/* Operation excludes this input by definition (e.g. least represented values
 * of the principal form). */
struct not_applicable : error {
    explicit not_applicable(const std::string& msg) : error(msg) {}
};

}  // namespace qformlab

#endif
