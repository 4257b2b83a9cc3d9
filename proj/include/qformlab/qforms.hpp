#ifndef QFORMLAB_QFORMS_HPP
#define QFORMLAB_QFORMS_HPP

#include <string>
#include <utility>
#include <vector>

#include "qformlab/errors.hpp"

namespace qformlab {

/* Integral binary quadratic form a x^2 + b xy + c y^2. */
struct quad_form {
    long long a = 0;
    long long b = 0;
    long long c = 0;

    long long eval(long long x, long long y) const {
        return a * x * x + b * x * y + c * y * y;
    }

    bool operator==(const quad_form&) const = default;
    bool operator<(const quad_form& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

/* b^2 - 4ac, with overflow checking. */
long long discriminant_of(const quad_form& q);

bool is_positive_definite(const quad_form& q);
bool is_primitive(const quad_form& q);

/* Validated negative fundamental discriminant -D, carried as the positive
 * magnitude D with its parity class cached. */
class discriminant {
  public:
    /* Validates neg_d < 0: throws not_a_discriminant when neg_d is 2 or 3
     * mod 4, not_fundamental on a square-divisibility violation. */
    static discriminant of(long long neg_d);

    long long magnitude() const { return d_; }   // D > 0
    long long value() const { return -d_; }      // the discriminant -D
    int mod4() const { return static_cast<int>(d_ % 4); }
    bool odd() const { return d_ % 2 == 1; }

  private:
    explicit discriminant(long long d) : d_(d) {}
    long long d_;
};

enum class fundamental_status { ok, not_a_discriminant, not_fundamental };

/* Non-throwing version of discriminant::of for input validation paths. */
fundamental_status classify_discriminant(long long neg_d);

/* Reduced form test: |b| <= a <= c with b >= 0 when |b| = a or a = c. */
bool is_reduced(const quad_form& q);

/* Gauss reduction: alternately translate b into (-a, a] and swap when
 * a > c; returns the unique reduced form properly equivalent to q. */
quad_form reduce(quad_form q);

/* (a, -b, c): the inverse class, same theta series. */
quad_form conjugate(const quad_form& q);

quad_form principal_form(const discriminant& d);

/* All reduced forms of discriminant -D.
 *
 * For odd class number: `principal` first, then the k conjugate pairs
 * (Q_r, conjugate(Q_r)) sorted by (a, c, |b|) with the b > 0 member as Q_r;
 * `all` lists them in that order. For even class number the pair structure
 * is not defined here: `pairs` is left empty, `odd_class_number` is false,
 * and `all` holds the principal form followed by the rest sorted by
 * (a, c, |b|, b). */
struct form_class_list {
    long long bigD = 0;
    quad_form principal;
    std::vector<std::pair<quad_form, quad_form>> pairs;
    std::vector<quad_form> all;
    long long h = 0;
    bool odd_class_number = false;
};

form_class_list enumerate_reduced(const discriminant& d);

long long class_number(const discriminant& d);

/* Number of roots of unity in Q(sqrt(-D)): 6 for D = 3, 4 for D = 4, else 2. */
int units_w(const discriminant& d);

/* The two smallest nonzero values a reduced non-principal form of odd
 * fundamental discriminant represents with coprime coordinates: (a, c).
 * a is also the minimum over all representations; c need not be second
 * overall, since a*x^2 can land below it (imprimitively) when 4a < c.
 * Throws not_applicable for the principal form. */
std::pair<long long, long long> min_nonzero_values(const quad_form& q);

/* The pair of reduced forms of discriminant -D (D = 23 mod 24) whose half
 * theta difference is the weight-1 eta product of level D. For
 * (D+1)/24 >= 6 this is (6, 1, (D+1)/24), (6, 5, (D+25)/24); the finitely
 * many smaller cases come from a built-in table. Throws wrong_residue. */
std::pair<quad_form, quad_form> schoeneberg_pair(long long bigD);

/* Text I/O: "a,b,c" triple notation and the pretty polynomial form. */
std::string to_triple(const quad_form& q);
std::string to_pretty(const quad_form& q);   // e.g. "2x^2-xy+3y^2"
quad_form parse_triple(const std::string& s);

}  // namespace qformlab

#endif
