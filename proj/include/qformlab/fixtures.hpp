#ifndef QFORMLAB_FIXTURES_HPP
#define QFORMLAB_FIXTURES_HPP

#include <string>
#include <vector>

#include "qformlab/qforms.hpp"

namespace qformlab {

/* A q-expansion transcribed as printed: nonzero terms only, valid for
 * exponents 1 .. trunc-1 (everything unlisted below trunc is zero). */
struct sparse_series {
    int trunc = 0;
    std::vector<std::pair<int, long long>> terms;  // (exponent, coefficient)

    long long coefficient(int n) const {
        for (const auto& [e, v] : terms)
            if (e == n) return v;
        return 0;
    }
};

struct schoeneberg_row {
    long long bigD = 0;
    quad_form qs, qr;
};

struct class1_row {
    long long bigD = 0;
    quad_form form;
    int w = 2;
};

struct class3_row {
    long long bigD = 0;
    quad_form q0, q1;
    sparse_series f;
};

struct class5_row {
    long long bigD = 0;
    quad_form q0, q1, q2;
    sparse_series f1, f2;
};

/* The golden reference tables, loaded from the CSV files in the data
 * directory. class3a holds the class-number-3 discriminants with a
 * one-dimensional cusp space, class3b the three with a three-dimensional
 * one; class5 the class-number-5 rows with both expansions. */
struct fixture_set {
    std::vector<schoeneberg_row> schoeneberg;
    std::vector<class1_row> class1;
    std::vector<class3_row> class3a;
    std::vector<class3_row> class3b;
    std::vector<class5_row> class5;

    /* Every discriminant in the corpus, ascending. */
    std::vector<long long> all_discriminants() const;
};

/* Directory the fixtures were installed with (compiled in); a CLI flag may
 * point somewhere else. */
std::string default_fixture_dir();

fixture_set load_fixtures(const std::string& dir);

}  // namespace qformlab

#endif
