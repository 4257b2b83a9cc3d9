#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qformlab/fixtures.hpp"
#include "qformlab/ntheory.hpp"
#include "qformlab/theta.hpp"

using namespace qformlab;

TEST_CASE("rep_count_bruteforce spot values") {
    CHECK(rep_count_bruteforce({1, 1, 6}, 1) == 2);
    CHECK(rep_count_bruteforce({2, 1, 3}, 6) == 2);
    CHECK(rep_count_bruteforce({1, 0, 1}, 5) == 8);
    CHECK(rep_count_bruteforce({1, 0, 1}, 5) == 4 * (1 + kronecker(-4, 5)));
    CHECK(rep_count_bruteforce({1, 1, 6}, 0) == 1);
    CHECK(rep_count_bruteforce({2, 1, 3}, 1) == 0);
}

TEST_CASE("theta_series spot expansions") {
    rep_count_table t = theta_series({1, 1, 6}, 8);
    // a(6) = 4 at (0,1),(-1,1),(0,-1),(1,-1); a(8) = 4 at (1,1),(-2,1) and mirrors
    CHECK(t.counts == std::vector<long long>{1, 2, 0, 0, 2, 0, 4, 0, 4});
    rep_count_table two_squares = theta_series({1, 0, 1}, 4);
    CHECK(two_squares.counts == std::vector<long long>{1, 4, 4, 0, 4});
}

TEST_CASE("theta_series sweep agrees with per-n brute force") {
    for (const quad_form& q :
         {quad_form{1, 1, 6}, quad_form{2, 1, 3}, quad_form{3, 1, 4},
          quad_form{1, 0, 2}, quad_form{1, 1, 1}, quad_form{23, 13, 31},
          quad_form{17, -15, 29}}) {
        rep_count_table t = theta_series(q, 200);
        for (long long n = 0; n <= 200; ++n) {
            CAPTURE(to_triple(q));
            CAPTURE(n);
            CHECK(t.counts[static_cast<std::size_t>(n)] ==
                  rep_count_bruteforce(q, n));
        }
    }
}

TEST_CASE("two-oracle agreement over every form in the fixture corpus") {
    fixture_set fx = load_fixtures(default_fixture_dir());
    for (long long bigD : fx.all_discriminants()) {
        form_class_list cl = enumerate_reduced(discriminant::of(-bigD));
        for (const auto& q : cl.all) {
            rep_count_table t = theta_series(q, 200);
            for (long long n = 0; n <= 200; ++n) {
                if (t.counts[static_cast<std::size_t>(n)] !=
                    rep_count_bruteforce(q, n)) {
                    CAPTURE(bigD);
                    CAPTURE(to_triple(q));
                    CAPTURE(n);
                    FAIL("sweep and brute force disagree");
                }
            }
        }
    }
}

TEST_CASE("counts are even for n >= 1 and one at n = 0") {
    for (const quad_form& q : {quad_form{1, 1, 6}, quad_form{5, 3, 7}}) {
        rep_count_table t = theta_series(q, 150);
        CHECK(t.counts[0] == 1);
        for (int n = 1; n <= 150; ++n)
            CHECK(t.counts[static_cast<std::size_t>(n)] % 2 == 0);
    }
}

TEST_CASE("conjugate forms have identical theta series") {
    for (const quad_form& q :
         {quad_form{2, 1, 3}, quad_form{3, 1, 4}, quad_form{7, 5, 9}}) {
        rep_count_table a = theta_series(q, 120);
        rep_count_table b = theta_series(conjugate(q), 120);
        CHECK(a.counts == b.counts);
    }
}

TEST_CASE("least represented values of non-principal reduced forms") {
    for (long long bigD : {23LL, 47LL, 71LL}) {
        form_class_list cl = enumerate_reduced(discriminant::of(-bigD));
        for (const auto& [qr, qbar] : cl.pairs) {
            rep_count_table t = theta_series(qr, static_cast<int>(qr.c) + 1);
            int first = 0, second = 0;
            for (int n = 1; n <= t.order; ++n) {
                if (t.counts[static_cast<std::size_t>(n)] == 0) continue;
                if (first == 0) {
                    first = n;
                } else {
                    second = n;
                    break;
                }
            }
            CHECK(first == qr.a);
            // second smallest overall is min(4a, c): a*x^2 values can land
            // below c, e.g. (2,1,9) of discriminant -71 represents 8 < 9
            CHECK(second == std::min(4 * qr.a, qr.c));
        }
    }
}

TEST_CASE("half_theta_difference reproduces the tabulated expansions") {
    int_series f23 = half_theta_difference({1, 1, 6}, {2, 1, 3}, 25);
    std::vector<long> expect(26, 0);
    expect[1] = 1;
    expect[2] = -1;
    expect[3] = -1;
    expect[6] = 1;
    expect[8] = 1;
    expect[13] = -1;
    expect[16] = -1;
    expect[23] = 1;
    expect[24] = -1;
    expect[25] = 1;
    for (int n = 0; n <= 25; ++n) CHECK(f23[n] == expect[static_cast<std::size_t>(n)]);

    int_series f47 = half_theta_difference({1, 1, 12}, {2, 1, 6}, 20);
    std::vector<long> e47(21, 0);
    e47[1] = 1;
    e47[2] = -1;
    e47[4] = 1;
    e47[6] = -1;
    e47[7] = -1;
    e47[8] = -1;
    e47[12] = 1;
    e47[14] = 2;
    e47[18] = 1;
    for (int n = 0; n <= 20; ++n) CHECK(f47[n] == e47[static_cast<std::size_t>(n)]);
}

TEST_CASE("half_theta_difference edge cases") {
    quad_form q{2, 1, 3};
    int_series zero = half_theta_difference(q, conjugate(q), 100);
    CHECK(zero.valuation() == -1);
    CHECK_THROWS_AS(half_theta_difference({1, 1, 6}, {1, 1, 12}, 10),
                    discriminant_mismatch);
    int_series f = half_theta_difference({1, 1, 6}, {2, 1, 3}, 10);
    CHECK(f[0] == 0);
    CHECK(f[1] == 1);
}

TEST_CASE("cusp expansion at 1/1") {
    root_of_unity_series e = cusp_expansion_at_one({1, 1, 6}, 10);
    CHECK(e.level == 23);
    const double inv = 1.0 / std::sqrt(23.0);
    REQUIRE(e.terms.count(0) == 1);
    CHECK(e.terms.at(0).real() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(e.terms.at(0).imag() == doctest::Approx(-inv));
    REQUIRE(e.terms.count(1) == 1);
    CHECK(std::abs(e.terms.at(1)) == doctest::Approx(2.0 * inv));

    // magnitudes are a(m, Q)/sqrt(D) throughout
    rep_count_table counts = theta_series({1, 1, 6}, 10);
    for (const auto& [m, coeff] : e.terms)
        CHECK(std::abs(coeff) ==
              doctest::Approx(counts.counts[static_cast<std::size_t>(m)] * inv));

    // the non-principal form's first term after m = 0 sits at m = a = 2
    root_of_unity_series e2 = cusp_expansion_at_one({2, 1, 3}, 10);
    CHECK(e2.terms.count(1) == 0);
    CHECK(e2.terms.count(2) == 1);
}

TEST_CASE("cusp vanishing orders") {
    cusp_orders o23 = cusp_vanishing_orders(discriminant::of(-23), 1, 50);
    CHECK(o23.at_infinity == 1);
    CHECK(o23.at_one == 1);
    CHECK(o23.leading_magnitude == doctest::Approx(1.0 / std::sqrt(23.0)));

    cusp_orders o47 = cusp_vanishing_orders(discriminant::of(-47), 2, 50);
    CHECK(o47.at_infinity == 1);
    CHECK(o47.at_one == 1);
    CHECK(o47.leading_magnitude == doctest::Approx(1.0 / std::sqrt(47.0)));

    CHECK_THROWS(cusp_vanishing_orders(discriminant::of(-7), 1, 50));
}
