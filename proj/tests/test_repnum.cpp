#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qformlab/repnum.hpp"
#include "qformlab/theta.hpp"

using namespace qformlab;

TEST_CASE("rep_formula spot values") {
    rep_formula_context c23 = make_rep_context(discriminant::of(-23), 60);
    CHECK(rep_formula(c23, 0, 1) == 2);
    CHECK(rep_formula(c23, 1, 2) == 2);
    CHECK(rep_formula(c23, 0, 2) == 0);

    rep_formula_context c3 = make_rep_context(discriminant::of(-3), 10);
    CHECK(rep_formula(c3, 0, 1) == 6);
    CHECK(rep_count_bruteforce({1, 1, 1}, 1) == 6);

    rep_formula_context c4 = make_rep_context(discriminant::of(-4), 10);
    CHECK(rep_formula(c4, 0, 5) == 8);
}

TEST_CASE("rep_formula equals brute force on small ranges") {
    for (long long bigD : {23LL, 31LL, 47LL, 163LL, 4LL, 8LL}) {
        discriminant d = discriminant::of(-bigD);
        validation_report r = cross_validate(d, 120);
        CAPTURE(bigD);
        CHECK(r.failures.empty());
        form_class_list cl = enumerate_reduced(d);
        CHECK(r.checks_run == 120 * (1 + static_cast<long long>(cl.pairs.size())));
    }
}

TEST_CASE("rep_formula is invariant under conjugating the pair member") {
    rep_formula_context ctx = make_rep_context(discriminant::of(-47), 100);
    for (int r = 1; r <= ctx.k; ++r) {
        const auto& [qr, qbar] = ctx.classes.pairs[static_cast<std::size_t>(r - 1)];
        for (long long n = 1; n <= 100; ++n) {
            long long formula = rep_formula(ctx, r, n);
            CHECK(formula == rep_count_bruteforce(qr, n));
            CHECK(formula == rep_count_bruteforce(qbar, n));
        }
    }
}

TEST_CASE("difference identity on formula outputs") {
    for (long long bigD : {23LL, 47LL}) {
        rep_formula_context ctx = make_rep_context(discriminant::of(-bigD), 100);
        for (int r = 1; r <= ctx.k; ++r)
            for (long long n = 1; n <= 100; ++n) {
                long long diff = rep_formula(ctx, 0, n) - rep_formula(ctx, r, n);
                CHECK(to_mpz(diff) ==
                      2 * ctx.t[static_cast<std::size_t>(r - 1)][static_cast<int>(n)]);
            }
    }
}

TEST_CASE("mass formula residual vanishes") {
    rep_formula_context c23 = make_rep_context(discriminant::of(-23), 120);
    CHECK(mass_formula_residual(c23, 6) == 0);
    for (long long n = 1; n <= 120; ++n) CHECK(mass_formula_residual(c23, n) == 0);

    rep_formula_context c7 = make_rep_context(discriminant::of(-7), 50);
    CHECK(mass_formula_residual(c7, 2) == 0);
    for (long long n = 1; n <= 50; ++n) CHECK(mass_formula_residual(c7, n) == 0);

    rep_formula_context c4 = make_rep_context(discriminant::of(-4), 50);
    for (long long n = 1; n <= 50; ++n) CHECK(mass_formula_residual(c4, n) == 0);
}

TEST_CASE("van der Blij values") {
    van_der_blij_tables vdb = make_van_der_blij(60);
    CHECK(vdb.values(1) == std::pair<long long, long long>{2, 0});
    CHECK(vdb.values(2) == std::pair<long long, long long>{0, 2});
    auto [a0_23, a1_23] = vdb.values(23);
    CHECK(a0_23 == rep_count_bruteforce({1, 1, 6}, 23));
    CHECK(a1_23 == rep_count_bruteforce({2, 1, 3}, 23));
    CHECK(vdb.t[23] == 1);
    CHECK(van_der_blij(2, 10) == std::pair<long long, long long>{0, 2});
}

TEST_CASE("van der Blij agrees with brute force over a medium range") {
    van_der_blij_tables vdb = make_van_der_blij(300);
    for (long long n = 1; n <= 300; ++n) {
        auto [a0, a1] = vdb.values(n);
        CHECK(a0 == rep_count_bruteforce({1, 1, 6}, n));
        CHECK(a1 == rep_count_bruteforce({2, 1, 3}, n));
        CHECK(a1 == rep_count_bruteforce({2, -1, 3}, n));
    }
}

TEST_CASE("the two t sources agree for D = 23") {
    rep_formula_context theta_ctx =
        make_rep_context(discriminant::of(-23), 150, t_source::theta_difference);
    rep_formula_context eta_ctx =
        make_rep_context(discriminant::of(-23), 150, t_source::eta_product_23);
    CHECK(theta_ctx.t[0] == eta_ctx.t[0]);
    CHECK_THROWS(make_rep_context(discriminant::of(-47), 50,
                                  t_source::eta_product_23));
}

TEST_CASE("a corrupted context raises non_integral_result") {
    rep_formula_context ctx = make_rep_context(discriminant::of(-23), 20);
    ctx.t[0].at(5) += 1;
    CHECK_THROWS_AS(rep_formula(ctx, 0, 5), non_integral_result);
}

TEST_CASE("context validation") {
    CHECK_THROWS(make_rep_context(discriminant::of(-87), 10));  // h = 6
    rep_formula_context ctx = make_rep_context(discriminant::of(-23), 20);
    CHECK_THROWS(rep_formula(ctx, 0, 0));
    CHECK_THROWS(rep_formula(ctx, 0, 21));
    CHECK_THROWS(rep_formula(ctx, 2, 1));
}
