#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qformlab/fixtures.hpp"
#include "qformlab/serialize.hpp"
#include "qformlab/theta.hpp"

using namespace qformlab;

TEST_CASE("fixture files load with the expected shape") {
    fixture_set fx = load_fixtures(default_fixture_dir());
    CHECK(fx.class1.size() == 9);
    CHECK(fx.class3a.size() == 13);
    CHECK(fx.class3b.size() == 3);
    CHECK(fx.class5.size() == 25);
    CHECK(fx.schoeneberg.size() == 5);

    CHECK(fx.class1.front().bigD == 3);
    CHECK(fx.class1.back().bigD == 163);
    CHECK(fx.class1.back().form == quad_form{1, 1, 41});

    const class3_row& r23 = fx.class3a.front();
    CHECK(r23.bigD == 23);
    CHECK(r23.q0 == quad_form{1, 1, 6});
    CHECK(r23.q1 == quad_form{2, 1, 3});
    CHECK(r23.f.trunc == 26);
    CHECK(r23.f.coefficient(1) == 1);
    CHECK(r23.f.coefficient(2) == -1);
    CHECK(r23.f.coefficient(4) == 0);
    CHECK(r23.f.coefficient(25) == 1);

    const class5_row& r47 = fx.class5.front();
    CHECK(r47.bigD == 47);
    CHECK(r47.q2 == quad_form{3, 1, 4});
    CHECK(r47.f2.coefficient(3) == -1);

    CHECK(fx.all_discriminants().size() == 9 + 13 + 3 + 25);
    CHECK(fx.all_discriminants().front() == 3);
    CHECK(fx.all_discriminants().back() == 2683);
}

TEST_CASE("schoeneberg fixture rows agree with the built-in pairs") {
    fixture_set fx = load_fixtures(default_fixture_dir());
    for (const auto& row : fx.schoeneberg) {
        auto [qs, qr] = schoeneberg_pair(row.bigD);
        CHECK(qs == row.qs);
        CHECK(qr == row.qr);
    }
}

TEST_CASE("missing fixture directory fails loudly") {
    CHECK_THROWS(load_fixtures("/nonexistent/path"));
}

TEST_CASE("four table cells are forced by the lattice oracle") {
    // These coefficients are pinned straight from brute-force lattice counts;
    // the fixture rows must carry them.
    fixture_set fx = load_fixtures(default_fixture_dir());

    auto half_diff_at = [](quad_form q0, quad_form qr, long long n) {
        return (rep_count_bruteforce(q0, n) - rep_count_bruteforce(qr, n)) / 2;
    };

    // D = 47: t_1(14) = (4 - 0)/2 = 2
    CHECK(rep_count_bruteforce({1, 1, 12}, 14) == 4);
    CHECK(rep_count_bruteforce({2, 1, 6}, 14) == 0);
    for (const auto& row : fx.class5)
        if (row.bigD == 47) CHECK(row.f1.coefficient(14) == 2);

    // D = 79: t_1(11) = (0 - 2)/2 = -1
    CHECK(half_diff_at({1, 1, 20}, {2, 1, 10}, 11) == -1);
    for (const auto& row : fx.class5)
        if (row.bigD == 79) CHECK(row.f1.coefficient(11) == -1);

    // D = 179: the second pair form is (5,1,9); (5,1,7) has discriminant -139
    CHECK(discriminant_of({5, 1, 7}) == -139);
    CHECK(discriminant_of({5, 1, 9}) == -179);
    form_class_list cl179 = enumerate_reduced(discriminant::of(-179));
    REQUIRE(cl179.pairs.size() == 2);
    CHECK(cl179.pairs[1].first == quad_form{5, 1, 9});
    // t_2(9) = 0 distinguishes (5,1,9) from (5,1,7), which would give +q^9
    CHECK(half_diff_at({1, 1, 45}, {5, 1, 9}, 9) == 0);
    CHECK(half_diff_at({1, 1, 45}, cl179.pairs[1].first, 5) == -1);

    // D = 1051: t_2(44) = (0 - 2)/2 = -1
    CHECK(half_diff_at({1, 1, 263}, {11, 7, 25}, 44) == -1);
    for (const auto& row : fx.class5)
        if (row.bigD == 1051) CHECK(row.f2.coefficient(44) == -1);
}

TEST_CASE("int_series json round trip") {
    int_series s = half_theta_difference({1, 1, 6}, {2, 1, 3}, 30);
    nlohmann::json j = to_json(s);
    CHECK(j["order"] == 30);
    CHECK(j["lead_exponent"] == 0);
    CHECK(j["coeffs"][1] == "1");
    CHECK(j["coeffs"][2] == "-1");
    int_series back = int_series_from_json(j);
    CHECK(back == s);
}

TEST_CASE("big coefficients survive the decimal-string wire format") {
    int_series s(2);
    s.at(0) = mpz_class("123456789012345678901234567890123456789");
    s.at(1) = mpz_class("-98765432109876543210987654321");
    int_series back = int_series_from_json(to_json(s));
    CHECK(back == s);
}

TEST_CASE("rep table and cusp series json shapes") {
    rep_count_table t = theta_series({1, 1, 6}, 8);
    nlohmann::json jt = to_json(t);
    CHECK(jt["form"] == "1,1,6");
    CHECK(jt["order"] == 8);
    CHECK(jt["counts"].size() == 9);

    root_of_unity_series e = cusp_expansion_at_one({1, 1, 6}, 5);
    nlohmann::json je = to_json(e);
    CHECK(je["D"] == 23);
    for (const auto& triple : je["terms"]) REQUIRE(triple.size() == 3);
}

TEST_CASE("json output is byte-identical across invocations") {
    auto render = [] {
        int_series s = half_theta_difference({1, 1, 12}, {2, 1, 6}, 40);
        return to_json(s).dump(2);
    };
    CHECK(render() == render());

    auto render_cusp = [] {
        return to_json(cusp_expansion_at_one({2, 1, 3}, 12)).dump(2);
    };
    CHECK(render_cusp() == render_cusp());
}
