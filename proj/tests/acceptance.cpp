// Acceptance suite: runs every gate criterion end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qformlab/checks.hpp"
#include "qformlab/fixtures.hpp"

using namespace qformlab;

namespace {

struct criterion_outcome {
    bool pass = true;
    std::string detail;
    double elapsed_ms = 0.0;
};

/* Runs a group of checks as one criterion with an overall time budget. */
criterion_outcome run_group(const std::vector<check_fn>& checks,
                            double budget_ms) {
    criterion_outcome out;
    for (const auto& fn : checks) {
        check_result r = fn();
        out.elapsed_ms += r.elapsed_ms;
        if (!r.pass) {
            out.pass = false;
            out.detail = r.name + ": " + r.detail;
            return out;
        }
    }
    if (budget_ms > 0 && out.elapsed_ms > budget_ms) {
        out.pass = false;
        out.detail = "time budget exceeded (" + std::to_string(out.elapsed_ms) +
                     " ms > " + std::to_string(budget_ms) + " ms)";
    }
    return out;
}

}  // namespace

int main() {
    fixture_set fx = load_fixtures(default_fixture_dir());
    std::vector<long long> corpus = fx.all_discriminants();

    int failures = 0;
    int number = 0;
    auto report = [&](const std::string& name, const criterion_outcome& o) {
        ++number;
        std::printf("[%s] criterion %2d: %-55s %s(%.0f ms)\n",
                    o.pass ? "PASS" : "FAIL", number, name.c_str(),
                    o.pass ? "" : (o.detail + " ").c_str(), o.elapsed_ms);
        if (!o.pass) ++failures;
    };

    // 1. class-number-3 (dim 1) table rows, exact, < 1 s per row
    {
        criterion_outcome total;
        for (const auto& row : fx.class3a) {
            check_result r = check_class3_row(row);
            total.elapsed_ms += r.elapsed_ms;
            if (!r.pass) {
                total.pass = false;
                total.detail = r.name + ": " + r.detail;
                break;
            }
            if (r.elapsed_ms > 1000.0) {
                total.pass = false;
                total.detail = r.name + ": row exceeded 1 s";
                break;
            }
        }
        report("class-number-3 expansions reproduce the table", total);
    }

    // 2. class-number-5 table rows, both series, < 10 s total
    {
        std::vector<check_fn> checks;
        for (const auto& row : fx.class5)
            checks.push_back([row] { return check_class5_row(row); });
        report("class-number-5 expansions reproduce the table",
               run_group(checks, 10000.0));
    }

    // 3. van der Blij formulas vs brute force, n <= 2000, < 5 s
    report("van der Blij formulas, eta-sourced t, n <= 2000",
           run_group({[] { return check_van_der_blij(2000); }}, 5000.0));

    // 4. formula vs brute force across the whole corpus, n <= 500, < 60 s
    {
        std::vector<check_fn> checks;
        for (long long bigD : corpus)
            checks.push_back([bigD] { return check_dual_oracle(bigD, 500); });
        report("closed formula matches brute force, full corpus",
               run_group(checks, 60000.0));
    }

    // 5. mass formula residual zero over the same corpus and range
    {
        std::vector<check_fn> checks;
        for (long long bigD : corpus)
            checks.push_back([bigD] { return check_mass_formula(bigD, 500); });
        report("mass formula residual vanishes, full corpus",
               run_group(checks, 0.0));
    }

    // 6. product exponents for -23: c(n) = 2 iff 23 | n else 1, n <= 1000
    report("level-23 product exponent pattern, n <= 1000",
           run_group({[] { return check_product_exponents_23(1000); }}, 0.0));

    // 7. growth probe: |c(n)| passes 10 below n = 300 for D = 31, 47, 59; < 10 s
    {
        std::vector<check_fn> checks;
        for (long long bigD : {31LL, 47LL, 59LL})
            checks.push_back([bigD] { return check_growth_probe(bigD, 300, 10); });
        report("exponent growth exceeds threshold, D = 31, 47, 59",
               run_group(checks, 10000.0));
    }

    // 8. t(n) = tau(n) mod 23 for n <= 1500
    report("tau congruence mod 23, n <= 1500",
           run_group({[] { return check_tau_congruence(1500); }}, 0.0));

    // 9. eta quotient search over all primes < 500, < 1 s
    report("cusp eta quotients exist iff D = 23 mod 24, primes < 500",
           run_group({[] { return check_eta_search_sweep(500); }}, 1000.0));

    // 10. Schoeneberg identities at N = 1000 and uniqueness search at N = 500,
    //     < 60 s
    {
        std::vector<check_fn> checks;
        for (long long bigD : {23LL, 47LL, 71LL, 95LL, 119LL, 167LL, 191LL, 239LL})
            checks.push_back(
                [bigD] { return check_schoeneberg_identity(bigD, 1000); });
        for (long long bigD : {23LL, 47LL, 71LL})
            checks.push_back([&fx, bigD] { return check_pair_search(fx, bigD, 500); });
        report("Schoeneberg identities and pair uniqueness",
               run_group(checks, 60000.0));
    }

    // 11. cusp vanishing orders (1, 1) with leading magnitude 1/sqrt(D)
    {
        std::vector<check_fn> checks;
        for (long long bigD : {23LL, 31LL, 47LL})
            checks.push_back([bigD] { return check_cusp_orders(bigD, 60); });
        report("cusp orders (1,1) and leading magnitude, D = 23, 31, 47",
               run_group(checks, 0.0));
    }

    // 12. product expansion round trips: corpus series at N = 100 and 100
    //     random exponent vectors at N <= 64
    {
        std::vector<check_fn> checks;
        checks.push_back([&fx] { return check_roundtrip_corpus(fx, 100); });
        checks.push_back([] { return check_roundtrip_random(100, 64, 20230923u); });
        report("product expansion round trips", run_group(checks, 0.0));
    }

    std::printf("%d of %d criteria passed\n", number - failures, number);
    return failures == 0 ? 0 : 1;
}
