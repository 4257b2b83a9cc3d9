#include "qformlab/checks.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "qformlab/classify.hpp"
#include "qformlab/ntheory.hpp"
#include "qformlab/repnum.hpp"
#include "qformlab/theta.hpp"

namespace qformlab {

namespace {

using clock_type = std::chrono::steady_clock;

/* Wraps a check body with timing and exception capture. */
check_result timed(const std::string& name,
                   const std::function<std::pair<bool, std::string>()>& body) {
    check_result out;
    out.name = name;
    auto start = clock_type::now();
    try {
        auto [pass, detail] = body();
        out.pass = pass;
        out.detail = std::move(detail);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail = std::string("exception: ") + e.what();
    }
    out.elapsed_ms =
        std::chrono::duration<double, std::milli>(clock_type::now() - start).count();
    return out;
}

std::string form_eq_detail(const quad_form& got, const quad_form& want) {
    return "got " + to_triple(got) + ", want " + to_triple(want);
}

/* Compares a computed series against a printed sparse expansion below its
 * truncation order. */
std::pair<bool, std::string> match_sparse(const int_series& s,
                                          const sparse_series& f) {
    for (int n = 1; n < f.trunc; ++n) {
        if (s[n] != static_cast<long>(f.coefficient(n))) {
            return {false, "coefficient of q^" + std::to_string(n) + ": got " +
                               s[n].get_str() + ", want " +
                               std::to_string(f.coefficient(n))};
        }
    }
    return {true, "matched through q^" + std::to_string(f.trunc - 1)};
}

}  // namespace

int worker_count() {
    if (const char* env = std::getenv("QFORMLAB_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc > 0 ? static_cast<int>(hc) : 1;
}

std::vector<check_result> run_checks(const std::vector<check_fn>& checks,
                                     int threads) {
    std::vector<check_result> results(checks.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < checks.size(); ++i) results[i] = checks[i]();
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= checks.size()) return;
            results[i] = checks[i]();
        }
    };
    std::vector<std::thread> pool;
    int n = std::min<int>(threads, static_cast<int>(checks.size()));
    pool.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    return results;
}

check_result check_class1_rows(const fixture_set& fx) {
    return timed("class number 1 table", [&]() -> std::pair<bool, std::string> {
        for (const auto& row : fx.class1) {
            form_class_list cl = enumerate_reduced(discriminant::of(-row.bigD));
            if (cl.h != 1)
                return {false, "D=" + std::to_string(row.bigD) + ": h=" +
                                   std::to_string(cl.h)};
            if (!(cl.principal == row.form))
                return {false, "D=" + std::to_string(row.bigD) + ": " +
                                   form_eq_detail(cl.principal, row.form)};
            if (units_w(discriminant::of(-row.bigD)) != row.w)
                return {false, "D=" + std::to_string(row.bigD) + ": wrong w"};
        }
        return {true, std::to_string(fx.class1.size()) + " rows"};
    });
}

check_result check_class3_row(const class3_row& row) {
    return timed("class number 3 table, D=" + std::to_string(row.bigD),
                 [&]() -> std::pair<bool, std::string> {
                     form_class_list cl =
                         enumerate_reduced(discriminant::of(-row.bigD));
                     if (cl.h != 3) return {false, "h=" + std::to_string(cl.h)};
                     if (!(cl.principal == row.q0))
                         return {false, form_eq_detail(cl.principal, row.q0)};
                     if (!(cl.pairs[0].first == row.q1))
                         return {false, form_eq_detail(cl.pairs[0].first, row.q1)};
                     int_series f = half_theta_difference(row.q0, row.q1,
                                                          row.f.trunc - 1);
                     return match_sparse(f, row.f);
                 });
}

check_result check_class5_row(const class5_row& row) {
    return timed("class number 5 table, D=" + std::to_string(row.bigD),
                 [&]() -> std::pair<bool, std::string> {
                     form_class_list cl =
                         enumerate_reduced(discriminant::of(-row.bigD));
                     if (cl.h != 5) return {false, "h=" + std::to_string(cl.h)};
                     if (!(cl.principal == row.q0))
                         return {false, form_eq_detail(cl.principal, row.q0)};
                     if (!(cl.pairs[0].first == row.q1))
                         return {false, form_eq_detail(cl.pairs[0].first, row.q1)};
                     if (!(cl.pairs[1].first == row.q2))
                         return {false, form_eq_detail(cl.pairs[1].first, row.q2)};
                     int_series f1 = half_theta_difference(row.q0, row.q1,
                                                           row.f1.trunc - 1);
                     auto [ok1, why1] = match_sparse(f1, row.f1);
                     if (!ok1) return {false, "F1: " + why1};
                     int_series f2 = half_theta_difference(row.q0, row.q2,
                                                           row.f2.trunc - 1);
                     auto [ok2, why2] = match_sparse(f2, row.f2);
                     if (!ok2) return {false, "F2: " + why2};
                     return {true, "both series matched"};
                 });
}

check_result check_schoeneberg_fixture(const fixture_set& fx) {
    return timed("Schoeneberg pair table", [&]() -> std::pair<bool, std::string> {
        for (const auto& row : fx.schoeneberg) {
            auto [qs, qr] = schoeneberg_pair(row.bigD);
            if (!(qs == row.qs) || !(qr == row.qr))
                return {false, "D=" + std::to_string(row.bigD) + ": got (" +
                                   to_triple(qs) + ", " + to_triple(qr) + ")"};
        }
        return {true, std::to_string(fx.schoeneberg.size()) + " rows"};
    });
}

check_result check_van_der_blij(int order) {
    return timed("van der Blij formulas, n <= " + std::to_string(order),
                 [&]() -> std::pair<bool, std::string> {
                     van_der_blij_tables vdb = make_van_der_blij(order);
                     quad_form q0{1, 1, 6}, q1{2, 1, 3}, q1bar{2, -1, 3};
                     for (long long n = 1; n <= order; ++n) {
                         auto [a0, a1] = vdb.values(n);
                         if (a0 != rep_count_bruteforce(q0, n))
                             return {false, "Q0 mismatch at n=" + std::to_string(n)};
                         if (a1 != rep_count_bruteforce(q1, n))
                             return {false, "Q1 mismatch at n=" + std::to_string(n)};
                         if (a1 != rep_count_bruteforce(q1bar, n))
                             return {false,
                                     "conjugate mismatch at n=" + std::to_string(n)};
                     }
                     return {true, std::to_string(3 * order) + " values agree"};
                 });
}

check_result check_dual_oracle(long long bigD, int order) {
    return timed("formula vs brute force, D=" + std::to_string(bigD),
                 [&]() -> std::pair<bool, std::string> {
                     validation_report r =
                         cross_validate(discriminant::of(-bigD), order);
                     if (!r.failures.empty()) {
                         const auto& f = r.failures.front();
                         return {false, "index " + std::to_string(f.index) + ", n=" +
                                            std::to_string(f.n) + ": formula " +
                                            std::to_string(f.got) + " vs brute " +
                                            std::to_string(f.expected)};
                     }
                     return {true, std::to_string(r.checks_run) + " checks"};
                 });
}

check_result check_mass_formula(long long bigD, int order) {
    return timed("mass formula, D=" + std::to_string(bigD),
                 [&]() -> std::pair<bool, std::string> {
                     rep_formula_context ctx =
                         make_rep_context(discriminant::of(-bigD), order);
                     for (long long n = 1; n <= order; ++n) {
                         long long res = mass_formula_residual(ctx, n);
                         if (res != 0)
                             return {false, "residual " + std::to_string(res) +
                                                " at n=" + std::to_string(n)};
                     }
                     return {true, std::to_string(order) + " residuals zero"};
                 });
}

check_result check_difference_identity(long long bigD, int order) {
    return timed("theta difference identity, D=" + std::to_string(bigD),
                 [&]() -> std::pair<bool, std::string> {
                     rep_formula_context ctx =
                         make_rep_context(discriminant::of(-bigD), order);
                     for (int r = 1; r <= ctx.k; ++r)
                         for (long long n = 1; n <= order; ++n) {
                             mpz_class lhs = to_mpz(rep_formula(ctx, 0, n) -
                                                    rep_formula(ctx, r, n));
                             if (lhs != 2 * ctx.t[static_cast<std::size_t>(r - 1)]
                                                 [static_cast<int>(n)])
                                 return {false, "r=" + std::to_string(r) +
                                                    ", n=" + std::to_string(n)};
                         }
                     return {true, "a(n,Q0) - a(n,Qr) = 2 t_r(n) throughout"};
                 });
}

check_result check_product_exponents_23(int order) {
    return timed("product exponent pattern, D=23",
                 [&]() -> std::pair<bool, std::string> {
                     quad_form q0{1, 1, 6}, q1{2, 1, 3};
                     int_series f = half_theta_difference(q0, q1, order + 1);
                     product_expansion pe = product_exponents(f);
                     for (int n = 1; n <= order; ++n) {
                         long expect = (n % 23 == 0) ? 2 : 1;
                         if (pe.c[static_cast<std::size_t>(n)] != expect)
                             return {false, "c(" + std::to_string(n) + ") = " +
                                                pe.c[static_cast<std::size_t>(n)]
                                                    .get_str()};
                     }
                     return {true, "c(n) = 2 iff 23 | n else 1, n <= " +
                                       std::to_string(order)};
                 });
}

check_result check_tau_congruence(int order) {
    return timed("tau congruence mod 23, n <= " + std::to_string(order),
                 [&]() -> std::pair<bool, std::string> {
                     int_series t =
                         half_theta_difference({1, 1, 6}, {2, 1, 3}, order);
                     int_series tau = ramanujan_tau(order);
                     for (int n = 1; n <= order; ++n) {
                         mpz_class diff = t[n] - tau[n];
                         if (diff % 23 != 0)
                             return {false, "n=" + std::to_string(n)};
                     }
                     return {true, "t(n) = tau(n) mod 23 throughout"};
                 });
}

check_result check_schoeneberg_identity(long long bigD, int order) {
    return timed("Schoeneberg identity, D=" + std::to_string(bigD),
                 [&]() -> std::pair<bool, std::string> {
                     if (!schoeneberg_identity_check(bigD, order))
                         return {false, "half difference != eta product"};
                     return {true, "matched to q^" + std::to_string(order)};
                 });
}

check_result check_eta_search_sweep(long long dmax) {
    return timed("eta quotient search, primes < " + std::to_string(dmax),
                 [&]() -> std::pair<bool, std::string> {
                     int hits = 0;
                     for (long long p = 2; p < dmax; ++p) {
                         if (!is_prime(p)) continue;
                         eta_search_result r = eta_quotient_search(p, true);
                         bool expect_hit = (p % 24 == 23);
                         if (expect_hit) {
                             if (r.solutions.size() != 1 ||
                                 r.solutions[0] != std::pair<long long, long long>{1, 1})
                                 return {false, "D=" + std::to_string(p) +
                                                    ": wrong solution set"};
                             ++hits;
                         } else if (!r.solutions.empty()) {
                             return {false, "D=" + std::to_string(p) +
                                                ": unexpected solutions"};
                         }
                     }
                     return {true, std::to_string(hits) + " discriminants hit"};
                 });
}

check_result check_pair_search(const fixture_set& fx, long long bigD, int order) {
    return timed("Schoeneberg pair search, D=" + std::to_string(bigD),
                 [&]() -> std::pair<bool, std::string> {
                     pair_search_result r = schoeneberg_pair_search(bigD, order);
                     if (r.matches.size() != 1)
                         return {false, std::to_string(r.matches.size()) +
                                            " pair classes found"};
                     for (const auto& row : fx.schoeneberg) {
                         if (row.bigD != bigD) continue;
                         if (!(r.matches[0].first == row.qs) ||
                             !(r.matches[0].second == row.qr))
                             return {false, "pair (" + to_triple(r.matches[0].first) +
                                                ", " + to_triple(r.matches[0].second) +
                                                ") differs from table"};
                         // proof-side invariant: the distinguishing value
                         long long lead = (bigD + 1) / 24;
                         int_series diff = half_theta_difference(
                             row.qs, row.qr, static_cast<int>(lead));
                         if (diff.valuation() != lead)
                             return {false, "leading exponent != (D+1)/24"};
                         return {true, "unique pair class, matches table"};
                     }
                     return {false, "D not in fixture table"};
                 });
}

check_result check_growth_probe(long long bigD, int order, long long threshold) {
    return timed("exponent growth probe, D=" + std::to_string(bigD),
                 [&]() -> std::pair<bool, std::string> {
                     growth_probe p = unboundedness_probe(
                         discriminant::of(-bigD), 1, order,
                         mpz_class(static_cast<long>(threshold)));
                     if (!p.first_exceed)
                         return {false, "max |c(n)| = " + p.max_abs_c.get_str() +
                                            " never exceeded " +
                                            std::to_string(threshold)};
                     return {true, "|c(n)| > " + std::to_string(threshold) +
                                       " first at n=" + std::to_string(*p.first_exceed) +
                                       ", max digits " +
                                       std::to_string(p.max_abs_c.get_str().size())};
                 });
}

check_result check_cusp_orders(long long bigD, int m_bound) {
    return timed("cusp vanishing orders, D=" + std::to_string(bigD),
                 [&]() -> std::pair<bool, std::string> {
                     discriminant d = discriminant::of(-bigD);
                     form_class_list cl = enumerate_reduced(d);
                     for (int r = 1; r <= static_cast<int>(cl.pairs.size()); ++r) {
                         cusp_orders o = cusp_vanishing_orders(d, r, m_bound);
                         if (o.at_infinity != 1 || o.at_one != 1)
                             return {false, "r=" + std::to_string(r) + ": orders (" +
                                                std::to_string(o.at_infinity) + ", " +
                                                std::to_string(o.at_one) + ")"};
                         double want = 1.0 / std::sqrt(static_cast<double>(bigD));
                         if (std::abs(o.leading_magnitude - want) > 1e-9)
                             return {false, "r=" + std::to_string(r) +
                                                ": leading magnitude off by " +
                                                std::to_string(std::abs(
                                                    o.leading_magnitude - want))};
                     }
                     return {true, "orders (1,1), magnitude 1/sqrt(D), all r"};
                 });
}

check_result check_roundtrip_corpus(const fixture_set& fx, int order) {
    return timed("product expansion round trip, corpus",
                 [&]() -> std::pair<bool, std::string> {
                     int count = 0;
                     auto one = [&](long long bigD, const quad_form& q0,
                                    const quad_form& qr) -> std::pair<bool, std::string> {
                         int_series f = half_theta_difference(q0, qr, order);
                         int_series back = expand_product(product_exponents(f), order);
                         if (!(back == f))
                             return {false, "round trip failed for D=" +
                                                std::to_string(bigD)};
                         ++count;
                         return {true, ""};
                     };
                     for (const auto& row : fx.class3a) {
                         auto r = one(row.bigD, row.q0, row.q1);
                         if (!r.first) return r;
                     }
                     for (const auto& row : fx.class3b) {
                         auto r = one(row.bigD, row.q0, row.q1);
                         if (!r.first) return r;
                     }
                     for (const auto& row : fx.class5) {
                         auto r = one(row.bigD, row.q0, row.q1);
                         if (!r.first) return r;
                         r = one(row.bigD, row.q0, row.q2);
                         if (!r.first) return r;
                     }
                     return {true, std::to_string(count) + " series, order " +
                                       std::to_string(order)};
                 });
}

check_result check_roundtrip_random(int cases, int max_order, unsigned seed) {
    return timed("product expansion round trip, random exponents",
                 [&]() -> std::pair<bool, std::string> {
                     std::mt19937 rng(seed);
                     std::uniform_int_distribution<int> coeff(-3, 3);
                     std::uniform_int_distribution<int> ord(8, max_order);
                     for (int t = 0; t < cases; ++t) {
                         int order = ord(rng);
                         std::vector<mpz_class> c(static_cast<std::size_t>(order));
                         for (int n = 1; n < order; ++n)
                             c[static_cast<std::size_t>(n)] = coeff(rng);
                         int_series f = expand_product(c, order);
                         product_expansion pe = product_exponents(f);
                         for (int n = 1; n < order; ++n)
                             if (pe.c[static_cast<std::size_t>(n)] !=
                                 c[static_cast<std::size_t>(n)])
                                 return {false, "case " + std::to_string(t) +
                                                    ": c(" + std::to_string(n) +
                                                    ") not recovered"};
                     }
                     return {true, std::to_string(cases) + " random vectors"};
                 });
}

std::vector<check_fn> tables_suite(const fixture_set& fx) {
    std::vector<check_fn> out;
    out.push_back([fx] { return check_class1_rows(fx); });
    for (const auto& row : fx.class3a)
        out.push_back([row] { return check_class3_row(row); });
    for (const auto& row : fx.class3b)
        out.push_back([row] { return check_class3_row(row); });
    for (const auto& row : fx.class5)
        out.push_back([row] { return check_class5_row(row); });
    out.push_back([fx] { return check_schoeneberg_fixture(fx); });
    return out;
}

std::vector<check_fn> identities_suite(const fixture_set& fx) {
    std::vector<check_fn> out;
    for (long long bigD : fx.all_discriminants()) {
        out.push_back([bigD] { return check_mass_formula(bigD, 500); });
        out.push_back([bigD] { return check_difference_identity(bigD, 200); });
    }
    out.push_back([] { return check_van_der_blij(2000); });
    out.push_back([] { return check_tau_congruence(1500); });
    out.push_back([] { return check_product_exponents_23(1000); });
    for (long long bigD : {23LL, 47LL, 71LL, 95LL, 119LL, 167LL, 191LL, 239LL})
        out.push_back([bigD] { return check_schoeneberg_identity(bigD, 1000); });
    return out;
}

std::vector<check_fn> search_suite(const fixture_set& fx) {
    std::vector<check_fn> out;
    for (long long bigD : fx.all_discriminants())
        out.push_back([bigD] { return check_dual_oracle(bigD, 500); });
    out.push_back([] { return check_eta_search_sweep(500); });
    for (long long bigD : {23LL, 47LL, 71LL})
        out.push_back([fx, bigD] { return check_pair_search(fx, bigD, 500); });
    for (long long bigD : {31LL, 47LL, 59LL})
        out.push_back([bigD] { return check_growth_probe(bigD, 300, 10); });
    for (long long bigD : {23LL, 31LL, 47LL})
        out.push_back([bigD] { return check_cusp_orders(bigD, 60); });
    out.push_back([fx] { return check_roundtrip_corpus(fx, 100); });
    out.push_back([] { return check_roundtrip_random(100, 64, 20230923u); });
    return out;
}

std::vector<check_fn> full_suite(const fixture_set& fx) {
    std::vector<check_fn> out = tables_suite(fx);
    for (auto& c : identities_suite(fx)) out.push_back(std::move(c));
    for (auto& c : search_suite(fx)) out.push_back(std::move(c));
    return out;
}

}  // namespace qformlab
