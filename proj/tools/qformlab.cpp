#include <CLI11.hpp>

#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

#include "qformlab/checks.hpp"
#include "qformlab/classify.hpp"
#include "qformlab/fixtures.hpp"
#include "qformlab/ntheory.hpp"
#include "qformlab/qforms.hpp"
#include "qformlab/repnum.hpp"
#include "qformlab/serialize.hpp"
#include "qformlab/theta.hpp"

namespace {

using namespace qformlab;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::string series_pretty(const int_series& s, int from) {
    std::string out;
    for (int n = from; n <= s.order(); ++n) {
        if (sgn(s[n]) == 0) continue;
        mpz_class mag = abs(s[n]);
        if (out.empty())
            out += (sgn(s[n]) < 0 ? "-" : "");
        else
            out += (sgn(s[n]) < 0 ? " - " : " + ");
        if (mag != 1) out += mag.get_str() + "*";
        out += "q";
        if (n != 1) out += "^" + std::to_string(n);
    }
    if (out.empty()) out = "0";
    return out + " + O(q^" + std::to_string(s.order() + 1) + ")";
}

int cmd_forms(long long bigD, const std::string& format) {
    form_class_list cl = enumerate_reduced(discriminant::of(-bigD));
    if (format == "json") {
        emit(to_json(cl));
    } else if (format == "csv") {
        std::cout << "role,a,b,c\n";
        json j = to_json(cl);
        for (const auto& f : j["forms"])
            std::cout << f["role"].get<std::string>() << ","
                      << f["form"].get<std::string>() << "\n";
    } else {
        int w = units_w(discriminant::of(-bigD));
        std::printf("discriminant -%lld: h = %lld, w = %d%s\n", bigD, cl.h, w,
                    cl.odd_class_number ? "" : " (even class number)");
        json j = to_json(cl);
        for (const auto& f : j["forms"])
            std::printf("  %-8s %-12s %s\n", f["role"].get<std::string>().c_str(),
                        f["form"].get<std::string>().c_str(),
                        f["pretty"].get<std::string>().c_str());
    }
    return kExitOk;
}

int cmd_repcount(long long bigD, int index, long long n, const std::string& method,
                 const std::string& format) {
    discriminant d = discriminant::of(-bigD);
    form_class_list cl = enumerate_reduced(d);
    if (index < 0 || index > static_cast<int>(cl.pairs.size()))
        throw std::invalid_argument("form index out of range");
    quad_form q = index == 0 ? cl.principal
                             : cl.pairs[static_cast<std::size_t>(index - 1)].first;

    long long brute = -1, formula = -1;
    if (method == "brute" || method == "both") brute = rep_count_bruteforce(q, n);
    if (method == "formula" || method == "both") {
        rep_formula_context ctx = make_rep_context(d, static_cast<int>(n));
        formula = rep_formula(ctx, index, n);
    }
    if (format == "json") {
        json j{{"D", bigD}, {"index", index}, {"n", n}, {"form", to_triple(q)}};
        if (brute >= 0) j["brute"] = brute;
        if (formula >= 0) j["formula"] = formula;
        emit(j);
    } else {
        if (brute >= 0) std::printf("brute: %lld\n", brute);
        if (formula >= 0) std::printf("formula: %lld\n", formula);
    }
    if (method == "both" && brute != formula) {
        std::cerr << "error: oracle mismatch (brute " << brute << ", formula "
                  << formula << ")\n";
        return kExitMismatch;
    }
    return kExitOk;
}

int default_fdr_order(const fixture_set& fx, long long bigD, int r) {
    for (const auto& row : fx.class3a)
        if (row.bigD == bigD) return row.f.trunc - 1;
    for (const auto& row : fx.class3b)
        if (row.bigD == bigD) return row.f.trunc - 1;
    for (const auto& row : fx.class5)
        if (row.bigD == bigD) return (r == 2 ? row.f2.trunc : row.f1.trunc) - 1;
    return 25;
}

int cmd_fdr(long long bigD, int r, int order, const std::string& format,
            const std::string& fixture_dir) {
    discriminant d = discriminant::of(-bigD);
    form_class_list cl = enumerate_reduced(d);
    if (!cl.odd_class_number || cl.h < 3) {
        std::cerr << "error: need odd class number >= 3 (h = " << cl.h << ")\n";
        return kExitInput;
    }
    if (r < 1 || r > static_cast<int>(cl.pairs.size()))
        throw std::invalid_argument("pair index out of range");
    if (order <= 0) order = default_fdr_order(load_fixtures(fixture_dir), bigD, r);

    int_series f = half_theta_difference(
        cl.principal, cl.pairs[static_cast<std::size_t>(r - 1)].first, order);
    if (format == "json") {
        emit(to_json(f));
    } else if (format == "csv") {
        std::cout << "n,t\n";
        for (int n = 1; n <= order; ++n)
            std::cout << n << "," << f[n].get_str() << "\n";
    } else {
        std::printf("F_{%lld,%d} = %s\n", bigD, r, series_pretty(f, 1).c_str());
    }
    return kExitOk;
}

int cmd_product_exponents(long long bigD, int r, int order, long long threshold,
                          bool with_alpha, const std::string& format) {
    discriminant d = discriminant::of(-bigD);
    form_class_list cl = enumerate_reduced(d);
    if (!cl.odd_class_number || cl.h < 3) {
        std::cerr << "error: need odd class number >= 3 (h = " << cl.h << ")\n";
        return kExitInput;
    }
    if (r < 1 || r > static_cast<int>(cl.pairs.size()))
        throw std::invalid_argument("pair index out of range");

    int_series f = half_theta_difference(
        cl.principal, cl.pairs[static_cast<std::size_t>(r - 1)].first, order + 1);
    product_expansion pe = product_exponents(f);

    if (threshold > 0) {
        growth_probe p = unboundedness_probe(
            d, r, order + 1, mpz_class(static_cast<long>(threshold)));
        if (format == "json") {
            json j = to_json(p);
            j["D"] = bigD;
            j["order"] = order;
            emit(j);
        } else {
            std::printf("max |c(n)| for n <= %d: %s\n", order,
                        p.max_abs_c.get_str().c_str());
            if (p.first_exceed)
                std::printf("first n with |c(n)| > %lld: %d\n", threshold,
                            *p.first_exceed);
            else
                std::printf("threshold %lld never exceeded\n", threshold);
        }
        return kExitOk;
    }

    if (format == "json") {
        json j = to_json(pe);
        j["D"] = bigD;
        if (!with_alpha) j.erase("alpha");
        emit(j);
    } else if (format == "csv") {
        std::cout << (with_alpha ? "n,c,alpha\n" : "n,c\n");
        for (int n = 1; n <= order; ++n) {
            std::cout << n << "," << pe.c[static_cast<std::size_t>(n)].get_str();
            if (with_alpha)
                std::cout << "," << pe.alpha[static_cast<std::size_t>(n)].get_str();
            std::cout << "\n";
        }
    } else {
        std::printf("c(1..%d):", order);
        for (int n = 1; n <= order; ++n)
            std::printf(" %s", pe.c[static_cast<std::size_t>(n)].get_str().c_str());
        std::printf("\n");
    }
    return kExitOk;
}

int cmd_eta_search(long long bigD, bool holomorphic, const std::string& format) {
    eta_search_result r = eta_quotient_search(bigD, !holomorphic);
    if (format == "json") {
        emit(to_json(r));
    } else {
        if (r.solutions.empty()) {
            std::printf("no eta quotients of level %lld\n", bigD);
        } else {
            for (const auto& [i, j] : r.solutions)
                std::printf("eta(z)^%lld * eta(%lldz)^%lld\n", i, bigD, j);
        }
    }
    return kExitOk;
}

int cmd_schoeneberg(long long bigD, int order, bool search,
                    const std::string& format) {
    if (search) {
        pair_search_result r = schoeneberg_pair_search(bigD, order);
        if (format == "json") {
            emit(to_json(r));
        } else {
            std::printf("%zu pair class(es) with half theta difference = "
                        "eta(z)eta(%lldz):\n",
                        r.matches.size(), bigD);
            for (const auto& [qs, qr] : r.matches)
                std::printf("  {(%s), (%s)}\n", to_triple(qs).c_str(),
                            to_triple(qr).c_str());
        }
        return r.matches.size() == 1 ? kExitOk : kExitMismatch;
    }
    auto [qs, qr] = schoeneberg_pair(bigD);
    bool ok = schoeneberg_identity_check(bigD, order);
    if (format == "json") {
        emit(json{{"D", bigD},
                  {"order", order},
                  {"qs", to_triple(qs)},
                  {"qr", to_triple(qr)},
                  {"identity_holds", ok}});
    } else {
        std::printf("pair (%s), (%s): identity %s to q^%d\n",
                    to_triple(qs).c_str(), to_triple(qr).c_str(),
                    ok ? "holds" : "FAILS", order);
    }
    return ok ? kExitOk : kExitMismatch;
}

int cmd_zero_mass(long long bigD, const std::string& format) {
    mpq_class mass = interior_zero_mass(bigD);
    if (format == "json")
        emit(json{{"D", bigD}, {"mass", mass.get_str()}});
    else
        std::printf("%s\n", mass.get_str().c_str());
    return kExitOk;
}

int cmd_verify(const std::string& suite, const std::string& fixture_dir,
               const std::string& format) {
    fixture_set fx = load_fixtures(fixture_dir);
    std::vector<check_fn> checks;
    if (suite == "tables")
        checks = tables_suite(fx);
    else if (suite == "identities")
        checks = identities_suite(fx);
    else if (suite == "search")
        checks = search_suite(fx);
    else if (suite == "all")
        checks = full_suite(fx);
    else
        throw std::invalid_argument("unknown suite: " + suite);

    std::vector<check_result> results = run_checks(checks, worker_count());
    int failed = 0;
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : results) {
            arr.push_back(json{{"name", r.name},
                               {"pass", r.pass},
                               {"detail", r.detail},
                               {"elapsed_ms", r.elapsed_ms}});
            if (!r.pass) ++failed;
        }
        emit(json{{"suite", suite}, {"checks", std::move(arr)}});
    } else {
        for (const auto& r : results) {
            std::printf("[%s] %-45s %s (%.1f ms)\n", r.pass ? "PASS" : "FAIL",
                        r.name.c_str(), r.detail.c_str(), r.elapsed_ms);
            if (!r.pass) ++failed;
        }
        std::printf("%zu checks, %d failed\n", results.size(), failed);
    }
    if (failed > 0) {
        for (const auto& r : results)
            if (!r.pass) {
                std::cerr << "first failing check: " << r.name << "\n";
                break;
            }
        return kExitMismatch;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"binary quadratic form representation numbers, theta series, "
                 "and eta quotient identities"};
    app.require_subcommand(1);

    std::string format = "text";
    std::string fixture_dir = default_fixture_dir();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--fixtures", fixture_dir, "fixture data directory")
        ->capture_default_str();

    std::function<int()> run;

    long long bigD = 0;
    int index = 0, pair_r = 1;
    int fdr_order = 0, pexp_order = 100, sch_order = 1000;
    long long nval = 1, threshold = 0;
    std::string method = "formula", suite = "all";
    bool search = false, holomorphic = false, with_alpha = false;

    auto add_sub = [&app](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        return sub;
    };

    auto* forms = add_sub("forms", "reduced forms and class number");
    forms->add_option("-D,--discriminant", bigD, "discriminant magnitude")->required();
    forms->callback([&] { run = [&] { return cmd_forms(bigD, format); }; });

    auto* repcount = add_sub("repcount", "representation number a(n, Q)");
    repcount->add_option("-D,--discriminant", bigD)->required();
    repcount->add_option("-i,--index", index, "form index (0 = principal)")
        ->capture_default_str();
    repcount->add_option("-n", nval, "represented integer")->required();
    repcount->add_option("--method", method, "brute | formula | both")
        ->check(CLI::IsMember({"brute", "formula", "both"}))
        ->capture_default_str();
    repcount->callback(
        [&] { run = [&] { return cmd_repcount(bigD, index, nval, method, format); }; });

    auto* fdr = add_sub("fdr", "coefficients t_r(n) of the theta half difference");
    fdr->add_option("-D,--discriminant", bigD)->required();
    fdr->add_option("-r,--index", pair_r, "conjugate pair index")->capture_default_str();
    fdr->add_option("-N,--order", fdr_order,
                    "truncation order (default: the tabulated truncation)");
    fdr->callback([&] {
        run = [&] { return cmd_fdr(bigD, pair_r, fdr_order, format, fixture_dir); };
    });

    auto* pexp = add_sub("product-exponents",
                         "exponents c(n) with F = q prod (1-q^n)^c(n)");
    pexp->add_option("-D,--discriminant", bigD)->required();
    pexp->add_option("-r,--index", pair_r)->capture_default_str();
    pexp->add_option("-N,--order", pexp_order, "largest n")->capture_default_str();
    pexp->add_option("--threshold", threshold,
                     "growth probe: report max |c(n)| and first n above this");
    pexp->add_flag("--alpha", with_alpha, "include the alpha(n) intermediates");
    pexp->callback([&] {
        run = [&] {
            return cmd_product_exponents(bigD, pair_r, pexp_order, threshold,
                                         with_alpha, format);
        };
    });

    auto* eta = add_sub("eta-search", "weight-1 eta quotients of prime level D");
    eta->add_option("-D,--discriminant", bigD)->required();
    eta->add_flag("--holomorphic", holomorphic,
                  "allow non-cuspidal (order-zero) quotients");
    eta->callback([&] { run = [&] { return cmd_eta_search(bigD, holomorphic, format); }; });

    auto* sch = add_sub("schoeneberg",
                        "Schoeneberg pair and the eta product identity");
    sch->add_option("-D,--discriminant", bigD)->required();
    sch->add_option("-N,--order", sch_order, "truncation order")->capture_default_str();
    sch->add_flag("--search", search, "exhaustive pair search instead");
    sch->callback(
        [&] { run = [&] { return cmd_schoeneberg(bigD, sch_order, search, format); }; });

    auto* mass = add_sub("zero-mass",
                         "weighted interior zero count (D-1)(D-23)/24");
    mass->add_option("-D,--discriminant", bigD)->required();
    mass->callback([&] { run = [&] { return cmd_zero_mass(bigD, format); }; });

    auto* verify = add_sub("verify", "run a verification suite");
    verify->add_option("--suite", suite, "tables | identities | search | all")
        ->check(CLI::IsMember({"tables", "identities", "search", "all"}))
        ->capture_default_str();
    verify->callback([&] { run = [&] { return cmd_verify(suite, fixture_dir, format); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        return run ? run() : kExitInput;
    } catch (const qformlab::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}
