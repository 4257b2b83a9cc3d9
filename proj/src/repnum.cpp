#include "qformlab/repnum.hpp"

#include <chrono>
#include <stdexcept>

#include "qformlab/ntheory.hpp"
#include "qformlab/theta.hpp"

namespace qformlab {

rep_formula_context make_rep_context(const discriminant& d, int order,
                                     t_source source) {
    rep_formula_context ctx;
    ctx.bigD = d.magnitude();
    ctx.classes = enumerate_reduced(d);
    if (!ctx.classes.odd_class_number)
        throw std::invalid_argument("rep formulas need odd class number");
    ctx.k = static_cast<int>(ctx.classes.pairs.size());
    ctx.w = units_w(d);
    ctx.order = order;

    switch (source) {
        case t_source::theta_difference:
            for (const auto& [qr, qbar] : ctx.classes.pairs)
                ctx.t.push_back(half_theta_difference(ctx.classes.principal, qr, order));
            break;
        case t_source::eta_product_23: {
            if (ctx.bigD != 23)
                throw std::invalid_argument("eta product t-source is D = 23 only");
            eta_quotient_expansion e =
                eta_quotient({{{1, 1}, {23, 1}}}, order - 1);
            int_series t(order);
            for (int n = 0; n < order; ++n) t.at(n + 1) = e.series[n];
            ctx.t.push_back(std::move(t));
            break;
        }
    }
    for (const auto& table : ctx.t)
        if (table[1] != 1) throw std::logic_error("t table must start q + O(q^2)");
    return ctx;
}

long long rep_formula(const rep_formula_context& ctx, int form_index, long long n) {
    if (n < 1 || n > ctx.order)
        throw std::invalid_argument("rep_formula: n out of table range");
    if (form_index < 0 || form_index > ctx.k)
        throw std::invalid_argument("rep_formula: form index out of range");

    const long long sum_char = char_divisor_sum(n, ctx.bigD);
    if (ctx.k == 0) return ctx.w * sum_char;

    // numerators over the common denominator 2k+1
    mpz_class num = 2 * to_mpz(sum_char);
    if (form_index == 0) {
        for (int j = 0; j < ctx.k; ++j) num += 4 * ctx.t[j][static_cast<int>(n)];
    } else {
        for (int j = 0; j < ctx.k; ++j) {
            if (j == form_index - 1)
                num -= (4 * ctx.k - 2) * ctx.t[j][static_cast<int>(n)];
            else
                num += 4 * ctx.t[j][static_cast<int>(n)];
        }
    }
    const long long den = 2LL * ctx.k + 1;
    mpz_class quot, rem;
    mpz_fdiv_qr_ui(quot.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                   static_cast<unsigned long>(den));
    if (rem != 0 || quot < 0) throw non_integral_result(form_index, n);
    return static_cast<long long>(quot.get_si());
}

long long mass_formula_residual(const rep_formula_context& ctx, long long n) {
    if (n < 1 || n > ctx.order)
        throw std::invalid_argument("mass residual: n out of table range");
    long long lhs = rep_count_bruteforce(ctx.classes.principal, n);
    for (const auto& [qr, qbar] : ctx.classes.pairs)
        lhs += 2 * rep_count_bruteforce(qr, n);
    return lhs - ctx.w * char_divisor_sum(n, ctx.bigD);
}

van_der_blij_tables make_van_der_blij(int order) {
    van_der_blij_tables out;
    out.order = order;
    eta_quotient_expansion e = eta_quotient({{{1, 1}, {23, 1}}}, order - 1);
    int_series t(order);
    for (int n = 0; n < order; ++n) t.at(n + 1) = e.series[n];
    out.t = std::move(t);
    return out;
}

std::pair<long long, long long> van_der_blij_tables::values(long long n) const {
    if (n < 1 || n > order)
        throw std::invalid_argument("van der Blij: n out of table range");
    const long long s = char_divisor_sum(n, 23);
    const mpz_class& tn = t[static_cast<int>(n)];
    mpz_class num0 = 2 * to_mpz(s) + 4 * tn;
    mpz_class num1 = 2 * to_mpz(s) - 2 * tn;
    mpz_class q0, q1, r0, r1;
    mpz_fdiv_qr_ui(q0.get_mpz_t(), r0.get_mpz_t(), num0.get_mpz_t(), 3);
    mpz_fdiv_qr_ui(q1.get_mpz_t(), r1.get_mpz_t(), num1.get_mpz_t(), 3);
    if (r0 != 0 || r1 != 0 || q0 < 0 || q1 < 0)
        throw non_integral_result(0, n);
    return {q0.get_si(), q1.get_si()};
}

std::pair<long long, long long> van_der_blij(long long n, int order) {
    return make_van_der_blij(order).values(n);
}

validation_report cross_validate(const discriminant& d, int order) {
    auto start = std::chrono::steady_clock::now();
    validation_report report;
    report.bigD = d.magnitude();
    report.order = order;

    rep_formula_context ctx = make_rep_context(d, order);
    std::vector<quad_form> reps;
    reps.push_back(ctx.classes.principal);
    for (const auto& [qr, qbar] : ctx.classes.pairs) reps.push_back(qr);

    for (int index = 0; index <= ctx.k; ++index) {
        for (long long n = 1; n <= order; ++n) {
            long long brute = rep_count_bruteforce(reps[static_cast<std::size_t>(index)], n);
            long long formula = rep_formula(ctx, index, n);
            ++report.checks_run;
            if (brute != formula)
                report.failures.push_back({index, n, brute, formula});
        }
    }
    auto stop = std::chrono::steady_clock::now();
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
    return report;
}

}  // namespace qformlab
