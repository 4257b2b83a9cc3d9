#include "qformlab/classify.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "qformlab/ntheory.hpp"
#include "qformlab/theta.hpp"

namespace qformlab {

eta_search_result eta_quotient_search(long long bigD, bool cusp_form_only) {
    if (bigD < 2 || !is_prime(bigD))
        throw std::invalid_argument("eta search: D must be prime");
    eta_search_result out;
    out.bigD = bigD;
    out.cusp_form_only = cusp_form_only;

    // Level-D quotients of weight 1 are eta(z)^i eta(Dz)^j with i + j = 2.
    // Non-negativity of the two cusp orders (i + Dj)/24 and (Di + j)/24
    // confines i to a short interval around 0; scan it and keep the pairs
    // where both orders are non-negative (positive for cusp forms) integers.
    const long long lo = -2 / (bigD - 1) - 2;
    const long long hi = 2 * bigD / (bigD - 1) + 2;
    const long long min24 = cusp_form_only ? 24 : 0;
    for (long long i = lo; i <= hi; ++i) {
        long long j = 2 - i;
        long long ord_inf = i + bigD * j;   // 24 * order at infinity
        long long ord_one = bigD * i + j;   // 24 * order at 1/1
        if (ord_inf < min24 || ord_one < min24) continue;
        if (ord_inf % 24 != 0 || ord_one % 24 != 0) continue;
        out.solutions.emplace_back(i, j);
    }
    return out;
}

namespace {

/* Half theta difference of (qs, qr) compared against eta(z) eta(Dz). */
bool matches_eta_product(const quad_form& qs, const quad_form& qr,
                         const int_series& eta_series, long long lead,
                         int order) {
    int_series diff = half_theta_difference(qs, qr, order);
    for (int n = 0; n <= order; ++n) {
        const mpz_class& expect =
            (n >= lead && n - lead <= eta_series.order())
                ? eta_series[static_cast<int>(n - lead)]
                : mpz_class(0);
        if (diff[n] != expect) return false;
    }
    return true;
}

}  // namespace

bool schoeneberg_identity_check(long long bigD, int order) {
    auto [qs, qr] = schoeneberg_pair(bigD);  // throws wrong_residue
    eta_quotient_expansion e = eta_quotient({{{1, 1}, {bigD, 1}}}, order);
    return matches_eta_product(qs, qr, e.series, e.lead, order);
}

pair_search_result schoeneberg_pair_search(long long bigD, int order) {
    if (bigD % 24 != 23) throw wrong_residue(bigD);
    if (!is_prime(bigD))
        throw std::invalid_argument("pair search: D must be prime");
    pair_search_result out;
    out.bigD = bigD;
    out.order = order;

    form_class_list classes = enumerate_reduced(discriminant::of(-bigD));
    eta_quotient_expansion e = eta_quotient({{{1, 1}, {bigD, 1}}}, order);

    // theta series depend only on (a, |b|, c): conjugate duplicates in the
    // scan collapse to one pair class keyed by the b >= 0 representatives
    auto class_key = [](const quad_form& q) {
        return quad_form{q.a, std::abs(q.b), q.c};
    };
    std::vector<std::pair<quad_form, quad_form>> found;
    const auto& forms = classes.all;
    for (std::size_t s = 0; s < forms.size(); ++s) {
        for (std::size_t r = s + 1; r < forms.size(); ++r) {
            // unordered pair: swapping the forms negates the difference, so
            // try both orientations against the (+1-leading) eta product
            if (matches_eta_product(forms[s], forms[r], e.series, e.lead, order) ||
                matches_eta_product(forms[r], forms[s], e.series, e.lead, order)) {
                quad_form ks = class_key(forms[s]);
                quad_form kr = class_key(forms[r]);
                auto key_less = [](const quad_form& x, const quad_form& y) {
                    return std::tuple(x.a, x.c, x.b) < std::tuple(y.a, y.c, y.b);
                };
                if (key_less(kr, ks)) std::swap(ks, kr);
                found.emplace_back(ks, kr);
            }
        }
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    out.matches = std::move(found);
    return out;
}

growth_probe unboundedness_probe(const discriminant& d, int r, int order,
                                 const mpz_class& threshold) {
    form_class_list classes = enumerate_reduced(d);
    if (!classes.odd_class_number || classes.h < 3)
        throw std::invalid_argument("growth probe: need odd class number >= 3");
    if (r < 1 || r > static_cast<int>(classes.pairs.size()))
        throw std::invalid_argument("growth probe: pair index out of range");

    int_series f = half_theta_difference(
        classes.principal, classes.pairs[static_cast<std::size_t>(r - 1)].first,
        order);
    product_expansion pe = product_exponents(f);

    growth_probe out;
    out.max_abs_c = 0;
    mpz_class mag;
    for (int n = 1; n < pe.order; ++n) {
        mag = abs(pe.c[static_cast<std::size_t>(n)]);
        if (mag > out.max_abs_c) out.max_abs_c = mag;
        if (!out.first_exceed && mag > threshold) out.first_exceed = n;
    }
    return out;
}

mpq_class interior_zero_mass(long long bigD) {
    if (!is_prime(bigD) || bigD % 4 != 3)
        throw std::invalid_argument("zero mass: D must be a prime 3 mod 4");
    mpq_class mass(to_mpz(bigD - 1) * to_mpz(bigD - 23), mpz_class(24));
    mass.canonicalize();
    return mass;
}

}  // namespace qformlab
