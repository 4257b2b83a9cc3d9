#include "qformlab/serialize.hpp"

namespace qformlab {

using nlohmann::json;

json to_json(const int_series& s, long long lead_exponent) {
    json coeffs = json::array();
    for (int n = 0; n <= s.order(); ++n) coeffs.push_back(s[n].get_str());
    return json{{"order", s.order()},
                {"lead_exponent", lead_exponent},
                {"coeffs", std::move(coeffs)}};
}

int_series int_series_from_json(const json& j) {
    int order = j.at("order").get<int>();
    int_series s(order);
    const auto& coeffs = j.at("coeffs");
    for (int n = 0; n <= order && n < static_cast<int>(coeffs.size()); ++n)
        s.at(n) = mpz_class(coeffs[static_cast<std::size_t>(n)].get<std::string>());
    return s;
}

json to_json(const rep_count_table& t) {
    return json{{"form", to_triple(t.form)},
                {"order", t.order},
                {"counts", t.counts}};
}

json to_json(const root_of_unity_series& s) {
    json terms = json::array();
    for (const auto& [m, coeff] : s.terms)
        terms.push_back(json::array({m, coeff.real(), coeff.imag()}));
    return json{{"D", s.level}, {"terms", std::move(terms)}};
}

json to_json(const validation_report& r) {
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(json{{"index", f.index},
                                {"n", f.n},
                                {"expected", f.expected},
                                {"got", f.got}});
    return json{{"D", r.bigD},
                {"order", r.order},
                {"checks_run", r.checks_run},
                {"failures", std::move(failures)},
                {"elapsed_ms", r.elapsed_ms}};
}

json to_json(const form_class_list& cl) {
    json forms = json::array();
    auto add = [&forms](const quad_form& q, const std::string& role) {
        forms.push_back(json{{"role", role},
                             {"form", to_triple(q)},
                             {"pretty", to_pretty(q)}});
    };
    add(cl.principal, "principal");
    if (cl.odd_class_number) {
        int r = 1;
        for (const auto& [qr, qbar] : cl.pairs) {
            add(qr, "Q" + std::to_string(r));
            add(qbar, "Q" + std::to_string(r) + "_conj");
            ++r;
        }
    } else {
        for (std::size_t i = 1; i < cl.all.size(); ++i)
            add(cl.all[i], "reduced");
    }
    return json{{"D", cl.bigD},
                {"h", cl.h},
                {"odd_class_number", cl.odd_class_number},
                {"forms", std::move(forms)}};
}

json to_json(const eta_search_result& r) {
    json sols = json::array();
    for (const auto& [i, j] : r.solutions) sols.push_back(json::array({i, j}));
    return json{{"D", r.bigD},
                {"cusp_form_only", r.cusp_form_only},
                {"solutions", std::move(sols)}};
}

json to_json(const pair_search_result& r) {
    json matches = json::array();
    for (const auto& [qs, qr] : r.matches)
        matches.push_back(json::array({to_triple(qs), to_triple(qr)}));
    return json{{"D", r.bigD}, {"order", r.order}, {"matches", std::move(matches)}};
}

json to_json(const growth_probe& p) {
    json j{{"max_abs_c", p.max_abs_c.get_str()}};
    if (p.first_exceed)
        j["first_exceed"] = *p.first_exceed;
    else
        j["first_exceed"] = nullptr;
    return j;
}

json to_json(const product_expansion& pe) {
    json alpha = json::array(), c = json::array();
    for (int n = 1; n < pe.order; ++n) {
        alpha.push_back(pe.alpha[static_cast<std::size_t>(n)].get_str());
        c.push_back(pe.c[static_cast<std::size_t>(n)].get_str());
    }
    return json{{"order", pe.order}, {"alpha", std::move(alpha)}, {"c", std::move(c)}};
}

}  // namespace qformlab
