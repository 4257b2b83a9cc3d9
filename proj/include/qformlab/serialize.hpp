#ifndef QFORMLAB_SERIALIZE_HPP
#define QFORMLAB_SERIALIZE_HPP

#include <json.hpp>

#include "qformlab/classify.hpp"
#include "qformlab/qforms.hpp"
#include "qformlab/qseries.hpp"
#include "qformlab/repnum.hpp"
#include "qformlab/theta.hpp"

namespace qformlab {

/* JSON wire formats. Arbitrary-precision coefficients travel as decimal
 * strings; object keys are emitted sorted, so identical inputs serialize to
 * byte-identical documents. */

/* {order, lead_exponent, coeffs: ["...", ...]} with coeffs[n] the
 * coefficient of q^(n + lead_exponent). */
nlohmann::json to_json(const int_series& s, long long lead_exponent = 0);

/* Inverse of to_json(int_series): accepts the same schema. */
int_series int_series_from_json(const nlohmann::json& j);

/* {form: "a,b,c", order, counts: [...]} */
nlohmann::json to_json(const rep_count_table& t);

/* {D, terms: [[m, re, im], ...]} ordered by m. */
nlohmann::json to_json(const root_of_unity_series& s);

/* {D, order, checks_run, failures: [{index, n, expected, got}], elapsed_ms} */
nlohmann::json to_json(const validation_report& r);

nlohmann::json to_json(const form_class_list& cl);
nlohmann::json to_json(const eta_search_result& r);
nlohmann::json to_json(const pair_search_result& r);
nlohmann::json to_json(const growth_probe& p);
nlohmann::json to_json(const product_expansion& pe);

}  // namespace qformlab

#endif
