#pragma once

#include <string>

#include "json.hpp"

#include "eqeta/embedding.hpp"
#include "eqeta/eta_engine.hpp"
#include "eqeta/laurent_series.hpp"

namespace eqeta {

using Json = nlohmann::ordered_json;

// Integers are written as JSON integers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input. Floating-point
// numbers are always rejected with ParseError.
Json integer_to_json(const mpz_class& z);
mpz_class integer_from_json(const Json& j, const std::string& field);

/// [num, den]
Json rational_to_json(const Rational& q);
/// Accepts an integer, [num, den] or a "p/q" string.
Rational rational_from_json(const Json& j, const std::string& field);

/// [re_num, re_den, im_num, im_den]
Json gaussian_to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const Json& j, const std::string& field);

Json qvector_to_json(const QVector& v);
QVector qvector_from_json(const Json& j, const std::string& field);
Json qmatrix_to_json(const QMatrix& m);  // list of rows
QMatrix qmatrix_from_json(const Json& j, const std::string& field);

/// {valuation, reliable_degree, coefficients}
Json series_to_json(const LaurentSeries& s);
LaurentSeries series_from_json(const Json& j, const std::string& field);

Json report_to_json(const ValidationReport& r);
Json diagnostics_to_json(const EtaDiagnostics& d);

}  // namespace eqeta
