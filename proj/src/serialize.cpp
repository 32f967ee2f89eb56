#include "eqeta/serialize.hpp"

#include <limits>

#include "eqeta/errors.hpp"

namespace eqeta {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  fail(ErrorKind::ParseError, "field '" + field + "': " + what);
}

}  // namespace

Json integer_to_json(const mpz_class& z) {
  if (z >= std::numeric_limits<long>::min() && z <= std::numeric_limits<long>::max()) {
    return Json(static_cast<std::int64_t>(z.get_si()));
  }
  return Json(z.get_str());
}

mpz_class integer_from_json(const Json& j, const std::string& field) {
  if (j.is_number_float()) bad(field, "floating-point numbers are not accepted");
  if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const Rational q = parse_rational(s);
    if (q.get_den() != 1 || s.find('/') != std::string::npos) bad(field, "expected an integer");
    return q.get_num();
  }
  bad(field, "expected an integer");
}

Json rational_to_json(const Rational& q) {
  return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const Json& j, const std::string& field) {
  if (j.is_number_float()) bad(field, "floating-point numbers are not accepted");
  if (j.is_number_integer()) return Rational(integer_from_json(j, field));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const EtaError& e) {
      bad(field, e.what());
    }
  }
  if (j.is_array() && j.size() == 2) {
    const mpz_class num = integer_from_json(j[0], field);
    const mpz_class den = integer_from_json(j[1], field);
    if (den == 0) bad(field, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  bad(field, "expected a rational as [num, den]");
}

Json gaussian_to_json(const GaussianRational& z) {
  return Json::array({integer_to_json(z.real().get_num()), integer_to_json(z.real().get_den()),
                      integer_to_json(z.imag().get_num()), integer_to_json(z.imag().get_den())});
}

GaussianRational gaussian_from_json(const Json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 4) bad(field, "expected [re_num, re_den, im_num, im_den]");
  return {rational_from_json(Json::array({j[0], j[1]}), field),
          rational_from_json(Json::array({j[2], j[3]}), field)};
}

Json qvector_to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

QVector qvector_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected a list of rationals");
  QVector v;
  for (std::size_t i = 0; i < j.size(); ++i) {
    v.push_back(rational_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  }
  return v;
}

Json qmatrix_to_json(const QMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(qvector_to_json(m.row(i)));
  return out;
}

QMatrix qmatrix_from_json(const Json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected a list of rows");
  std::vector<QVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(qvector_from_json(j[i], field + "[" + std::to_string(i) + "]"));
  }
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) bad(field, "rows have different lengths");
  return QMatrix::from_rows(rows, cols);
}

Json series_to_json(const LaurentSeries& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coefficients()) coeffs.push_back(gaussian_to_json(c));
  Json out;
  out["valuation"] = s.is_zero() ? Json(nullptr) : Json(s.valuation());
  out["reliable_degree"] = s.reliable_degree();
  out["coefficients"] = std::move(coeffs);
  return out;
}

LaurentSeries series_from_json(const Json& j, const std::string& field) {
  if (!j.is_object()) bad(field, "expected a series object");
  if (!j.contains("reliable_degree") || !j.contains("coefficients")) {
    bad(field, "series needs reliable_degree and coefficients");
  }
  const auto rel = integer_from_json(j["reliable_degree"], field + ".reliable_degree");
  if (!rel.fits_sint_p()) bad(field, "reliable_degree out of range");
  const Json& val_json = j.contains("valuation") ? j["valuation"] : Json(nullptr);
  int val = 0;
  if (!val_json.is_null()) {
    const auto v = integer_from_json(val_json, field + ".valuation");
    if (!v.fits_sint_p()) bad(field, "valuation out of range");
    val = static_cast<int>(v.get_si());
  }
  std::vector<GaussianRational> coeffs;
  const Json& cs = j["coefficients"];
  if (!cs.is_array()) bad(field, "coefficients must be a list");
  for (std::size_t i = 0; i < cs.size(); ++i) {
    coeffs.push_back(gaussian_from_json(cs[i], field + ".coefficients[" + std::to_string(i) + "]"));
  }
  return LaurentSeries::from_coefficients(val, std::move(coeffs), static_cast<int>(rel.get_si()));
}

Json report_to_json(const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"passed", r.ok()}, {"checks", std::move(checks)}};
}

Json diagnostics_to_json(const EtaDiagnostics& d) {
  Json out;
  out["working_degree"] = d.working_degree;
  out["defect_formula"] = d.defect_formula;
  if (!d.fallback_reason.empty()) out["fallback_reason"] = d.fallback_reason;
  out["eta_tilde_valuation"] = d.eta_tilde_valuation;
  out["defect_valuation"] = d.defect_valuation;
  out["result_valuation"] = d.result_valuation;
  out["components"] = d.components;
  return out;
}

}  // namespace eqeta
