#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mcg/bounds.hpp"
#include "mcg/curve_families.hpp"
#include "mcg/interval.hpp"
#include "mcg/johnson.hpp"
#include "mcg/quad_real.hpp"
#include "mcg/search.hpp"
#include "mcg/thurston.hpp"

namespace mcg {

using Json = nlohmann::ordered_json;

inline Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

/// {"a": "p/q", "b": "r/s", "mu": n}
inline Json to_json(const QuadReal& x) {
  return Json{{"a", to_fraction_string(x.rational_part())},
              {"b", to_fraction_string(x.radical_part())},
              {"mu", x.radicand()}};
}

inline QuadReal quad_real_from_json(const Json& j) {
  try {
    return QuadReal(parse_rational(j.at("a").get<std::string>()), parse_rational(j.at("b").get<std::string>()),
                    j.at("mu").get<std::uint64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed QuadReal JSON: ") + e.what());
  }
}

namespace detail {
inline Json endpoint(const Rational& x, Rounding direction) {
  double d = to_double(x, direction);
  if (std::isfinite(d) && std::fabs(d) < 1e300) return Json(d);
  return Json(format_scientific(x, 20, direction));
}
}  // namespace detail

/// [lo, hi] with lo rounded down and hi rounded up to double; endpoints
/// beyond double range are written as decimal strings.
inline Json to_json(const Interval& x) {
  return Json::array({detail::endpoint(x.lo, Rounding::down), detail::endpoint(x.hi, Rounding::up)});
}

inline Json to_json(const DilatationReport& r) {
  Json j{{"word", r.word.str()},
         {"mu", r.mu},
         {"trace", to_json(r.trace)},
         {"class", std::string(to_string(r.isometry_class))},
         {"lambda", r.dilatation ? to_json(*r.dilatation) : Json(nullptr)},
         {"log_lambda", r.log_dilatation ? to_json(*r.log_dilatation) : Json(nullptr)}};
  if (r.char_poly) {
    Json coeffs = Json::array();
    for (const auto& c : *r.char_poly) coeffs.push_back(to_fraction_string(c));
    j["char_poly"] = coeffs;
  } else {
    j["char_poly"] = nullptr;
  }
  return j;
}

inline Json to_json(const SearchReport& r) {
  Json minima = Json::array();
  for (const auto& w : r.all_minima) minima.push_back(w.str());
  return Json{{"mu", r.mu},
              {"max_length", r.max_length},
              {"classes_examined", r.classes_examined},
              {"scope", "minimal among conjugacy classes of length <= " + std::to_string(r.max_length)},
              {"minimum", to_json(r.minimum)},
              {"all_minima", minima}};
}

inline Json to_json(const BoundResult& b) {
  return Json{{"bound", to_json(b.value)},
              {"direction", std::string(to_string(b.direction))},
              {"binding_case", b.binding_case.empty() ? Json(nullptr) : Json(b.binding_case)},
              {"validity_note", b.validity_note}};
}

inline Json to_json(const Wedge3Coset& c) {
  Wedge3Coset nf = c.normal_form();
  Json rep = Json::object();
  for (const auto& [name, coeff] : c.terms()) rep[name] = to_json(coeff);
  Json reduced = Json::object();
  for (const auto& [name, coeff] : nf.terms()) reduced[name] = to_json(coeff);
  return Json{{"genus", c.genus()},
              {"is_zero", nf.is_zero()},
              {"representative", rep},
              {"normal_form", reduced},
              {"quotient_rank", quotient_rank(c.genus())}};
}

inline Json to_json(const PFResult& pf) {
  Json v = Json::array();
  for (const auto& x : pf.eigenvector) v.push_back(to_fraction_string(x));
  return Json{{"value_lower", to_fraction_string(pf.value_lower)},
              {"value_upper", to_fraction_string(pf.value_upper)},
              {"exact", pf.exact},
              {"eigenvector", v}};
}

inline Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

/// Long-format CSV: section,i,j,value. Sections N and NNt hold matrix entries
/// (0-based indices); pf_lower, pf_upper, exact and eigenvector hold the PF data.
inline std::string family_csv(const IntersectionFamily& f, const IntMatrix& product, const PFResult& pf) {
  std::ostringstream os;
  os << "section,i,j,value\n";
  auto matrix = [&](const char* name, const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) os << name << ',' << i << ',' << j << ',' << m(i, j).get_str() << '\n';
  };
  matrix("N", f.n);
  matrix("NNt", product);
  os << "pf_lower,,," << to_fraction_string(pf.value_lower) << '\n';
  os << "pf_upper,,," << to_fraction_string(pf.value_upper) << '\n';
  os << "exact,,," << (pf.exact ? "true" : "false") << '\n';
  for (std::size_t i = 0; i < pf.eigenvector.size(); ++i)
    os << "eigenvector," << i << ",," << to_fraction_string(pf.eigenvector[i]) << '\n';
  return os.str();
}

/// k,word,length,trace,log_lambda_lo,log_lambda_hi with 15 outward-rounded fractional digits.
inline std::string lcs_csv(const std::vector<LcsRow>& rows) {
  std::ostringstream os;
  os << "k,word,length,trace,log_lambda_lo,log_lambda_hi\n";
  for (const auto& r : rows) {
    os << r.depth << ',' << r.word.str() << ',' << r.word_length << ',' << r.trace.str() << ',';
    if (r.log_dilatation) {
      os << format_fixed(r.log_dilatation->lo, 15, Rounding::down) << ','
         << format_fixed(r.log_dilatation->hi, 15, Rounding::up);
    } else {
      os << ',';
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace mcg
