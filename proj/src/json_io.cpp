#include "core/json_io.hpp"

#include <algorithm>

#include <json.hpp>

namespace garank {

namespace {

using nlohmann::json;

json scalar_node(const FloatComplex& v) { return json{{"re", v.real()}, {"im", v.imag()}}; }

json scalar_node(const GaussianRational& v) {
  return json{{"re", rational_to_string(v.re)}, {"im", rational_to_string(v.im)}};
}

FloatComplex scalar_float_from(const json& node) {
  if (!node.is_object() || !node.contains("re") || !node.contains("im") ||
      !node["re"].is_number() || !node["im"].is_number())
    fail(errc::json_error, "expected {\"re\":number,\"im\":number}");
  return {node["re"].get<double>(), node["im"].get<double>()};
}

GaussianRational scalar_exact_from(const json& node) {
  if (!node.is_object() || !node.contains("re") || !node.contains("im") ||
      !node["re"].is_string() || !node["im"].is_string())
    fail(errc::json_error, "expected {\"re\":\"num/den\",\"im\":\"num/den\"}");
  return {rational_from_string(node["re"].get<std::string>()),
          rational_from_string(node["im"].get<std::string>())};
}

json blade_node(std::uint32_t mask, int n) {
  json arr = json::array();
  for (int a = 1; a <= n; ++a)
    if (mask & (std::uint32_t{1} << (a - 1))) arr.push_back(a);
  return arr;
}

std::uint32_t blade_from(const json& node, const Signature& sig) {
  if (!node.is_array()) fail(errc::json_error, "blade must be an index list");
  std::uint32_t mask = 0;
  int prev = 0;
  for (const auto& item : node) {
    if (!item.is_number_integer()) fail(errc::json_error, "blade indices must be integers");
    const int idx = item.get<int>();
    if (idx < 1 || idx > sig.n())
      fail(errc::json_error, "blade index " + std::to_string(idx) + " out of range for n=" +
                                 std::to_string(sig.n()));
    if (idx <= prev) fail(errc::json_error, "blade indices must be strictly increasing");
    prev = idx;
    mask |= std::uint32_t{1} << (idx - 1);
  }
  return mask;
}

template <class S>
json mv_node(const Multivector<S>& m, const char* mode_name) {
  const int n = m.signature().n();
  json terms = json::array();
  // grade-major order, matching the text printer
  std::vector<std::pair<std::uint32_t, S>> sorted(m.terms().begin(), m.terms().end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return blade_grade(a.first) < blade_grade(b.first);
  });
  for (const auto& t : sorted) {
    json term = scalar_node(t.second);
    term["blade"] = blade_node(t.first, n);
    terms.push_back(std::move(term));
  }
  return json{{"signature", {m.signature().p(), m.signature().q()}},
              {"mode", mode_name},
              {"terms", std::move(terms)}};
}

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::json_error, "malformed JSON");
  return j;
}

}  // namespace

std::string multivector_to_json(const AnyMultivector& m) {
  if (m.mode() == Mode::exact) return mv_node(m.as_exact(), "exact").dump();
  return mv_node(m.as_float(), "float").dump();
}

AnyMultivector multivector_from_json(const std::string& text) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("signature") || !j.contains("mode") || !j.contains("terms"))
    fail(errc::json_error, "multivector JSON needs signature, mode, terms");
  const auto& sg = j["signature"];
  if (!sg.is_array() || sg.size() != 2 || !sg[0].is_number_integer() || !sg[1].is_number_integer())
    fail(errc::json_error, "signature must be [p,q]");
  Signature sig(sg[0].get<int>(), sg[1].get<int>());
  const std::string mode = j["mode"].get<std::string>();
  if (!j["terms"].is_array()) fail(errc::json_error, "terms must be a list");

  if (mode == "float") {
    std::vector<MvFloat::term_type> terms;
    for (const auto& t : j["terms"]) {
      if (!t.is_object() || !t.contains("blade")) fail(errc::json_error, "bad term");
      terms.emplace_back(blade_from(t["blade"], sig), scalar_float_from(t));
    }
    return AnyMultivector(MvFloat::from_terms(sig, std::move(terms)));
  }
  if (mode == "exact") {
    std::vector<MvExact::term_type> terms;
    for (const auto& t : j["terms"]) {
      if (!t.is_object() || !t.contains("blade")) fail(errc::json_error, "bad term");
      terms.emplace_back(blade_from(t["blade"], sig), scalar_exact_from(t));
    }
    return AnyMultivector(MvExact::from_terms(sig, std::move(terms)));
  }
  fail(errc::json_error, "mode must be \"exact\" or \"float\"");
}

namespace {

template <class S>
std::string charpoly_json_impl(const CharPoly<S>& cp) {
  json coeffs = json::array();
  for (const auto& c : cp.coeffs) coeffs.push_back(scalar_node(c));
  return json{{"coeffs", std::move(coeffs)}, {"det", scalar_node(cp.determinant())}}.dump();
}

}  // namespace

std::string charpoly_to_json(const CharPoly<FloatComplex>& cp) { return charpoly_json_impl(cp); }
std::string charpoly_to_json(const CharPoly<GaussianRational>& cp) {
  return charpoly_json_impl(cp);
}

std::string scalar_to_json(const FloatComplex& v) { return scalar_node(v).dump(); }
std::string scalar_to_json(const GaussianRational& v) { return scalar_node(v).dump(); }

std::string rank_result_to_json(const RankResult& r) {
  return json{{"rank", r.rank},
              {"path", to_string(r.path)},
              {"witnesses", json{{"C", r.examined}, {"tol", r.tol}}}}
      .dump();
}

namespace {

template <class S>
std::string matrix_json_impl(const Matrix<S>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_node(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}}.dump();
}

template <class S, class ScalarFrom>
Matrix<S> matrix_from_impl(const std::string& text, ScalarFrom scalar_from) {
  json j = parse_json(text);
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    fail(errc::json_error, "matrix JSON needs rows, cols, entries");
  const int rows = j["rows"].get<int>();
  const int cols = j["cols"].get<int>();
  Matrix<S> m(rows, cols);
  const auto& entries = j["entries"];
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    fail(errc::json_error, "entries row count mismatch");
  for (int i = 0; i < rows; ++i) {
    const auto& row = entries[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(errc::json_error, "entries column count mismatch");
    for (int jx = 0; jx < cols; ++jx) m(i, jx) = scalar_from(row[jx]);
  }
  return m;
}

}  // namespace

std::string matrix_to_json(const Matrix<FloatComplex>& m) { return matrix_json_impl(m); }
std::string matrix_to_json(const Matrix<GaussianRational>& m) { return matrix_json_impl(m); }

Matrix<FloatComplex> matrix_from_json_float(const std::string& text) {
  return matrix_from_impl<FloatComplex>(text, scalar_float_from);
}
Matrix<GaussianRational> matrix_from_json_exact(const std::string& text) {
  return matrix_from_impl<GaussianRational>(text, scalar_exact_from);
}

}  // namespace garank
