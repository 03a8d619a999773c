#include "canon/json_io.hpp"

#include <cmath>
#include <sstream>

#include "canon/error.hpp"

namespace canon {

namespace {

[[noreturn]] void shape_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) shape_error(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

double number(const Json& j, const std::string& where) {
  if (!j.is_number()) shape_error(where + ": expected a number");
  return j.get<double>();
}

mpq_class rational(const Json& num, const Json& den) {
  auto text = [](const Json& x) {
    if (x.is_string()) return x.get<std::string>();
    if (x.is_number_integer()) return std::to_string(x.get<long long>());
    shape_error("rational parts must be integers or decimal strings");
  };
  mpq_class q;
  try {
    q = mpq_class(text(num) + "/" + text(den));
  } catch (const std::invalid_argument&) {
    shape_error("malformed rational");
  }
  if (q.get_den() == 0) shape_error("zero denominator");
  q.canonicalize();
  return q;
}

}  // namespace

Json complex_to_json(cd z) { return Json::array({z.real(), z.imag()}); }

cd complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) shape_error("complex numbers are [re, im]");
  return {number(j[0], "re"), number(j[1], "im")};
}

Json c4_to_json(const C4& v) {
  Json out = Json::array();
  for (int a = 0; a < 4; ++a) out.push_back(complex_to_json(v[a]));
  return out;
}

C4 c4_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) shape_error("expected 4 complex components");
  C4 v;
  for (int a = 0; a < 4; ++a) v[a] = complex_from_json(j[a]);
  return v;
}

Json element_to_json(const CanonicalElement& g) {
  Json u = Json::array();
  for (int r = 0; r < 4; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 4; ++c) row.push_back(complex_to_json(g.u.matrix()(r, c)));
    u.push_back(row);
  }
  return Json{{"U", u}, {"omega", c4_to_json(g.omega)}, {"iota", g.iota}};
}

CanonicalElement element_from_json(const Json& j, double tol) {
  const Json& u = field(j, "U");
  if (!u.is_array() || u.size() != 4) shape_error("U must be a 4x4 array");
  M4 m;
  for (int r = 0; r < 4; ++r) {
    if (!u[r].is_array() || u[r].size() != 4) shape_error("U must be a 4x4 array");
    for (int c = 0; c < 4; ++c) m(r, c) = complex_from_json(u[r][c]);
  }
  CanonicalElement g;
  g.u = PseudoUnitaryMatrix(m, tol);
  g.omega = c4_from_json(field(j, "omega"));
  g.iota = number(field(j, "iota"), "iota");
  if (!g.omega.allFinite() || !std::isfinite(g.iota)) throw Error(ErrorKind::InvalidElement, "non-finite omega or iota");
  return g;
}

Json operator_to_json(const FockOperator& op) {
  Json entries = Json::array();
  for (int c = 0; c < op.dim(); ++c)
    for (const auto& [r, v] : op.column(c))
      entries.push_back(Json::array({r, c, v.re.get_num().get_str(), v.re.get_den().get_str(),
                                     v.im.get_num().get_str(), v.im.get_den().get_str()}));
  return Json{{"degree_cap", op.degree_cap()}, {"dim", op.dim()}, {"entries", entries}};
}

FockOperator operator_from_json(const Json& j) {
  const Json& cap = field(j, "degree_cap");
  if (!cap.is_number_integer() || cap.get<long long>() < 0 || cap.get<long long>() > 64)
    shape_error("degree_cap must be an integer in [0, 64]");
  FockOperator op(cap.get<int>());
  if (j.contains("dim") && j.at("dim") != op.dim()) shape_error("dim does not match degree_cap");
  const Json& entries = field(j, "entries");
  if (!entries.is_array()) shape_error("entries must be an array");
  for (const Json& e : entries) {
    if (!e.is_array() || e.size() != 6 || !e[0].is_number_integer() || !e[1].is_number_integer())
      shape_error("entries are [row, col, re_num, re_den, im_num, im_den]");
    const long long r = e[0].get<long long>(), c = e[1].get<long long>();
    if (r < 0 || c < 0 || r >= op.dim() || c >= op.dim()) shape_error("entry index out of range");
    op.add(static_cast<int>(r), static_cast<int>(c), QComplex(rational(e[2], e[3]), rational(e[4], e[5])));
  }
  return op;
}

Json report_to_json(const std::vector<InvariantResult>& results) {
  Json items = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    items.push_back(Json{{"suite", r.suite},
                         {"invariant", r.name},
                         {"samples", r.samples},
                         {"max_residual", std::isfinite(r.max_residual) ? Json(r.max_residual) : Json("inf")},
                         {"tolerance", r.tolerance},
                         {"exact", r.tolerance == 0.0},
                         {"passed", r.passed}});
  }
  return Json{{"passed", all}, {"invariants", items}};
}

std::string report_to_csv(const std::vector<InvariantResult>& results) {
  std::ostringstream os;
  os.precision(17);
  os << "suite,invariant,samples,max_residual,tolerance,passed\n";
  for (const auto& r : results)
    os << r.suite << ",\"" << r.name << "\"," << r.samples << ',' << r.max_residual << ',' << r.tolerance << ','
       << (r.passed ? "true" : "false") << '\n';
  return os.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, "malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace canon
