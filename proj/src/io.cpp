#include "nlocus/io.hpp"

#include <algorithm>

namespace nlocus {

namespace {

std::string convention_name(Convention c) {
  return c == Convention::Monomial ? "monomial" : "salmon";
}

Convention convention_by_name(const std::string& s) {
  if (s == "monomial") return Convention::Monomial;
  if (s == "salmon") return Convention::Salmon;
  throw ExactError("unknown convention '" + s + "'");
}

std::string ring_key(Ring r) {
  switch (r) {
    case Ring::Q: return "Q";
    case Ring::Qi: return "Qi";
    case Ring::Zi: return "Zi";
    case Ring::F2: return "F2";
    case Ring::Z4: return "Z4";
  }
  return "?";
}

}  // namespace

Json section_to_json(const Section& b) {
  Json coeffs = Json::object();
  for (const auto& [d, c] : b.coeffs) coeffs[multidegree_key(d)] = to_string(c);
  return Json{{"m", b.m}, {"convention", convention_name(b.convention)}, {"coeffs", coeffs}};
}

Section section_from_json(const Json& j) {
  Section b(j.at("m").get<int>(),
            convention_by_name(j.value("convention", std::string("monomial"))));
  for (const auto& [key, val] : j.at("coeffs").items())
    b.set(parse_multidegree_key(key, b.m), parse_gq(val.get<std::string>()));
  return b;
}

Json poly_terms_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back(Json{{"exp", e}, {"c", to_string(c)}});
  return terms;
}

Json poly_to_json(const MultiPoly& p) {
  return Json{{"ring", ring_key(p.ring())}, {"vars", p.vars()}, {"terms", poly_terms_json(p)}};
}

Json diffop_to_json(const DiffOp& op) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : op.terms)
    terms.push_back(Json{{"alpha", alpha}, {"c", to_string(c)}});
  return Json{{"m", op.m}, {"degree", op.degree}, {"terms", terms}};
}

DiffOp diffop_from_json(const Json& j) {
  int m = j.at("m").get<int>();
  std::map<std::vector<int>, GaussianRational> terms;
  for (const auto& t : j.at("terms")) {
    std::vector<int> alpha = t.at("alpha").get<std::vector<int>>();
    auto [it, fresh] = terms.try_emplace(alpha, parse_gq(t.at("c").get<std::string>()));
    if (!fresh) it->second += parse_gq(t.at("c").get<std::string>());
  }
  return DiffOp::from_terms(m, std::move(terms));
}

DiffOp parse_diffop(int m, const std::string& text) {
  std::string plain;
  for (size_t k = 0; k < text.size();) {
    // '∂' is UTF-8 e2 88 82
    if (k + 2 < text.size() && static_cast<unsigned char>(text[k]) == 0xE2 &&
        static_cast<unsigned char>(text[k + 1]) == 0x88 &&
        static_cast<unsigned char>(text[k + 2]) == 0x82) {
      plain += 'd';
      k += 3;
    } else {
      plain += text[k++];
    }
  }
  size_t n = coordinate_order(m).size();
  std::vector<std::string> vars;
  for (size_t k = 0; k < n; ++k) vars.push_back("d" + std::to_string(k));
  MultiPoly p = parse_poly(Ring::Qi, vars, plain);
  std::map<std::vector<int>, GaussianRational> terms;
  for (const auto& [e, c] : p.terms()) terms[e] = c;
  return DiffOp::from_terms(m, std::move(terms));
}

Json firstorder_to_json(const FirstOrderOp& op) {
  Json lam = Json::object();
  for (const auto& [d, c] : op.lambda) lam[multidegree_key(d)] = to_string(c);
  return Json{{"lambda", lam}};
}

FirstOrderOp firstorder_from_json(const Json& j) {
  FirstOrderOp op;
  const Json& lam = j.contains("lambda") ? j.at("lambda") : j;
  for (const auto& [key, val] : lam.items()) {
    Multidegree d = parse_multidegree_key(key, 2);
    salmon_index(d);
    GaussianRational c = parse_gq(val.get<std::string>());
    if (!c.is_zero()) op.lambda[d] = c;
  }
  return op;
}

namespace {

Json gq_vector_json(const std::vector<GaussianRational>& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_string(c));
  return out;
}

}  // namespace

Json certificate_to_json(const MembershipCertificate& cert) {
  Json j{{"d", cert.d},
         {"rank", cert.rank_M},
         {"rank_aug", cert.rank_aug},
         {"member", cert.member},
         {"theta", gq_vector_json(cert.theta)}};
  if (cert.witness) j["witness"] = gq_vector_json(*cert.witness);
  return j;
}

namespace {

Json matrix_shell(const SymbolicMatrix& M) {
  Json rows = Json::array();
  for (const auto& d : M.row_basis) rows.push_back(multidegree_key(d));
  Json cols = Json::array();
  for (const auto& key : M.columns)
    cols.push_back(Json{{"generator", M.generators[key.generator].name()},
                        {"e", multidegree_key(M.witness_basis[key.witness])}});
  Json coords = Json::array();
  for (const auto& d : coordinate_order(M.m)) coords.push_back(multidegree_key(d));
  return Json{{"m", M.m}, {"d", M.d}, {"rows", rows}, {"columns", cols}, {"coordinates", coords}};
}

}  // namespace

Json symbolic_matrix_to_json(const SymbolicMatrix& M) {
  Json j = matrix_shell(M);
  j["kind"] = "symbolic";
  const auto coords = coordinate_order(M.m);
  Json entries = Json::array();
  for (int r = 0; r < M.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < M.cols(); ++c) {
      const AffineForm& f = M.at(r, c);
      Json cell = Json::object();
      if (!f.c0.is_zero()) cell["const"] = to_string(f.c0);
      if (!f.lin.empty()) {
        Json lin = Json::object();
        for (const auto& [ci, slope] : f.lin) lin[multidegree_key(coords[ci])] = to_string(slope);
        cell["linear"] = lin;
      }
      row.push_back(cell);
    }
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j;
}

Json evaluated_matrix_to_json(const SymbolicMatrix& M, const QiMatrix& E) {
  Json j = matrix_shell(M);
  j["kind"] = "evaluated";
  Json entries = Json::array();
  for (int r = 0; r < E.rows; ++r) {
    Json row = Json::array();
    for (int c = 0; c < E.cols; ++c) row.push_back(to_string(E.at(r, c)));
    entries.push_back(row);
  }
  j["entries"] = entries;
  return j;
}

Json check_report_to_json(const CheckReport& r) {
  Json items = Json::array();
  for (const auto& item : r.items) {
    Json ji{{"name", item.name}, {"pass", item.pass}};
    if (!item.detail.empty()) ji["detail"] = item.detail;
    items.push_back(ji);
  }
  return Json{{"pass", r.all_pass()}, {"checks", items}};
}

Json search_witness_to_json(const SearchWitness& w) {
  Json j{{"found", true}, {"exact", w.exact}, {"plane", w.plane_index}};
  if (w.exact_point) j["point"] = section_to_json(*w.exact_point);
  Json approx = Json::array();
  for (const auto& s : w.point_strings) approx.push_back(s);
  j["point_approx"] = approx;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", w.residual_dS);
  j["residual_deltaS"] = buf;
  std::snprintf(buf, sizeof buf, "%.3e", w.residual_dT);
  j["residual_deltaT"] = buf;
  std::snprintf(buf, sizeof buf, "%.3e", w.scaled_disc);
  j["scaled_discriminant"] = buf;
  return j;
}

Section parse_point_tuple(int m, Convention conv, const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](char c) { return c == '(' || c == ')' || isspace((unsigned char)c); }),
          s.end());
  std::vector<GaussianRational> vals;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) vals.push_back(parse_gq(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Section::from_coordinates(m, conv, vals);
}

}  // namespace nlocus
