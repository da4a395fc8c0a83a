#pragma once

#include <json.hpp>

#include "nlocus/coinvariant.hpp"
#include "nlocus/firstorder.hpp"
#include "nlocus/invariants.hpp"
#include "nlocus/membership.hpp"

namespace nlocus {

using Json = nlohmann::ordered_json;

Json section_to_json(const Section& b);
Section section_from_json(const Json& j);

/// Terms as the spec'd array of {"exp": [...], "c": "..."} in term order.
Json poly_terms_json(const MultiPoly& p);
Json poly_to_json(const MultiPoly& p);  // adds ring and variable metadata

Json diffop_to_json(const DiffOp& op);
DiffOp diffop_from_json(const Json& j);

/// Parses operator expressions like "d0^2-d1*d2" (the character '∂' is
/// accepted for 'd') over the coordinate order of the section space.
DiffOp parse_diffop(int m, const std::string& text);

Json firstorder_to_json(const FirstOrderOp& op);
FirstOrderOp firstorder_from_json(const Json& j);

Json certificate_to_json(const MembershipCertificate& cert);
Json symbolic_matrix_to_json(const SymbolicMatrix& M);
Json evaluated_matrix_to_json(const SymbolicMatrix& M, const QiMatrix& E);

Json check_report_to_json(const CheckReport& r);
Json search_witness_to_json(const SearchWitness& w);

/// Parses "(0,1,1)" style coordinate tuples in the coordinate order.
Section parse_point_tuple(int m, Convention conv, const std::string& text);

}  // namespace nlocus
