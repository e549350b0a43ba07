#pragma once

#include <string>

#include <json.hpp>

#include "tmot/anderson.hpp"
#include "tmot/oracle.hpp"

namespace tmot {

// Insertion-ordered JSON keeps reports byte-stable across runs.
using Json = nlohmann::ordered_json;

// Display names of the two skew variables for each twist.
struct VarNames {
    std::string rho, sigma;
};
VarNames var_names(TwistPair twist);

std::string render_coeff(const FieldElem& c);
std::string render_skew(const SkewPoly& p, const VarNames& names);
std::string render_mod_elem(const ModElem& g, const VarNames& names);

Json field_to_json(const FqPtr& field);
FqPtr field_from_json(const Json& j);

Json coeff_to_json(const FieldElem& c);
FieldElem coeff_from_json(const Json& j, const FqPtr& field);

Json skew_to_json(const SkewPoly& p, const VarNames& names);
Json elem_to_json(const ModElem& g, const VarNames& names);
ModElem elem_from_json(const Json& j, TwistPair twist, const FqPtr& field, int d);

Json janet_to_json(const JanetSet& J, const VarNames& names);

Json analysis_to_json(const AnalysisResult& a);
Json reverse_to_json(const ReverseResult& r, const EffectiveCheck& eff);
Json janet_report_to_json(const Presentation& pres, const JanetSet& J, const FqPtr& field,
                          int dim);
Json oracle_to_json(const OracleVerdict& v, DegreeBox box);

std::string analysis_to_text(const AnalysisResult& a, double elapsed_ms);
std::string reverse_to_text(const ReverseResult& r, const EffectiveCheck& eff, double elapsed_ms);
std::string janet_report_to_text(const Presentation& pres, const JanetSet& J, double elapsed_ms);
std::string oracle_to_text(const OracleVerdict& v, DegreeBox box, double elapsed_ms);

// Cone diagrams, one panel per sheet: X leading monomial, # cone, . staircase.
std::string ascii_diagram(const JanetSet& J, int d);
std::string svg_diagram(const JanetSet& J, int d);

}  // namespace tmot
