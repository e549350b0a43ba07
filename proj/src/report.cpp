#include "tmot/report.hpp"

#include <algorithm>
#include <sstream>

#include "tmot/error.hpp"

namespace tmot {

VarNames var_names(TwistPair twist) {
    if (twist.a_rho == 1) return {"tau", "t"};
    if (twist.a_rho == -1) return {"sigma", "t"};
    if (twist.a_sigma == 1) return {"t", "tau"};
    if (twist.a_sigma == -1) return {"t", "sigma"};
    return {"rho", "sigma"};
}

std::string render_coeff(const FieldElem& c) { return c.str(); }

namespace {

// Wrapped form safe on the left of a '*' chain.
std::string coeff_factor(const FieldElem& c) {
    std::string s = c.str();
    bool sum = c.den().degree() <= 0 && c.num().terms().size() > 1;
    return sum ? "(" + s + ")" : s;
}

void append_vars(std::ostringstream& os, const Mono2& m, const VarNames& names, bool& lead) {
    auto piece = [&](const std::string& v, long e) {
        if (e == 0) return;
        if (!lead) os << "*";
        os << v;
        if (e > 1) os << "^" << e;
        lead = false;
    };
    piece(names.rho, m.k);
    piece(names.sigma, m.j);
}

}  // namespace

std::string render_skew(const SkewPoly& p, const VarNames& names) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        if (!first) os << " + ";
        const Mono2& m = it->first;
        bool lead = true;
        if (!it->second.is_one() || m == Mono2{0, 0}) {
            os << (m == Mono2{0, 0} ? it->second.str() : coeff_factor(it->second));
            lead = false;
        }
        append_vars(os, m, names, lead);
        first = false;
    }
    return os.str();
}

std::string render_mod_elem(const ModElem& g, const VarNames& names) {
    if (g.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = g.terms().rbegin(); it != g.terms().rend(); ++it) {
        if (!first) os << " + ";
        const ModMono& m = it->first;
        bool lead = true;
        if (!it->second.is_one()) {
            os << coeff_factor(it->second);
            lead = false;
        }
        append_vars(os, m.m, names, lead);
        if (!lead) os << "*";
        os << "k" << m.sheet;
        first = false;
    }
    return os.str();
}

Json field_to_json(const FqPtr& field) {
    Json j;
    j["p"] = field->p;
    j["n"] = field->n;
    if (field->n > 1) j["modulus"] = field->modulus;
    return j;
}

FqPtr field_from_json(const Json& j) {
    if (!j.is_object()) fail_input("field block must be an object");
    if (j.contains("q")) return FqField::of_order(j.at("q").get<long>());
    if (!j.contains("p")) fail_input("field block needs q, or p and n");
    long p = j.at("p").get<long>();
    int n = j.value("n", 1);
    if (n == 1) return FqField::prime(p);
    const char* key = j.contains("irreducible") ? "irreducible"
                      : j.contains("modulus")   ? "modulus"
                                                : nullptr;
    if (key) return FqField::extension(p, j.at(key).get<std::vector<long>>());
    long q = 1;
    for (int i = 0; i < n; ++i) q *= p;
    return FqField::of_order(q);
}

namespace {

Json poly_terms(const FqPoly& f) {
    Json a = Json::array();
    for (const auto& [e, c] : f.terms()) a.push_back({e, c});
    return a;
}

FqPoly poly_from_terms(const Json& a, const FqPtr& field) {
    std::map<long, long> terms;
    for (const auto& t : a) terms[t.at(0).get<long>()] = t.at(1).get<long>();
    return FqPoly(field, std::move(terms));
}

}  // namespace

Json coeff_to_json(const FieldElem& c) {
    Json j;
    j["level"] = c.level();
    j["num"] = poly_terms(c.num());
    j["den"] = poly_terms(c.den());
    return j;
}

FieldElem coeff_from_json(const Json& j, const FqPtr& field) {
    return FieldElem::make(j.at("level").get<int>(), poly_from_terms(j.at("num"), field),
                           poly_from_terms(j.at("den"), field));
}

Json skew_to_json(const SkewPoly& p, const VarNames& names) {
    Json j;
    j["display"] = render_skew(p, names);
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms())
        terms.push_back({{"k", m.k}, {"j", m.j}, {"coeff", coeff_to_json(c)}});
    j["terms"] = std::move(terms);
    return j;
}

Json elem_to_json(const ModElem& g, const VarNames& names) {
    Json j;
    j["display"] = render_mod_elem(g, names);
    Json terms = Json::array();
    for (const auto& [m, c] : g.terms())
        terms.push_back(
            {{"sheet", m.sheet}, {"k", m.m.k}, {"j", m.m.j}, {"coeff", coeff_to_json(c)}});
    j["terms"] = std::move(terms);
    return j;
}

ModElem elem_from_json(const Json& j, TwistPair twist, const FqPtr& field, int d) {
    ModElem g = ModElem::zero(twist, field, d);
    for (const auto& t : j.at("terms")) {
        ModMono m{t.at("sheet").get<int>(), {t.at("k").get<long>(), t.at("j").get<long>()}};
        g.set_coeff(m, coeff_from_json(t.at("coeff"), field));
    }
    return g;
}

Json janet_to_json(const JanetSet& J, const VarNames& names) {
    Json j;
    Json pairs = Json::array();
    for (const auto& p : J.pairs)
        pairs.push_back({{"element", elem_to_json(p.b, names)},
                         {"mult_rho", p.mult_rho},
                         {"mult_sigma", p.mult_sigma}});
    j["pairs"] = std::move(pairs);
    return j;
}

namespace {

std::string verdict_string(Side side, TwistPair twist, bool finite) {
    if (twist.a_rho != 0)  // forward presentation
        return finite ? (side == Side::motive ? "abelian" : "coabelian")
                      : (side == Side::motive ? "not abelian" : "not coabelian");
    return finite ? "finitely generated over the operator ring"
                  : "not finitely generated over the operator ring";
}

Json skew_matrix(const SkewMat& m, const VarNames& names) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& e : row) r.push_back(skew_to_json(e, names));
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace

Json analysis_to_json(const AnalysisResult& a) {
    const TwistPair twist = a.presentation.twist;
    VarNames names = var_names(twist);
    Json j;
    j["field"] = field_to_json(a.report.field);
    j["side"] = a.side == Side::motive ? "motive" : "comotive";
    j["twist"] = {twist.a_rho, twist.a_sigma};
    j["order"] = a.report.ord.perm();
    j["verdict"] = verdict_string(a.side, twist, a.report.finite);
    j["n"] = a.report.n;
    j["m"] = a.report.m;
    Json gens = Json::array();
    for (const auto& g : a.presentation.gens) gens.push_back(elem_to_json(g, names));
    j["presentation"] = {{"dim", a.report.d}, {"generators", std::move(gens)}};
    j["janet"] = janet_to_json(a.report.basis, names);
    if (a.report.finite) {
        j["rank"] = a.report.rank;
        j["basis"] = skew_matrix(a.model.basis, names);
        j["action"] = skew_matrix(a.model.action, names);
        j["perfection_level"] = a.perfection_level;
    }
    return j;
}

Json reverse_to_json(const ReverseResult& r, const EffectiveCheck& eff) {
    Json j;
    j["command"] = "reverse";
    j["effective"] = {{"constant", render_coeff(eff.c)},
                      {"multiplicity", eff.s}};
    j["analysis"] = analysis_to_json(r.analysis);
    if (r.has_tmodule) {
        VarNames fwd = var_names({1, 0});
        j["tmodule"] = {{"dimension", r.tm.d}, {"D", skew_matrix(r.tm.D, fwd)}};
    } else {
        j["verdict"] = "no associated t-module of this form";
    }
    return j;
}

Json janet_report_to_json(const Presentation& pres, const JanetSet& J, const FqPtr& field,
                          int dim) {
    VarNames names = var_names(pres.twist);
    Json j;
    j["command"] = "janet";
    j["field"] = field_to_json(field);
    j["twist"] = {pres.twist.a_rho, pres.twist.a_sigma};
    j["dim"] = dim;
    j["order"] = J.ord.perm();
    Json gens = Json::array();
    for (const auto& g : pres.gens) gens.push_back(elem_to_json(g, names));
    j["generators"] = std::move(gens);
    j["janet"] = janet_to_json(J, names);
    return j;
}

Json oracle_to_json(const OracleVerdict& v, DegreeBox box) {
    Json j;
    j["command"] = "verify";
    j["box"] = {box.k_max, box.j_max};
    j["oracle"] = {{"membership_forward", v.membership_forward},
                   {"membership_backward", v.membership_backward},
                   {"cones_disjoint", v.cones_disjoint},
                   {"cone_cover", v.cone_cover},
                   {"staircase_basis", v.staircase_basis},
                   {"pass", v.pass()},
                   {"failures", v.failures}};
    return j;
}

namespace {

std::string join_longs(const std::vector<long>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
}

void text_janet(std::ostringstream& os, const JanetSet& J, const VarNames& names) {
    os << "janet basis:\n";
    for (const auto& p : J.pairs) {
        os << "  " << render_mod_elem(p.b, names) << "   mult {";
        bool c = false;
        if (p.mult_rho) os << names.rho, c = true;
        if (p.mult_sigma) os << (c ? ", " : "") << names.sigma;
        os << "}\n";
    }
}

void text_model(std::ostringstream& os, const AnalysisResult& a, const VarNames& names) {
    os << "rank: " << a.report.rank << "\n";
    os << "basis (in the presentation generators):\n";
    for (size_t i = 0; i < a.model.basis.size(); ++i) {
        os << "  e" << i + 1 << " =";
        bool any = false;
        for (size_t jx = 0; jx < a.model.basis[i].size(); ++jx) {
            if (a.model.basis[i][jx].is_zero()) continue;
            os << (any ? " + " : " ") << "(" << render_skew(a.model.basis[i][jx], names) << ")*w"
               << jx + 1;
            any = true;
        }
        if (!any) os << " 0";
        os << "\n";
    }
    os << "action (" << names.rho << " on the basis):\n";
    for (size_t i = 0; i < a.model.action.size(); ++i) {
        os << "  " << names.rho << "(e" << i + 1 << ") =";
        bool any = false;
        for (size_t jx = 0; jx < a.model.action[i].size(); ++jx) {
            if (a.model.action[i][jx].is_zero()) continue;
            os << (any ? " + " : " ") << "(" << render_skew(a.model.action[i][jx], names)
               << ")*e" << jx + 1;
            any = true;
        }
        if (!any) os << " 0";
        os << "\n";
    }
    os << "perfection level: " << a.perfection_level << "\n";
}

}  // namespace

std::string analysis_to_text(const AnalysisResult& a, double elapsed_ms) {
    VarNames names = var_names(a.presentation.twist);
    std::ostringstream os;
    os << "side: " << (a.side == Side::motive ? "motive" : "comotive") << "\n";
    os << "verdict: " << verdict_string(a.side, a.presentation.twist, a.report.finite) << "\n";
    os << "n: " << join_longs(a.report.n) << "\n";
    os << "m: " << join_longs(a.report.m) << "\n";
    text_janet(os, a.report.basis, names);
    if (a.report.finite) text_model(os, a, names);
    os << "elapsed: " << elapsed_ms << " ms\n";
    return os.str();
}

std::string reverse_to_text(const ReverseResult& r, const EffectiveCheck& eff,
                            double elapsed_ms) {
    std::ostringstream os;
    os << "effective: yes (constant " << render_coeff(eff.c) << ", multiplicity " << eff.s
       << ")\n";
    os << analysis_to_text(r.analysis, elapsed_ms);
    if (r.has_tmodule) {
        VarNames fwd = var_names({1, 0});
        os << "t-module of dimension " << r.tm.d << ", phi_t =\n";
        for (const auto& row : r.tm.D) {
            os << "  [";
            for (size_t jx = 0; jx < row.size(); ++jx)
                os << (jx ? ", " : " ") << render_skew(row[jx], fwd);
            os << " ]\n";
        }
    } else {
        os << "no associated t-module of this form\n";
    }
    return os.str();
}

std::string janet_report_to_text(const Presentation& pres, const JanetSet& J,
                                 double elapsed_ms) {
    VarNames names = var_names(pres.twist);
    std::ostringstream os;
    os << "presentation:\n";
    for (const auto& g : pres.gens) os << "  " << render_mod_elem(g, names) << "\n";
    text_janet(os, J, names);
    os << "elapsed: " << elapsed_ms << " ms\n";
    return os.str();
}

std::string oracle_to_text(const OracleVerdict& v, DegreeBox box, double elapsed_ms) {
    std::ostringstream os;
    os << "box: (" << box.k_max << ", " << box.j_max << ")\n";
    auto line = [&](const char* name, bool ok) {
        os << "  " << name << ": " << (ok ? "ok" : "FAILED") << "\n";
    };
    line("membership forward", v.membership_forward);
    line("membership backward", v.membership_backward);
    line("cones disjoint", v.cones_disjoint);
    line("cone cover", v.cone_cover);
    line("staircase basis", v.staircase_basis);
    for (const auto& f : v.failures) os << "  ! " << f << "\n";
    os << "oracle verdict: " << (v.pass() ? "pass" : "fail") << "\n";
    os << "elapsed: " << elapsed_ms << " ms\n";
    return os.str();
}

namespace {

struct Extent {
    long kmax = 3, jmax = 3;
};

Extent sheet_extent(const JanetSet& J, int sheet) {
    Extent e;
    for (const auto& p : J.pairs) {
        ModMono lm = p.b.leading(J.ord).first;
        if (lm.sheet != sheet) continue;
        e.kmax = std::max(e.kmax, lm.m.k + 2);
        e.jmax = std::max(e.jmax, lm.m.j + 2);
    }
    return e;
}

}  // namespace

std::string ascii_diagram(const JanetSet& J, int d) {
    std::ostringstream os;
    VarNames names = var_names(J.pairs.empty() ? TwistPair{} : J.pairs.front().b.twist());
    for (int sheet = 1; sheet <= d; ++sheet) {
        Extent e = sheet_extent(J, sheet);
        os << "sheet k" << sheet << " (" << names.rho << " up, " << names.sigma << " right):\n";
        for (long k = e.kmax; k >= 0; --k) {
            os << "  ";
            for (long j = 0; j <= e.jmax; ++j) {
                ModMono m{sheet, {k, j}};
                char c = '.';
                for (const auto& p : J.pairs) {
                    if (JanetSet::cone_contains(p, J.ord, m)) c = '#';
                }
                for (const auto& p : J.pairs) {
                    ModMono lm = p.b.leading(J.ord).first;
                    if (lm == m) c = 'X';
                }
                os << c << ' ';
            }
            os << "\n";
        }
    }
    return os.str();
}

std::string svg_diagram(const JanetSet& J, int d) {
    const long cell = 24, pad = 30;
    std::vector<Extent> ext;
    long width = pad;
    long height = 0;
    for (int sheet = 1; sheet <= d; ++sheet) {
        ext.push_back(sheet_extent(J, sheet));
        width += (ext.back().jmax + 1) * cell + pad;
        height = std::max(height, (ext.back().kmax + 1) * cell + 2 * pad);
    }
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\">\n";
    long x0 = pad;
    for (int sheet = 1; sheet <= d; ++sheet) {
        const Extent& e = ext[sheet - 1];
        long panel_h = (e.kmax + 1) * cell;
        auto px = [&](long j) { return x0 + j * cell; };
        auto py = [&](long k) { return pad + panel_h - (k + 1) * cell; };
        // Cones: filled quadrant when both variables are multiplicative,
        // half-line strip along the single multiplicative direction otherwise.
        for (const auto& p : J.pairs) {
            ModMono lm = p.b.leading(J.ord).first;
            if (lm.sheet != sheet) continue;
            long w = p.mult_sigma ? (e.jmax - lm.m.j + 1) * cell : cell;
            long h = p.mult_rho ? (e.kmax - lm.m.k + 1) * cell : cell;
            long y = p.mult_rho ? py(e.kmax) : py(lm.m.k);
            os << "  <rect x=\"" << px(lm.m.j) << "\" y=\"" << y << "\" width=\"" << w
               << "\" height=\"" << h << "\" fill=\"#9ecae1\" fill-opacity=\"0.6\"/>\n";
        }
        // Grid and leading monomial markers.
        for (long k = 0; k <= e.kmax + 1; ++k)
            os << "  <line x1=\"" << px(0) << "\" y1=\"" << pad + k * cell << "\" x2=\""
               << px(e.jmax + 1) << "\" y2=\"" << pad + k * cell
               << "\" stroke=\"#ccc\" stroke-width=\"1\"/>\n";
        for (long j = 0; j <= e.jmax + 1; ++j)
            os << "  <line x1=\"" << px(j) << "\" y1=\"" << pad << "\" x2=\"" << px(j)
               << "\" y2=\"" << pad + panel_h << "\" stroke=\"#ccc\" stroke-width=\"1\"/>\n";
        for (const auto& p : J.pairs) {
            ModMono lm = p.b.leading(J.ord).first;
            if (lm.sheet != sheet) continue;
            os << "  <circle cx=\"" << px(lm.m.j) + cell / 2 << "\" cy=\"" << py(lm.m.k) + cell / 2
               << "\" r=\"5\" fill=\"#08519c\"/>\n";
        }
        os << "  <text x=\"" << x0 << "\" y=\"" << pad + panel_h + 18 << "\" font-size=\"13\">k"
           << sheet << "</text>\n";
        x0 += (e.jmax + 1) * cell + pad;
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace tmot
