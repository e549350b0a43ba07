#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tmot/error.hpp"
#include "tmot/expr.hpp"
#include "tmot/report.hpp"

using namespace tmot;

namespace {

struct CommonOpts {
    std::string input;
    std::string side;
    std::string order;
    std::string format = "text";
    std::string diagram = "none";
    int max_rounds = 1000;
    std::string box;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_side = true) {
    cmd->add_option("input", o.input, "input document (path, or - for stdin)")->required();
    if (with_side)
        cmd->add_option("--side", o.side, "motive or comotive")
            ->check(CLI::IsMember({"motive", "comotive"}));
    cmd->add_option("--order", o.order, "sheet permutation, e.g. 2,1");
    cmd->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--diagram", o.diagram, "ascii, svg, or none")
        ->check(CLI::IsMember({"ascii", "svg", "none"}));
    cmd->add_option("--max-rounds", o.max_rounds, "Janet completion round limit");
    cmd->add_option("--box", o.box, "oracle degree box K,J");
}

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) fail_input("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json load_doc(const std::string& path) {
    try {
        return Json::parse(slurp(path));
    } catch (const Json::parse_error& e) {
        fail_input(std::string("input is not valid JSON: ") + e.what());
    }
}

std::vector<int> parse_perm(const std::string& s) {
    std::vector<int> perm;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) perm.push_back(std::stoi(tok));
    return perm;
}

DegreeBox parse_box(const std::string& s) {
    std::vector<int> v = parse_perm(s);
    if (v.size() != 2) fail_input("--box expects K,J");
    return {v[0], v[1]};
}

SkewMat parse_matrix(const Json& rows, const ExprContext& ctx, const char* what) {
    if (!rows.is_array() || rows.empty()) fail_input(std::string(what) + ": dimension must be >= 1");
    SkewMat m;
    for (const auto& row : rows) {
        if (!row.is_array() || row.size() != rows.size())
            fail_input(std::string(what) + ": matrix must be square");
        m.emplace_back();
        for (const auto& cell : row) {
            if (!cell.is_string()) fail_input(std::string(what) + ": entries must be strings");
            m.back().push_back(parse_expression(cell.get<std::string>(), ctx));
        }
    }
    return m;
}

struct LoadedDoc {
    FqPtr field;
    bool is_tmodule = false;
    TModuleData tm;
    MotiveData mot;
    // Options merged from the document's options block and the flags.
    Side side = Side::motive;
    OrderSpec ord;
    int max_rounds = 1000;
};

LoadedDoc load_input(const Json& doc, const CommonOpts& o) {
    if (!doc.is_object()) fail_input("input document must be a JSON object");
    if (!doc.contains("field")) fail_input("input document needs a field block");
    LoadedDoc r;
    r.field = field_from_json(doc.at("field"));

    std::string side_str = o.side;
    std::string order_str = o.order;
    r.max_rounds = o.max_rounds;
    if (doc.contains("options")) {
        const Json& opt = doc.at("options");
        if (side_str.empty() && opt.contains("side")) side_str = opt.at("side").get<std::string>();
        if (order_str.empty() && opt.contains("order")) {
            std::vector<int> perm = opt.at("order").get<std::vector<int>>();
            r.ord = OrderSpec(perm);
        }
        if (o.max_rounds == 1000 && opt.contains("max_rounds"))
            r.max_rounds = opt.at("max_rounds").get<int>();
    }
    if (!order_str.empty()) r.ord = OrderSpec(parse_perm(order_str));

    int blocks = doc.contains("tmodule") + doc.contains("motive") + doc.contains("comotive");
    if (blocks != 1)
        fail_input("input document needs exactly one of tmodule, motive, or comotive");

    if (doc.contains("tmodule")) {
        r.is_tmodule = true;
        r.side = side_str == "comotive" ? Side::comotive : Side::motive;
        ExprContext ctx{{1, 0}, r.field, "tau", ""};
        r.tm.D = parse_matrix(doc.at("tmodule").at("D"), ctx, "tmodule");
        r.tm.d = static_cast<int>(r.tm.D.size());
        r.tm.field = r.field;
        r.tm.theta = FieldElem::theta(r.field);
        return r;
    }
    r.side = doc.contains("comotive") ? Side::comotive : Side::motive;
    if (!side_str.empty() && side_str != (r.side == Side::motive ? "motive" : "comotive"))
        fail_input("--side contradicts the input document's object block");
    ExprContext ctx{reverse_twist(r.side), r.field, "t", ""};
    const Json& block = doc.contains("motive") ? doc.at("motive") : doc.at("comotive");
    r.mot.Theta = parse_matrix(block.at("Theta"), ctx, "motive");
    r.mot.r = static_cast<int>(r.mot.Theta.size());
    r.mot.side = r.side;
    r.mot.field = r.field;
    return r;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void emit(const CommonOpts& o, Json j, const std::string& text, const JanetSet* J, int d) {
    if (o.format == "json") {
        if (o.diagram == "ascii" && J) j["diagram"] = ascii_diagram(*J, d);
        if (o.diagram == "svg" && J) j["diagram"] = svg_diagram(*J, d);
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << text;
    if (o.diagram == "ascii" && J) std::cout << ascii_diagram(*J, d);
    if (o.diagram == "svg" && J) std::cout << svg_diagram(*J, d);
}

int cmd_analyze(const CommonOpts& o) {
    LoadedDoc doc = load_input(load_doc(o.input), o);
    if (!doc.is_tmodule) fail_input("analyze expects a tmodule block");
    auto t0 = std::chrono::steady_clock::now();
    AnalysisResult a = analyze_tmodule(doc.tm, doc.side, doc.ord, doc.max_rounds);
    double ms = ms_since(t0);
    Json j;
    j["command"] = "analyze";
    j.update(analysis_to_json(a));
    emit(o, std::move(j), analysis_to_text(a, ms), &a.report.basis, a.report.d);
    return a.report.finite ? 0 : static_cast<int>(Errc::not_abelian);
}

int cmd_reverse(const CommonOpts& o) {
    LoadedDoc doc = load_input(load_doc(o.input), o);
    if (doc.is_tmodule) fail_input("reverse expects a motive or comotive block");
    auto t0 = std::chrono::steady_clock::now();
    EffectiveCheck eff = check_effective(doc.mot);
    ReverseResult r = tmodule_from_motive(doc.mot, doc.ord, doc.max_rounds);
    double ms = ms_since(t0);
    emit(o, reverse_to_json(r, eff), reverse_to_text(r, eff, ms),
         &r.analysis.report.basis, r.analysis.report.d);
    return r.has_tmodule ? 0 : static_cast<int>(Errc::not_abelian);
}

int cmd_janet(const CommonOpts& o) {
    LoadedDoc doc = load_input(load_doc(o.input), o);
    Presentation pres = doc.is_tmodule ? presentation_from_tmodule(doc.tm, doc.side)
                                       : presentation_from_motive(doc.mot);
    int d = doc.is_tmodule ? doc.tm.d : doc.mot.r;
    OrderSpec ord = doc.ord.sheets() == d ? doc.ord : OrderSpec::identity(d);
    auto t0 = std::chrono::steady_clock::now();
    JanetSet J = janet_algorithm(pres.gens, ord, doc.max_rounds);
    double ms = ms_since(t0);
    emit(o, janet_report_to_json(pres, J, doc.field, d), janet_report_to_text(pres, J, ms), &J,
         d);
    return 0;
}

int cmd_verify(const CommonOpts& o) {
    Json doc = load_doc(o.input);
    // Accepts a stored janet report, or an analyze report (nested layout).
    const Json* root = &doc;
    int dim;
    Json gens_json, janet_json;
    if (doc.contains("generators")) {
        dim = doc.at("dim").get<int>();
        gens_json = doc.at("generators");
    } else if (doc.contains("presentation")) {
        dim = doc.at("presentation").at("dim").get<int>();
        gens_json = doc.at("presentation").at("generators");
    } else {
        fail_input("verify expects a stored janet or analyze report");
    }
    janet_json = root->at("janet");
    FqPtr field = field_from_json(doc.at("field"));
    auto tw = doc.at("twist");
    TwistPair twist{tw.at(0).get<int>(), tw.at(1).get<int>()};
    OrderSpec ord(doc.at("order").get<std::vector<int>>());

    std::vector<ModElem> gens;
    for (const auto& g : gens_json) gens.push_back(elem_from_json(g, twist, field, dim));
    JanetSet J;
    J.ord = ord;
    for (const auto& p : janet_json.at("pairs"))
        J.pairs.push_back({elem_from_json(p.at("element"), twist, field, dim),
                           p.at("mult_rho").get<bool>(), p.at("mult_sigma").get<bool>()});

    DegreeBox box;
    if (!o.box.empty()) {
        box = parse_box(o.box);
    } else {
        long kmax = 0, jmax = 0;
        for (const auto& p : J.pairs) {
            kmax = std::max(kmax, p.b.degree(Var::rho));
            jmax = std::max(jmax, p.b.degree(Var::sigma));
        }
        box = {kmax + 2, jmax + 2};
    }
    auto t0 = std::chrono::steady_clock::now();
    OracleVerdict v = verify_janet(J, gens, box);
    double ms = ms_since(t0);
    emit(o, oracle_to_json(v, box), oracle_to_text(v, box, ms), nullptr, 0);
    return v.pass() ? 0 : static_cast<int>(Errc::internal);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analyzer for Anderson t-modules and their (co)motives"};
    app.require_subcommand(1);

    CommonOpts oa, orv, oj, ov;
    CLI::App* analyze = app.add_subcommand("analyze", "t-module -> (co)motive analysis");
    add_common(analyze, oa);
    CLI::App* reverse = app.add_subcommand("reverse", "motive/comotive -> t-module");
    add_common(reverse, orv);
    CLI::App* janet = app.add_subcommand("janet", "compute the Janet basis of a presentation");
    add_common(janet, oj);
    CLI::App* verify = app.add_subcommand("verify", "run the oracle against a stored report");
    add_common(verify, ov, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return cmd_analyze(oa);
        if (reverse->parsed()) return cmd_reverse(orv);
        if (janet->parsed()) return cmd_janet(oj);
        return cmd_verify(ov);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return static_cast<int>(Errc::internal);
    }
}
