#include "tmot/anderson.hpp"

#include <algorithm>

#include "tmot/error.hpp"

namespace tmot {

namespace {

using FieldMat = std::vector<std::vector<FieldElem>>;

FieldMat field_mat_mul(const FieldMat& a, const FieldMat& b, const FqPtr& field) {
    int n = static_cast<int>(a.size());
    FieldMat r(n, std::vector<FieldElem>(n, FieldElem::zero(field)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j) r[i][j] = r[i][j] + a[i][k] * b[k][j];
        }
    return r;
}

void check_square(const SkewMat& a, int n, const char* what) {
    if (static_cast<int>(a.size()) != n) fail_input(std::string(what) + " matrix is not square");
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n)
            fail_input(std::string(what) + " matrix is not square");
}

// (D_0 - theta I)^d = 0, the differential condition defining a t-module.
void check_nilpotent(const TModuleData& tm) {
    check_square(tm.D, tm.d, "t-module");
    FieldMat n(tm.d, std::vector<FieldElem>(tm.d, FieldElem::zero(tm.field)));
    for (int i = 0; i < tm.d; ++i) {
        for (int j = 0; j < tm.d; ++j) {
            if (!tm.D[i][j].univariate_in(Var::rho))
                fail_input("t-module matrix entries must lie in K<tau>");
            n[i][j] = tm.D[i][j].coeff({0, 0});
        }
        n[i][i] = n[i][i] - tm.theta;
    }
    FieldMat p = n;
    for (int k = 1; k < tm.d; ++k) p = field_mat_mul(p, n, tm.field);
    for (const auto& row : p)
        for (const auto& x : row)
            if (!x.is_zero()) fail_input("not an Anderson t-module");
}

// Reads a polynomial in the sigma variable as one in rho under a new twist
// with gamma_rho equal to the old gamma_sigma.
SkewPoly sigma_to_rho(const SkewPoly& f, TwistPair out) {
    if (!f.univariate_in(Var::sigma)) fail_internal("sigma_to_rho: mixed-variable entry");
    SkewPoly r = SkewPoly::zero(out, f.field());
    for (const auto& [m, c] : f.terms()) r.set_coeff({m.j, 0}, c);
    return r;
}

int level_of_model(const FreeModel& model) {
    int level = 0;
    for (const SkewMat* mat : {&model.basis, &model.action})
        for (const auto& row : *mat)
            for (const auto& f : row) level = std::max(level, f.max_level());
    return level;
}

AnalysisResult run_pipeline(Side side, Presentation pres, const FqPtr& field, int d,
                            const OrderSpec& ord, int max_rounds) {
    OrderSpec o = ord.sheets() == d ? ord : OrderSpec::identity(d);
    JanetSet J = janet_algorithm(pres.gens, o, max_rounds);
    AnalysisResult res;
    res.side = side;
    res.presentation = std::move(pres);
    res.report = quantities(J, res.presentation.twist, field, d);
    if (res.report.finite) {
        split_top_low(J, res.report);
        action_on_generators(res.report);
        res.model = free_model(res.report);
        res.perfection_level = level_of_model(res.model);
    }
    return res;
}

SkewPoly det(const SkewMat& a, const std::vector<int>& rows, const std::vector<int>& cols,
             TwistPair twist, const FqPtr& field) {
    int n = static_cast<int>(rows.size());
    if (n == 1) return a[rows[0]][cols[0]];
    SkewPoly acc = SkewPoly::zero(twist, field);
    bool neg = false;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (int p = 0; p < n; ++p) {
        const SkewPoly& pivot = a[rows[0]][cols[p]];
        if (!pivot.is_zero()) {
            std::vector<int> sub_cols;
            for (int q = 0; q < n; ++q)
                if (q != p) sub_cols.push_back(cols[q]);
            SkewPoly term = pivot * det(a, sub_rows, sub_cols, twist, field);
            acc = neg ? acc - term : acc + term;
        }
        neg = !neg;
    }
    return acc;
}

}  // namespace

TwistPair forward_twist(Side side) { return side == Side::motive ? TwistPair{1, 0} : TwistPair{-1, 0}; }

TwistPair reverse_twist(Side side) { return side == Side::motive ? TwistPair{0, 1} : TwistPair{0, -1}; }

Presentation presentation_from_tmodule(const TModuleData& tm, Side side) {
    check_nilpotent(tm);
    TwistPair twist = forward_twist(side);
    Presentation pres{twist, {}};
    for (int i = 0; i < tm.d; ++i) {
        ModElem p = ModElem::basis_vector(twist, tm.field, tm.d, i + 1).shifted({0, 1});
        for (int j = 0; j < tm.d; ++j) {
            // Comotive side uses D* = transposed matrix with starred entries.
            SkewPoly entry = side == Side::motive ? tm.D[i][j] : tm.D[j][i].star();
            p = p - ModElem::basis_vector(twist, tm.field, tm.d, j + 1).times_left(entry);
        }
        pres.gens.push_back(p);
    }
    return pres;
}

AnalysisResult analyze_tmodule(const TModuleData& tm, Side side, const OrderSpec& ord,
                               int max_rounds) {
    return run_pipeline(side, presentation_from_tmodule(tm, side), tm.field, tm.d, ord,
                        max_rounds);
}

Presentation presentation_from_motive(const MotiveData& m) {
    TwistPair twist = reverse_twist(m.side);
    check_square(m.Theta, m.r, "operator action");
    Presentation pres{twist, {}};
    for (int i = 0; i < m.r; ++i) {
        ModElem p = ModElem::basis_vector(twist, m.field, m.r, i + 1).shifted({0, 1});
        for (int j = 0; j < m.r; ++j)
            p = p - ModElem::basis_vector(twist, m.field, m.r, j + 1).times_left(m.Theta[i][j]);
        pres.gens.push_back(p);
    }
    return pres;
}

EffectiveCheck check_effective(const MotiveData& m) {
    TwistPair twist = reverse_twist(m.side);
    check_square(m.Theta, m.r, "operator action");
    for (const auto& row : m.Theta)
        for (const auto& f : row)
            if (!f.univariate_in(Var::rho))
                fail_input("operator action entries must lie in K[t]");
    EffectiveCheck res;
    res.c = FieldElem::zero(m.field);
    std::vector<int> idx(m.r);
    for (int i = 0; i < m.r; ++i) idx[i] = i;
    SkewPoly rem = det(m.Theta, idx, idx, twist, m.field);
    if (rem.is_zero()) {
        res.diagnostic = "determinant is zero: the operator action is not injective";
        return res;
    }
    SkewPoly t_minus_theta = SkewPoly::variable(twist, m.field, Var::rho) -
                             SkewPoly::constant(twist, FieldElem::theta(m.field));
    while (true) {
        SkewPoly quot, r;
        SkewPoly::right_divmod(rem, t_minus_theta, Var::rho, quot, r);
        if (!r.is_zero()) break;
        rem = quot;
        ++res.s;
    }
    if (!rem.is_constant()) {
        res.diagnostic = "determinant is not a constant times a power of (t - theta)";
        res.s = 0;
        return res;
    }
    res.effective = true;
    res.c = rem.coeff({0, 0});
    return res;
}

ReverseResult tmodule_from_motive(const MotiveData& m, const OrderSpec& ord, int max_rounds) {
    EffectiveCheck ec = check_effective(m);
    if (!ec.effective)
        fail(Errc::not_effective,
             (m.side == Side::motive ? "motive is not effective: " : "comotive is not effective: ") +
                 ec.diagnostic);
    Presentation pres = presentation_from_motive(m);
    ReverseResult res;
    res.analysis = run_pipeline(m.side, std::move(pres), m.field, m.r, ord, max_rounds);
    if (!res.analysis.report.finite) return res;

    // The t-action on the operator-ring basis is phi_t. On the comotive side
    // it arrives as D*, so transpose and unstar.
    const SkewMat& c = res.analysis.model.action;
    int d = res.analysis.model.s1;
    res.tm.d = d;
    res.tm.field = m.field;
    res.tm.theta = FieldElem::theta(m.field);
    res.tm.D.assign(d, {});
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            res.tm.D[i].push_back(m.side == Side::motive
                                      ? sigma_to_rho(c[i][j], {1, 0})
                                      : sigma_to_rho(c[j][i], {-1, 0}).unstar());
    check_nilpotent(res.tm);
    res.has_tmodule = true;
    return res;
}

}  // namespace tmot
