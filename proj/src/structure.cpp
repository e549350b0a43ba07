#include "tmot/structure.hpp"

#include <algorithm>
#include <limits>

namespace tmot {

int StructureReport::column_of(const ModMono& w) const {
    for (size_t i = 0; i < w_gen.size(); ++i)
        if (w_gen[i] == w) return static_cast<int>(i);
    fail_internal("monomial outside the generator staircase");
}

SkewMat mat_identity(TwistPair twist, const FqPtr& field, int n) {
    SkewMat r(n, std::vector<SkewPoly>(n, SkewPoly::zero(twist, field)));
    for (int i = 0; i < n; ++i) r[i][i] = SkewPoly::constant(twist, FieldElem::one(field));
    return r;
}

SkewMat mat_mul(const SkewMat& a, const SkewMat& b) {
    size_t n = a.size(), k = b.size();
    if (n == 0 || k == 0) return {};
    size_t m = b[0].size();
    SkewMat r(n, std::vector<SkewPoly>(m, SkewPoly::zero(a[0][0].twist(), a[0][0].field())));
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != k) fail_internal("matrix shape mismatch");
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] = r[i][j] + a[i][l] * b[l][j];
        }
    }
    return r;
}

SkewMat mat_coeff_twist(const SkewMat& a, long power) {
    SkewMat r = a;
    for (auto& row : r)
        for (auto& e : row) e = e.coeff_twist(power);
    return r;
}

bool mat_equal(const SkewMat& a, const SkewMat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

StructureReport quantities(const JanetSet& J, TwistPair twist, const FqPtr& field, int d) {
    if (!J.certified) fail_internal("quantities require a certified Janet basis");
    StructureReport rep;
    rep.twist = twist;
    rep.field = field;
    rep.d = d;
    rep.ord = J.ord;
    rep.basis = J;
    rep.n.assign(d, -1);
    rep.m.assign(d, -1);
    for (const auto& p : J.pairs) {
        auto [lm, lc] = p.b.leading(J.ord);
        int i = lm.sheet - 1;
        if (lm.m.j == 0 && (rep.n[i] < 0 || lm.m.k < rep.n[i])) rep.n[i] = lm.m.k;
        if (rep.m[i] < 0 || lm.m.k < rep.m[i]) rep.m[i] = lm.m.k;
    }
    rep.finite = std::all_of(rep.n.begin(), rep.n.end(), [](long v) { return v >= 0; });
    rep.rank = 0;
    for (long v : rep.m) {
        if (v < 0) {
            rep.rank = -1;
            break;
        }
        rep.rank += v;
    }
    for (int r = 0; r < d; ++r) {
        int sheet = J.ord.perm()[r];
        if (rep.n[sheet - 1] >= 0)
            for (long j = rep.n[sheet - 1] - 1; j >= 0; --j) rep.w_gen.push_back({sheet, {j, 0}});
        if (rep.m[sheet - 1] >= 0)
            for (long j = rep.m[sheet - 1] - 1; j >= 0; --j) rep.w_ind.push_back({sheet, {j, 0}});
    }
    return rep;
}

namespace {

// b in w_gen coordinates: row of sigma-polynomials, one per staircase monomial.
std::vector<SkewPoly> staircase_row(const StructureReport& rep, const ModElem& b) {
    std::vector<SkewPoly> row;
    row.reserve(rep.w_gen.size());
    ModElem covered(rep.twist, rep.field, rep.d);
    for (const auto& w : rep.w_gen) {
        SkewPoly c = b.sigma_coefficient(w.sheet, w.m.k);
        covered = covered + ModElem::basis_vector(rep.twist, rep.field, rep.d, w.sheet)
                                .shifted(w.m)
                                .times_left(c);
        row.push_back(std::move(c));
    }
    if (covered != b) fail_internal("element does not lie in the sigma-span of the staircase");
    return row;
}

}  // namespace

void split_top_low(const JanetSet& J, StructureReport& rep) {
    if (!rep.finite) fail_internal("split_top_low requires all n_i finite");
    rep.b_top.clear();
    rep.b_low.clear();
    rep.relations.clear();
    std::vector<int> top_index(rep.d, -1);
    for (size_t k = 0; k < J.pairs.size(); ++k) {
        auto [lm, lc] = J.pairs[k].b.leading(J.ord);
        if (lm.m.j == 0 && lm.m.k == rep.n[lm.sheet - 1]) {
            if (top_index[lm.sheet - 1] != -1) fail_internal("duplicate top element");
            if (!J.pairs[k].mult_rho || !J.pairs[k].mult_sigma)
                fail_internal("top element without full multiplicative set");
            top_index[lm.sheet - 1] = static_cast<int>(k);
        }
    }
    for (int i = 0; i < rep.d; ++i) {
        if (top_index[i] < 0) fail_internal("missing top element on a sheet");
        rep.b_top.push_back(J.pairs[top_index[i]].b);
    }
    for (size_t k = 0; k < J.pairs.size(); ++k) {
        if (std::find(top_index.begin(), top_index.end(), static_cast<int>(k)) !=
            top_index.end())
            continue;
        JanetSet others;
        others.ord = J.ord;
        for (size_t l = 0; l < J.pairs.size(); ++l)
            if (l != k) others.pairs.push_back(J.pairs[l]);
        rep.b_low.push_back(normal_form(J.pairs[k].b, others));
    }
    for (const auto& b : rep.b_low) rep.relations.push_back(staircase_row(rep, b));
}

void action_on_generators(StructureReport& rep) {
    if (!rep.finite) fail_internal("action requires all n_i finite");
    size_t s = rep.w_gen.size();
    rep.action.assign(s, std::vector<SkewPoly>(s, SkewPoly::zero(rep.twist, rep.field)));
    for (size_t idx = 0; idx < s; ++idx) {
        const ModMono& w = rep.w_gen[idx];
        int i = w.sheet;
        long j = w.m.k;
        if (j < rep.n[i - 1] - 1) {
            int col = rep.column_of({i, {j + 1, 0}});
            rep.action[idx][col] = SkewPoly::constant(rep.twist, FieldElem::one(rep.field));
            continue;
        }
        const ModElem& bi = rep.b_top[i - 1];
        FieldElem lc = bi.leading(rep.ord).second;
        ModElem top = ModElem::basis_vector(rep.twist, rep.field, rep.d, i).shifted({rep.n[i - 1], 0});
        ModElem elem = top - bi.scaled_left(FieldElem::one(rep.field) / lc);
        rep.action[idx] = staircase_row(rep, elem);
    }
}

namespace {

long entry_degree(const SkewPoly& p) { return p.degree(Var::sigma); }

}  // namespace

FreeModel free_model(const StructureReport& rep) {
    size_t s = rep.w_gen.size();
    size_t r = rep.relations.size();
    TwistPair tw = rep.twist;
    const FqPtr& field = rep.field;

    SkewMat b = rep.relations;
    FreeModel fm;
    fm.u = mat_identity(tw, field, static_cast<int>(r));
    fm.u_inv = fm.u;
    fm.v = mat_identity(tw, field, static_cast<int>(s));
    fm.v_inv = fm.v;

    auto row_swap = [&](size_t a, size_t c) {
        if (a == c) return;
        std::swap(b[a], b[c]);
        std::swap(fm.u[a], fm.u[c]);
        for (auto& row : fm.u_inv) std::swap(row[a], row[c]);
    };
    // row_a -= q * row_c
    auto row_sub = [&](size_t a, size_t c, const SkewPoly& q) {
        for (size_t j = 0; j < s; ++j) b[a][j] = b[a][j] - q * b[c][j];
        for (size_t j = 0; j < r; ++j) fm.u[a][j] = fm.u[a][j] - q * fm.u[c][j];
        for (size_t i = 0; i < r; ++i) fm.u_inv[i][c] = fm.u_inv[i][c] + fm.u_inv[i][a] * q;
    };
    auto row_scale = [&](size_t a, const FieldElem& c) {
        SkewPoly cp = SkewPoly::constant(tw, c);
        SkewPoly ci = SkewPoly::constant(tw, FieldElem::one(field) / c);
        for (size_t j = 0; j < s; ++j) b[a][j] = cp * b[a][j];
        for (size_t j = 0; j < r; ++j) fm.u[a][j] = cp * fm.u[a][j];
        for (size_t i = 0; i < r; ++i) fm.u_inv[i][a] = fm.u_inv[i][a] * ci;
    };
    // move column from to position to, shifting the columns in between right
    auto col_rotate = [&](size_t to, size_t from) {
        if (to == from) return;
        auto rotate_cols = [&](SkewMat& mat) {
            for (auto& row : mat) {
                SkewPoly moved = row[from];
                for (size_t j = from; j > to; --j) row[j] = row[j - 1];
                row[to] = std::move(moved);
            }
        };
        rotate_cols(b);
        rotate_cols(fm.v);
        std::vector<SkewPoly> moved = fm.v_inv[from];
        for (size_t i = from; i > to; --i) fm.v_inv[i] = fm.v_inv[i - 1];
        fm.v_inv[to] = std::move(moved);
    };
    // col_a -= col_c * q
    auto col_sub = [&](size_t a, size_t c, const SkewPoly& q) {
        for (size_t i = 0; i < b.size(); ++i) b[i][a] = b[i][a] - b[i][c] * q;
        for (size_t i = 0; i < s; ++i) fm.v[i][a] = fm.v[i][a] - fm.v[i][c] * q;
        for (size_t j = 0; j < s; ++j) fm.v_inv[c][j] = fm.v_inv[c][j] + q * fm.v_inv[a][j];
    };

    size_t p = 0;
    while (p < r && p < s) {
        // least sigma-degree nonzero entry in the remaining block, row-major
        size_t bi = 0, bj = 0;
        long best = std::numeric_limits<long>::max();
        for (size_t i = p; i < r; ++i)
            for (size_t j = p; j < s; ++j)
                if (!b[i][j].is_zero() && entry_degree(b[i][j]) < best) {
                    best = entry_degree(b[i][j]);
                    bi = i;
                    bj = j;
                }
        if (best == std::numeric_limits<long>::max()) break;
        row_swap(p, bi);
        col_rotate(p, bj);
        bool settled = false;
        while (!settled) {
            for (size_t i = p + 1; i < r; ++i) {
                if (b[i][p].is_zero()) continue;
                SkewPoly q(tw, field), rem(tw, field);
                SkewPoly::right_divmod(b[i][p], b[p][p], Var::sigma, q, rem);
                if (!q.is_zero()) row_sub(i, p, q);
            }
            for (size_t j = p + 1; j < s; ++j) {
                if (b[p][j].is_zero()) continue;
                SkewPoly q(tw, field), rem(tw, field);
                SkewPoly::left_divmod(b[p][j], b[p][p], Var::sigma, q, rem);
                if (!q.is_zero()) col_sub(j, p, q);
            }
            settled = true;
            long pivot_deg = entry_degree(b[p][p]);
            for (size_t i = p + 1; i < r && settled; ++i)
                if (!b[i][p].is_zero()) settled = false;
            for (size_t j = p + 1; j < s && settled; ++j)
                if (!b[p][j].is_zero()) settled = false;
            if (!settled) {
                // a remainder of smaller degree exists in the cross; make it the pivot
                size_t ni = p, nj = p;
                long nbest = pivot_deg;
                for (size_t i = p + 1; i < r; ++i)
                    if (!b[i][p].is_zero() && entry_degree(b[i][p]) < nbest) {
                        nbest = entry_degree(b[i][p]);
                        ni = i;
                        nj = p;
                    }
                for (size_t j = p + 1; j < s; ++j)
                    if (!b[p][j].is_zero() && entry_degree(b[p][j]) < nbest) {
                        nbest = entry_degree(b[p][j]);
                        ni = p;
                        nj = j;
                    }
                if (nbest >= pivot_deg) fail_internal("no progress in elementary divisor step");
                row_swap(p, ni);
                col_rotate(p, nj);
            }
        }
        if (!b[p][p].is_constant()) fail_internal("module not torsion-free");
        row_scale(p, FieldElem::one(field) / b[p][p].coeff({0, 0}));
        ++p;
    }
    fm.s0 = static_cast<int>(p);
    fm.s1 = static_cast<int>(s) - fm.s0;

    SkewMat check = mat_mul(mat_mul(fm.u, rep.relations), fm.v);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < s; ++j) {
            bool diag_one = i == j && i < p;
            SkewPoly expect = diag_one ? SkewPoly::constant(tw, FieldElem::one(field))
                                       : SkewPoly::zero(tw, field);
            if (check[i][j] != expect) fail_internal("diagonalization check failed");
        }
    if (!mat_equal(mat_mul(fm.u, fm.u_inv), mat_identity(tw, field, static_cast<int>(r))) ||
        !mat_equal(mat_mul(fm.v, fm.v_inv), mat_identity(tw, field, static_cast<int>(s))))
        fail_internal("transformation inverse check failed");

    fm.basis.assign(fm.v_inv.begin() + fm.s0, fm.v_inv.end());
    SkewMat full = mat_mul(mat_mul(mat_coeff_twist(fm.v_inv, tw.a_rho), rep.action), fm.v);
    fm.action.assign(fm.s1, std::vector<SkewPoly>(fm.s1, SkewPoly::zero(tw, field)));
    for (int i = 0; i < fm.s1; ++i)
        for (int j = 0; j < fm.s1; ++j) fm.action[i][j] = full[fm.s0 + i][fm.s0 + j];
    return fm;
}

}  // namespace tmot
