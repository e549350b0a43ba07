#include "tmot/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tmot/error.hpp"

namespace tmot {

namespace {

std::string mono_str(const ModMono& m) {
    std::ostringstream os;
    os << "rho^" << m.m.k << " sigma^" << m.m.j << " k" << m.sheet;
    return os.str();
}

bool fits(const ModElem& g, DegreeBox box) {
    for (const auto& [m, c] : g.terms())
        if (m.m.k > box.k_max || m.m.j > box.j_max) return false;
    return true;
}

}  // namespace

TruncatedModule::TruncatedModule(const std::vector<ModElem>& gens, DegreeBox box,
                                 const OrderSpec& ord, long budget)
    : box_(box), ord_(ord) {
    if (box.k_max < 0 || box.j_max < 0) fail_input("degree box bounds must be non-negative");
    if (gens.empty()) fail_input("truncated submodule needs at least one generator");
    int d = gens.front().dim();
    long count = static_cast<long>(d) * (box.k_max + 1) * (box.j_max + 1);
    if (count > budget)
        fail_input("degree box holds " + std::to_string(count) +
                   " monomials, over the budget; choose a smaller box");
    for (int sheet = 1; sheet <= d; ++sheet)
        for (long k = 0; k <= box.k_max; ++k)
            for (long j = 0; j <= box.j_max; ++j) cols_.push_back({sheet, {k, j}});
    std::sort(cols_.begin(), cols_.end(),
              [&](const ModMono& a, const ModMono& b) { return ord_.greater(a, b); });
    for (size_t i = 0; i < cols_.size(); ++i) index_[cols_[i]] = i;

    for (const ModElem& g : gens) {
        if (g.is_zero()) continue;
        bool shifted_in = false;
        for (long a = 0; a <= box.k_max; ++a)
            for (long b = 0; b <= box.j_max; ++b) {
                Row v;
                if (!to_row(g.shifted({a, b}), v)) continue;
                shifted_in = true;
                reduce(v);
                if (v.empty()) continue;
                size_t lead = v.begin()->first;
                FieldElem inv = v.begin()->second.inverse();
                for (auto& [i, x] : v) x = x * inv;
                rows_[lead] = std::move(v);
            }
        if (!shifted_in) fail_input("a generator does not fit the degree box");
    }
}

std::vector<ModMono> TruncatedModule::pivots() const {
    std::vector<ModMono> r;
    for (const auto& [col, row] : rows_) r.push_back(cols_[col]);
    return r;
}

bool TruncatedModule::to_row(const ModElem& g, Row& out) const {
    if (!fits(g, box_)) return false;
    out.clear();
    for (const auto& [m, c] : g.terms()) out[index_.at(m)] = c;
    return true;
}

void TruncatedModule::reduce(Row& v) const {
    while (!v.empty()) {
        size_t lead = v.begin()->first;
        auto it = rows_.find(lead);
        if (it == rows_.end()) return;
        FieldElem c = v.begin()->second;
        for (const auto& [i, x] : it->second) {
            auto vt = v.find(i);
            FieldElem next = (vt == v.end() ? FieldElem::zero(x.field()) : vt->second) - c * x;
            if (next.is_zero()) {
                if (vt != v.end()) v.erase(vt);
            } else {
                v[i] = next;
            }
        }
    }
}

bool TruncatedModule::contains(const ModElem& g) const {
    Row v;
    if (!to_row(g, v)) return false;
    reduce(v);
    return v.empty();
}

OracleVerdict verify_janet(const JanetSet& J, const std::vector<ModElem>& gens, DegreeBox box,
                           long budget) {
    OracleVerdict v;
    if (J.pairs.empty() || gens.empty()) {
        v.failures.push_back("empty basis or generator list");
        return v;
    }
    std::vector<ModElem> basis_elems;
    for (const auto& p : J.pairs) basis_elems.push_back(p.b);
    TruncatedModule span_gens(gens, box, J.ord, budget);
    TruncatedModule span_basis(basis_elems, box, J.ord, budget);

    v.membership_forward = true;
    for (const auto& b : basis_elems)
        if (!span_gens.contains(b)) {
            v.membership_forward = false;
            v.failures.push_back("basis element outside the generated submodule");
        }
    v.membership_backward = true;
    for (const auto& g : gens)
        if (!span_basis.contains(g)) {
            v.membership_backward = false;
            v.failures.push_back("generator outside the span of the basis");
        }

    v.cones_disjoint = true;
    for (const ModMono& m : span_basis.columns()) {
        int hits = 0;
        for (const auto& p : J.pairs)
            if (JanetSet::cone_contains(p, J.ord, m)) ++hits;
        if (hits > 1) {
            v.cones_disjoint = false;
            v.failures.push_back("cones overlap at " + mono_str(m));
        }
    }

    // Witnessed cone monomials: cone members whose witness multiple stays in
    // the box. At a sufficient box these are exactly the truncated pivots.
    std::set<ModMono> witnessed;
    std::set<ModMono> in_cones;
    for (const auto& p : J.pairs) {
        ModMono lm = p.b.leading(J.ord).first;
        long ka = p.mult_rho ? box.k_max - lm.m.k : 0;
        long jb = p.mult_sigma ? box.j_max - lm.m.j : 0;
        for (long a = 0; a <= ka; ++a)
            for (long b = 0; b <= jb; ++b) {
                ModMono target{lm.sheet, {lm.m.k + a, lm.m.j + b}};
                in_cones.insert(target);
                if (fits(p.b.shifted({a, b}), box)) witnessed.insert(target);
            }
    }
    for (const ModMono& m : span_basis.columns()) {
        for (const auto& p : J.pairs)
            if (JanetSet::cone_contains(p, J.ord, m)) in_cones.insert(m);
    }

    // The cone and staircase comparisons run against the basis span: in-box
    // multiples of a basis element need not be reachable from in-box multiples
    // of the raw generators, so the generator span can under-fill near the box
    // edge. The membership checks above tie the two spans together.
    std::vector<ModMono> pivot_list = span_basis.pivots();
    std::set<ModMono> pivots(pivot_list.begin(), pivot_list.end());
    v.cone_cover = true;
    for (const ModMono& m : pivots)
        if (!in_cones.count(m)) {
            v.cone_cover = false;
            v.failures.push_back("pivot " + mono_str(m) + " outside every cone");
        }
    for (const ModMono& m : witnessed)
        if (!pivots.count(m)) {
            v.cone_cover = false;
            v.failures.push_back("cone monomial " + mono_str(m) + " is not a pivot");
        }

    // Staircase residues must be independent in the truncated quotient and
    // span it up to cone corners whose witness multiple leaves the box.
    long staircase = 0, unwitnessed = 0;
    bool clash = false;
    for (const ModMono& m : span_basis.columns()) {
        if (!in_cones.count(m)) {
            ++staircase;
            if (pivots.count(m)) clash = true;
        } else if (!witnessed.count(m)) {
            ++unwitnessed;
        }
    }
    long quot = span_basis.quotient_dimension();
    v.staircase_basis = !clash && staircase <= quot && quot <= staircase + unwitnessed;
    if (!v.staircase_basis)
        v.failures.push_back("quotient dimension " + std::to_string(quot) +
                             " outside [" + std::to_string(staircase) + ", " +
                             std::to_string(staircase + unwitnessed) + "]");
    return v;
}

}  // namespace tmot
