#include "tmot/janet.hpp"

#include <algorithm>

namespace tmot {

bool JanetSet::cone_contains(const ConePair& p, const OrderSpec& ord, const ModMono& m) {
    auto [lm, lc] = p.b.leading(ord);
    if (lm.sheet != m.sheet) return false;
    long dk = m.m.k - lm.m.k;
    long dj = m.m.j - lm.m.j;
    if (dk < 0 || dj < 0) return false;
    if (dk > 0 && !p.mult_rho) return false;
    if (dj > 0 && !p.mult_sigma) return false;
    return true;
}

namespace {

// Index of the reducer for monomial m, or -1. Ties: greatest lm, then
// earliest in the list.
int pick_reducer(const JanetSet& T, const ModMono& m) {
    int best = -1;
    ModMono best_lm;
    for (int i = 0; i < static_cast<int>(T.pairs.size()); ++i) {
        if (!JanetSet::cone_contains(T.pairs[i], T.ord, m)) continue;
        ModMono lm = T.pairs[i].b.leading(T.ord).first;
        if (best == -1 || T.ord.greater(lm, best_lm)) {
            best = i;
            best_lm = lm;
        }
    }
    return best;
}

}  // namespace

ModElem normal_form(const ModElem& g, const JanetSet& T) {
    ModElem h = g;
    while (!h.is_zero()) {
        // largest reducible monomial of h
        ModMono target;
        int reducer = -1;
        for (const auto& [m, c] : h.terms()) {
            int r = pick_reducer(T, m);
            if (r < 0) continue;
            if (reducer == -1 || T.ord.greater(m, target)) {
                target = m;
                reducer = r;
            }
        }
        if (reducer < 0) break;
        const ConePair& p = T.pairs[reducer];
        auto [lm, lc] = p.b.leading(T.ord);
        Mono2 shift{target.m.k - lm.m.k, target.m.j - lm.m.j};
        ModElem step = p.b.shifted(shift);
        FieldElem step_lc = lc.frobenius(p.b.twist().power(shift.k, shift.j));
        h = h - step.scaled_left(h.coeff(target) / step_lc);
    }
    return h;
}

JanetSet janet_decomposition(const std::vector<ModElem>& G, const OrderSpec& ord) {
    JanetSet J;
    J.ord = ord;
    if (G.empty()) return J;
    std::vector<std::pair<ModMono, const ModElem*>> items;
    for (const auto& g : G) {
        if (g.is_zero()) fail_internal("janet decomposition of zero element");
        items.emplace_back(g.leading(ord).first, &g);
    }
    for (const auto& [lm1, g1] : items)
        for (const auto& [lm2, g2] : items) {
            if (g1 == g2) continue;
            if (lm1.sheet == lm2.sheet && lm1.m.k <= lm2.m.k && lm1.m.j <= lm2.m.j)
                fail_internal("janet decomposition requires auto-reduced input");
        }
    std::stable_sort(items.begin(), items.end(), [&](const auto& a, const auto& b) {
        return ord.greater(a.first, b.first);
    });
    // sheets in rank order, each sheet's elements already descending by lm
    for (int r = 0; r < ord.sheets(); ++r) {
        int sheet = ord.perm()[r];
        const ModElem* prev = nullptr;
        long prev_k = 0;
        for (const auto& [lm, g] : items) {
            if (lm.sheet != sheet) continue;
            if (prev == nullptr) {
                J.pairs.push_back({*g, true, true});
            } else {
                for (long k = prev_k - lm.m.k - 1; k >= 0; --k)
                    J.pairs.push_back({g->shifted({k, 0}), false, true});
            }
            prev = g;
            prev_k = lm.m.k;
        }
    }
    return J;
}

std::vector<ModElem> auto_reduce(std::vector<ModElem> G, const OrderSpec& ord) {
    std::erase_if(G, [](const ModElem& g) { return g.is_zero(); });
    auto sort_desc = [&] {
        std::stable_sort(G.begin(), G.end(), [&](const ModElem& a, const ModElem& b) {
            return ord.greater(a.leading(ord).first, b.leading(ord).first);
        });
    };
    sort_desc();
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = G.size(); i-- > 0;) {
            JanetSet others;
            others.ord = ord;
            for (size_t j = 0; j < G.size(); ++j)
                if (j != i) others.pairs.push_back({G[j], true, true});
            ModElem nf = normal_form(G[i], others);
            if (nf == G[i]) continue;
            if (nf.is_zero())
                G.erase(G.begin() + static_cast<long>(i));
            else
                G[i] = std::move(nf);
            sort_desc();
            changed = true;
            break;
        }
    }
    return G;
}

JanetSet janet_algorithm(std::vector<ModElem> G, const OrderSpec& ord, int max_rounds) {
    for (int round = 0; round < max_rounds; ++round) {
        G = auto_reduce(G, ord);
        JanetSet J = janet_decomposition(G, ord);
        std::vector<ModElem> P;
        for (const auto& p : J.pairs) {
            for (Var v : {Var::rho, Var::sigma}) {
                if (p.multiplicative(v)) continue;
                Mono2 step = v == Var::rho ? Mono2{1, 0} : Mono2{0, 1};
                ModElem nf = normal_form(p.b.shifted(step), J);
                if (!nf.is_zero()) P.push_back(std::move(nf));
            }
        }
        if (P.empty()) {
            J.certified = true;
            return J;
        }
        G.clear();
        for (const auto& p : J.pairs) G.push_back(p.b);
        for (auto& f : P) G.push_back(std::move(f));
    }
    fail_internal("janet algorithm exceeded max_rounds = " + std::to_string(max_rounds));
}

}  // namespace tmot
