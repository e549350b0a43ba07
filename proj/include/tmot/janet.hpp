#pragma once

#include <vector>

#include "tmot/freemod.hpp"

namespace tmot {

// Generator together with its multiplicative variables; the pair spans the
// cone Mon(mu) * lm(b).
struct ConePair {
    ModElem b;
    bool mult_rho = false;
    bool mult_sigma = false;

    bool multiplicative(Var v) const { return v == Var::rho ? mult_rho : mult_sigma; }
};

struct JanetSet {
    OrderSpec ord;
    std::vector<ConePair> pairs;
    bool certified = false;

    // True when m*kappa_i lies in the cone of the pair: same sheet, lm(b)
    // divides m, and the quotient only uses multiplicative variables.
    static bool cone_contains(const ConePair& p, const OrderSpec& ord, const ModMono& m);
};

ModElem normal_form(const ModElem& g, const JanetSet& T);

JanetSet janet_decomposition(const std::vector<ModElem>& G, const OrderSpec& ord);

std::vector<ModElem> auto_reduce(std::vector<ModElem> G, const OrderSpec& ord);

JanetSet janet_algorithm(std::vector<ModElem> G, const OrderSpec& ord, int max_rounds = 1000);

}  // namespace tmot
