#pragma once

#include <vector>

#include "tmot/janet.hpp"

namespace tmot {

using SkewMat = std::vector<std::vector<SkewPoly>>;

// Structural data read off a certified Janet basis. Degrees n[i] use -1 for
// "infinite" (no pure-rho leading monomial on sheet i+1).
struct StructureReport {
    TwistPair twist;
    FqPtr field;
    int d = 0;
    OrderSpec ord;
    JanetSet basis;

    std::vector<long> n;
    std::vector<long> m;
    bool finite = false;  // all n[i] finite
    long rank = 0;        // sum of m[i]

    std::vector<ModMono> w_gen;  // descending module order; finite sheets only
    std::vector<ModMono> w_ind;

    // Filled by split_top_low / action_on_generators (finite case).
    std::vector<ModElem> b_top;  // indexed by sheet-1
    std::vector<ModElem> b_low;
    SkewMat relations;  // rows = b_low elements in w_gen coordinates
    SkewMat action;     // C: rho * w_i = sum_j C[i][j] * w_j in the quotient

    int column_of(const ModMono& w) const;
};

// Free basis extracted from the relations via elementary divisors.
struct FreeModel {
    int s0 = 0;  // number of unit pivots
    int s1 = 0;  // rank of the free module
    SkewMat u, u_inv, v, v_inv;
    SkewMat basis;   // s1 x s: e_i = sum_j basis[i][j] * w_j
    SkewMat action;  // C~: rho * e_i = sum_j action[i][j] * e_j
};

StructureReport quantities(const JanetSet& J, TwistPair twist, const FqPtr& field, int d);

void split_top_low(const JanetSet& J, StructureReport& report);

void action_on_generators(StructureReport& report);

FreeModel free_model(const StructureReport& report);

// Helpers shared with tests and the CLI layer.
SkewMat mat_identity(TwistPair twist, const FqPtr& field, int n);
SkewMat mat_mul(const SkewMat& a, const SkewMat& b);
SkewMat mat_coeff_twist(const SkewMat& a, long power);
bool mat_equal(const SkewMat& a, const SkewMat& b);

}  // namespace tmot
