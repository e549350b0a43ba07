#pragma once

#include <string>
#include <vector>

#include "tmot/structure.hpp"

namespace tmot {

enum class Side { motive, comotive };

// Twist of the forward presentation (rho = tau resp. rho = the sigma operator,
// sigma variable = t) and of the reverse presentation (rho = t, sigma variable
// = the operator).
TwistPair forward_twist(Side side);
TwistPair reverse_twist(Side side);

// An Anderson t-module in coordinates: the matrix of phi_t over K<tau>.
// Entries are univariate in rho at twist (1, 0).
struct TModuleData {
    int d = 0;
    SkewMat D;
    FqPtr field;
    FieldElem theta;
};

// A (co)motive given by the operator action on a K[t]-basis. Entries are
// univariate in rho (= t) at the matching reverse twist.
struct MotiveData {
    int r = 0;
    SkewMat Theta;
    Side side = Side::motive;
    FqPtr field;
};

struct Presentation {
    TwistPair twist;
    std::vector<ModElem> gens;
};

// Full pipeline output for one side. model is meaningful only when
// report.finite holds (abelian resp. coabelian verdict).
struct AnalysisResult {
    Side side = Side::motive;
    Presentation presentation;
    StructureReport report;
    FreeModel model;
    int perfection_level = 0;  // max level in the emitted basis and action
};

struct EffectiveCheck {
    bool effective = false;
    FieldElem c;
    long s = 0;
    std::string diagnostic;
};

// Reverse dictionary output; tm is meaningful only when has_tmodule holds.
struct ReverseResult {
    AnalysisResult analysis;
    bool has_tmodule = false;
    TModuleData tm;
};

// p_i = t kappa_i - sum_j D_ij kappa_j (motive) or with D* = starred transpose
// (comotive). Validates the nilpotence condition on D_0 - theta I.
Presentation presentation_from_tmodule(const TModuleData& tm, Side side);

// p_i = sigma e_i - sum_j Theta_ij e_j over the reverse twist.
Presentation presentation_from_motive(const MotiveData& m);

AnalysisResult analyze_tmodule(const TModuleData& tm, Side side, const OrderSpec& ord = {},
                               int max_rounds = 1000);

// det(Theta) = c (t - theta)^s with c a nonzero constant.
EffectiveCheck check_effective(const MotiveData& m);

ReverseResult tmodule_from_motive(const MotiveData& m, const OrderSpec& ord = {},
                                  int max_rounds = 1000);

}  // namespace tmot
