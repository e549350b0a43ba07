#pragma once

#include <map>
#include <string>
#include <vector>

#include "tmot/janet.hpp"

namespace tmot {

// Degree window rho^k sigma^j with 0 <= k <= k_max, 0 <= j <= j_max on every
// sheet.
struct DegreeBox {
    long k_max = 0;
    long j_max = 0;
};

// Row-echelon K-basis of the span of all monomial multiples of the generators
// whose support stays inside the box. Columns are the box monomials in
// descending module order; the elimination is plain sparse Gaussian reduction
// and never consults the Janet machinery.
class TruncatedModule {
public:
    TruncatedModule(const std::vector<ModElem>& gens, DegreeBox box, const OrderSpec& ord,
                    long budget = 20000);

    const std::vector<ModMono>& columns() const { return cols_; }
    std::vector<ModMono> pivots() const;
    long dimension() const { return static_cast<long>(rows_.size()); }
    long quotient_dimension() const { return static_cast<long>(cols_.size() - rows_.size()); }

    // Membership of g in the generated submodule, decidable only when the
    // support of g fits the box; returns false otherwise.
    bool contains(const ModElem& g) const;

private:
    using Row = std::map<size_t, FieldElem>;  // column index -> nonzero coeff

    DegreeBox box_;
    OrderSpec ord_;
    std::vector<ModMono> cols_;            // descending
    std::map<ModMono, size_t> index_;
    std::map<size_t, Row> rows_;           // pivot column -> row with pivot 1

    bool to_row(const ModElem& g, Row& out) const;
    // Forward reduction against all pivot rows; leaves the unreducible part.
    void reduce(Row& v) const;
};

struct OracleVerdict {
    bool membership_forward = false;   // every Janet element lies in <gens>
    bool membership_backward = false;  // every generator lies in <Janet elements>
    bool cones_disjoint = false;
    bool cone_cover = false;       // witnessed cone monomials = truncated pivots
    bool staircase_basis = false;  // staircase residues span the witnessed quotient
    std::vector<std::string> failures;

    bool pass() const {
        return membership_forward && membership_backward && cones_disjoint && cone_cover &&
               staircase_basis;
    }
};

OracleVerdict verify_janet(const JanetSet& J, const std::vector<ModElem>& gens, DegreeBox box,
                           long budget = 20000);

}  // namespace tmot
