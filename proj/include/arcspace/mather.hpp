#pragma once

#include <vector>

#include "arcspace/presentation.hpp"
#include "arcspace/snf.hpp"

namespace arcspace {

// Invariant factors of the differentials pulled back along an arc: the module
// K[[t]]^N / im(J^T) decomposed as a free part of rank d plus torsion.
struct DiffProfile {
    int free_rank = 0;
    std::vector<int> torsion;  // positive diagonal orders, sorted
    SnfResult snf;             // of the N x r matrix J^T along the arc
    int precision = 0;

    int total() const {
        int s = 0;
        for (int t : torsion) s += t;
        return s;
    }
};

struct DiscrepancyResult {
    int e = 0;
    std::vector<int> diag;  // diagonal orders of A
    SeriesMatrix A;
    int a = 0, b = 0, c = 0;
    int precision = 0;
};

struct ContactProfile {
    int a = 0, b = 0, e = 0, p = 0, q = 0;
    bool operator==(const ContactProfile&) const = default;
    auto operator<=>(const ContactProfile&) const = default;
};

DiffProfile invariant_factors(const AffineVariety& v, const ArcGen& arc, int precision);

// The d x d matrix carrying the free part of the target differentials along
// f(arc) to the free part of the source differentials along arc.
SeriesMatrix transition_matrix(const MorphismPres& f, const ArcGen& arc, int precision);

DiscrepancyResult mather_discrepancy(const MorphismPres& f, const ArcGen& arc);

ContactProfile contact_profile(const MorphismPres& f, const SubschemeIdeal& Z,
                               const SubschemeIdeal& V, const ArcGen& arc);

}  // namespace arcspace
