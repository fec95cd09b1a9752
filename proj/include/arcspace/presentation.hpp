#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcspace/poly.hpp"
#include "arcspace/series.hpp"

namespace arcspace {

// Affine variety presented by generators in N ambient variables, with a
// claimed dimension d (trusted input, sanity-checked downstream).
struct AffineVariety {
    std::string name;
    Field field;
    int ambient_dim = 0;                  // N
    int dim = 0;                          // d
    std::vector<std::string> var_names;   // length N
    std::vector<MultiPoly> gens;          // length r

    int ngens() const { return static_cast<int>(gens.size()); }
};

// Ideal of a closed subscheme of a fixed variety.
struct SubschemeIdeal {
    std::string variety_name;
    std::vector<MultiPoly> gens;
};

// Morphism X -> Y given by component polynomials in the source variables.
struct MorphismPres {
    std::string name;
    AffineVariety source;
    AffineVariety target;
    std::vector<MultiPoly> components;  // length = target.ambient_dim
};

// Arc stored as an exact polynomial parametrization, re-expandable at any
// precision.
struct ArcGen {
    Field field;
    // coords[i] = coefficient vector of the i-th coordinate polynomial in t
    std::vector<std::vector<FieldValue>> coords;

    int ncoords() const { return static_cast<int>(coords.size()); }
    std::vector<TruncSeries> emit(int precision) const;
    std::vector<FieldValue> base_point() const;

    static ArcGen from_monomials(Field f, const std::vector<int>& t_powers);
};

// Finite-level jet: coefficient vectors of length level+1 per coordinate.
struct Jet {
    int level = 0;
    std::vector<std::vector<FieldValue>> coeffs;

    int ncoords() const { return static_cast<int>(coeffs.size()); }
    std::vector<TruncSeries> as_series(Field f) const;
    bool operator==(const Jet& o) const { return level == o.level && coeffs == o.coeffs; }
};

struct ArcValidation {
    bool ok = true;
    int generator = 0;    // 1-based index of the first failing generator
    int coeff_index = 0;  // exponent of t at the first nonzero coefficient
};

ArcValidation validate_arc(const AffineVariety& v, const ArcGen& arc, int precision);

// Fitting ideal of the differentials: all (N-d) x (N-d) minors of the
// Jacobian matrix (dg_i/dx_j).
SubschemeIdeal jacobian_ideal(const AffineVariety& v);

// Fitting ideal of the relative differentials of f: N x N minors of the
// stacked matrix of source-generator and component Jacobian rows.
SubschemeIdeal jacobian_ideal_of_morphism(const MorphismPres& f);

Order ord_ideal(const ArcGen& arc, const SubschemeIdeal& ideal, int precision);
Order ord_ideal_series(const std::vector<TruncSeries>& point, const SubschemeIdeal& ideal);

ArcGen push_arc(const MorphismPres& f, const ArcGen& arc);

// Determinant of a square polynomial matrix (row-major), by Laplace expansion;
// sizes in scope are tiny.
MultiPoly poly_det(const std::vector<MultiPoly>& m, int n);

}  // namespace arcspace
