#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "arcspace/mather.hpp"
#include "arcspace/motivic.hpp"
#include "arcspace/presentation.hpp"

namespace arcspace {

// ord of the ideal generated by a set of chart coordinates, pinned exactly or
// bounded below; the order value may be affine in the stratum parameters.
struct OrderConstraint {
    std::vector<int> coords;
    int o0 = 0;
    std::vector<int> o_coef;
    bool exact = true;  // false: ord >= value

    int value_at(const std::vector<int>& params) const;
};

// Closed-form description of a family of cylinders: the class of its level-m
// image, the stabilization level m and the integrand weight, all affine in the
// integer parameters.
struct StratumSpec {
    std::string name;
    std::vector<int> pmin;      // one lower bound per parameter
    MotivicClass cls_base;      // class = cls_base * L^(sum cls_coef[i] * p_i)
    std::vector<int> cls_coef;
    int m0 = 0;                 // m = m0 + sum m_coef[i] * p_i
    std::vector<int> m_coef;
    int w0 = 0;                 // weight = w0 + sum w_coef[i] * p_i
    std::vector<int> w_coef;

    // counting description: per contributing chart, the exact coordinate-ideal
    // orders; chart = -1 means the target variety
    struct ChartPart {
        int chart = -1;
        std::vector<OrderConstraint> constraints;
    };
    std::vector<ChartPart> parts;

    int nparams() const { return static_cast<int>(pmin.size()); }
    int m_at(const std::vector<int>& params) const;
    int w_at(const std::vector<int>& params) const;
    MotivicClass class_at(const std::vector<int>& params) const;
    void check_params(const std::vector<int>& params) const;
};

// One affine chart of the source of a catalog morphism.
struct ChartSpec {
    AffineVariety X;
    MorphismPres f;                   // chart -> target
    std::vector<int> dedup_zero;      // coordinates whose constant term must vanish
    // factorization through an intermediate stage, for composite examples
    std::optional<MorphismPres> mid;     // chart -> intermediate chart
    std::optional<MorphismPres> bottom;  // intermediate chart -> target
    std::function<ArcGen(std::mt19937_64&)> sample;
};

// One constraint-defined cylinder on one chart realizing a single contact
// profile, together with the level at which membership and the fiber identity
// are decidable.
struct ProfilePiece {
    int chart = 0;
    std::vector<OrderConstraint> constraints;  // concrete orders (no parameters)
    ContactProfile profile;
    int level = 0;
    // fast arc-existence test for level-`level` jets on singular charts; null
    // when every jet of the chart lifts
    std::function<bool(const std::int64_t* flat, int level, std::int64_t q)> liftable;
    std::function<ArcGen(std::mt19937_64&)> witness;
};

struct CatalogExample {
    std::string id;
    Field field;
    int d = 2;
    AffineVariety target;
    std::vector<ChartSpec> charts;
    SubschemeIdeal Z, V;
    std::vector<StratumSpec> lhs;   // strata on the target, weight = ord_Z
    std::vector<StratumSpec> rhs;   // strata on the source, weight = ord_{f^-1 Z} + e
    std::optional<MotivicRational> expected;  // common value when exact strata exist
    std::function<std::vector<ProfilePiece>(int cap)> profiles;

    bool has_exact_sides() const { return !lhs.empty() && !rhs.empty(); }
};

AffineVariety catalog_affine_plane(Field f);
AffineVariety catalog_cusp(Field f);
AffineVariety catalog_cone(Field f);
ArcGen catalog_cusp_arc(Field f, const std::vector<FieldValue>& w);
ArcGen catalog_cone_arc(Field f, const std::vector<FieldValue>& a,
                        const std::vector<FieldValue>& b);

CatalogExample example_identity(Field f);         // E1
CatalogExample example_blowup(Field f);           // E2
CatalogExample example_weighted_blowup(Field f);  // E3, singular source
CatalogExample example_double_blowup(Field f);    // E4, composite

// by id: "identity", "blowup", "weighted-blowup", "double-blowup"
CatalogExample catalog_example(const std::string& id, Field f);
std::vector<std::string> catalog_example_ids();

std::vector<FieldValue> random_poly_coeffs(Field f, int len, std::mt19937_64& rng,
                                           bool unit_start = false);
// t^shift * unit-polynomial with `len` random higher coefficients
std::vector<FieldValue> random_order_coeffs(Field f, int shift, int len,
                                            std::mt19937_64& rng);

}  // namespace arcspace
