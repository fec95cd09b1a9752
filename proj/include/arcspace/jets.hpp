#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcspace/presentation.hpp"

namespace arcspace {

// Equations of the level-n jet scheme: for each generator g and each
// 0 <= k <= n, the coefficient of t^k in g(x(t)) as a polynomial in the
// N*(n+1) coefficient variables x_{i,j} (variable index i*(n+1)+j).
struct JetSystem {
    int level = 0;
    int ambient_dim = 0;
    Field field;
    std::vector<std::vector<MultiPoly>> eqs;  // eqs[g][k]

    int nvars() const { return ambient_dim * (level + 1); }
    bool satisfied_by(const Jet& jet) const;
};

JetSystem jet_equations(const AffineVariety& v, int n);

Jet truncate_jet(const Jet& jet, int m);
Jet truncate_arc(const ArcGen& arc, int m);
Jet push_jet(const MorphismPres& f, const Jet& jet);

// Packed jet collection over F_q: each jet is a flat value vector in
// (coordinate, level) row-major order, entries in [0, q).
struct JetSet {
    int level = 0;
    int ncoords = 0;
    std::int64_t q = 0;
    std::vector<std::vector<std::int64_t>> jets;

    std::size_t size() const { return jets.size(); }
    Jet unpack(std::size_t i) const;
    static std::vector<std::int64_t> pack(const Jet& jet);
};

struct EnumOptions {
    long long budget = 100000000;  // candidate checks
    int threads = 1;
    int lift_depth_cap = 24;
};

JetSet enumerate_jets(const AffineVariety& v, int n, std::int64_t q,
                      const EnumOptions& opt = {});

// All level-n jets truncating to gamma (level m <= n).
JetSet fiber_jets(const AffineVariety& v, int n, const Jet& gamma, std::int64_t q,
                  const EnumOptions& opt = {});

enum class Lift { Yes, No, Undetermined };

Lift is_liftable(const AffineVariety& v, const Jet& jet, std::int64_t q,
                 const EnumOptions& opt = {});

struct LiftableResult {
    JetSet liftable;
    JetSet undetermined;
};

LiftableResult liftable_set(const AffineVariety& v, int n, std::int64_t q,
                            const EnumOptions& opt = {});

// Order of an ideal evaluated on a finite jet; capped at level+1.
Order ord_ideal_jet(const SubschemeIdeal& ideal, const Jet& jet, Field f);

// One jet per line, row-major coefficients as decimal integers.
std::string dump_jets(const JetSet& s);

}  // namespace arcspace
