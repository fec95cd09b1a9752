#include "arcspace/mather.hpp"

#include <algorithm>

namespace arcspace {

namespace {

constexpr int kPrecisionCap = 512;

// J^T along the arc: N rows, r columns, entry (i, g) = dg/dx_i evaluated on
// the arc expansion.
SeriesMatrix pulled_back_relations(const AffineVariety& v, const ArcGen& arc,
                                   int precision) {
    std::vector<TruncSeries> pt = arc.emit(precision);
    int N = v.ambient_dim, r = v.ngens();
    SeriesMatrix m(v.field, N, std::max(r, 0), precision);
    for (int g = 0; g < r; ++g)
        for (int i = 0; i < N; ++i)
            m.set(i, g, v.gens[g].derivative(i).eval_series(pt));
    return m;
}

DiffProfile profile_at(const AffineVariety& v, const ArcGen& arc, int precision) {
    int N = v.ambient_dim, r = v.ngens();
    if (r > N) throw DegeneratePresentation("more generators than ambient variables");
    DiffProfile out;
    out.precision = precision;
    if (r == 0) {
        out.free_rank = N;
        out.snf = snf(SeriesMatrix(v.field, N, 0, precision));
        return out;
    }
    out.snf = snf(pulled_back_relations(v, arc, precision));
    out.free_rank = N - r;
    for (const auto& o : out.snf.orders)
        if (o.finite && o.k > 0) out.torsion.push_back(o.k);
    std::sort(out.torsion.begin(), out.torsion.end());
    return out;
}

bool profile_certified(const DiffProfile& p) { return p.snf.all_finite(); }

}  // namespace

DiffProfile invariant_factors(const AffineVariety& v, const ArcGen& arc, int precision) {
    int P = std::max(precision, 1);
    while (true) {
        DiffProfile p = profile_at(v, arc, P);
        if (profile_certified(p)) {
            if (p.free_rank != v.dim)
                throw DegeneratePresentation(
                    "free rank of the differentials differs from the claimed dimension");
            return p;
        }
        if (P >= kPrecisionCap)
            throw InsufficientPrecision(
                "invariant factors not certified within the precision cap");
        P = std::min(2 * P, kPrecisionCap);
    }
}

SeriesMatrix transition_matrix(const MorphismPres& f, const ArcGen& arc, int precision) {
    if (f.source.dim != f.target.dim)
        throw DimensionMismatch("source and target dimensions differ");
    int d = f.source.dim;
    int N = f.source.ambient_dim, M = f.target.ambient_dim;
    int rX = f.source.ngens(), rY = f.target.ngens();

    DiffProfile px = invariant_factors(f.source, arc, precision);
    ArcGen beta = push_arc(f, arc);
    DiffProfile py = invariant_factors(f.target, beta, precision);

    std::vector<TruncSeries> pt = arc.emit(precision);
    SeriesMatrix jfT(f.source.field, N, M, precision);
    for (int k = 0; k < M; ++k)
        for (int i = 0; i < N; ++i)
            jfT.set(i, k, f.components[k].derivative(i).eval_series(pt));

    SeriesMatrix B = px.snf.U * jfT * py.snf.U.unit_inverse();
    // free summands sit at positions rX..N-1 (resp. rY..M-1) in the
    // transformed bases
    SeriesMatrix A(f.source.field, d, d, B.precision());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) A.set(i, j, B.at(rX + i, rY + j));
    return A;
}

DiscrepancyResult mather_discrepancy(const MorphismPres& f, const ArcGen& arc) {
    DiffProfile px = invariant_factors(f.source, arc, 8);
    ArcGen beta = push_arc(f, arc);
    DiffProfile py = invariant_factors(f.target, beta, 8);
    int a = px.total(), b = py.total();

    SubschemeIdeal jf = jacobian_ideal_of_morphism(f);
    int P = a + b + 8;
    while (true) {
        SeriesMatrix A = transition_matrix(f, arc, P);
        SnfResult s = snf(A);
        Order co = ord_ideal(arc, jf, P);
        if (s.all_finite() && co.finite) {
            DiscrepancyResult res{0, {}, A, a, b, co.k, P};
            for (const auto& o : s.orders) res.diag.push_back(o.k);
            res.e = s.total_order();
            return res;
        }
        if (P >= kPrecisionCap)
            throw NotGenericallyTransverse(
                "order of det A undetermined at the precision cap");
        P = std::min(2 * P, kPrecisionCap);
    }
}

ContactProfile contact_profile(const MorphismPres& f, const SubschemeIdeal& Z,
                               const SubschemeIdeal& V, const ArcGen& arc) {
    DiscrepancyResult d = mather_discrepancy(f, arc);
    ArcGen beta = push_arc(f, arc);
    int P = d.precision;
    while (true) {
        Order p = ord_ideal(beta, V, P);
        Order q = ord_ideal(beta, Z, P);
        if (p.finite && q.finite)
            return ContactProfile{d.a, d.b, d.e, p.k, q.k};
        if (P >= kPrecisionCap)
            throw InsufficientPrecision("contact orders undetermined at the precision cap");
        P = std::min(2 * P, kPrecisionCap);
    }
}

}  // namespace arcspace
