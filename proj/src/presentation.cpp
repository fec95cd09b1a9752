#include "arcspace/presentation.hpp"

#include <algorithm>

namespace arcspace {

std::vector<TruncSeries> ArcGen::emit(int precision) const {
    std::vector<TruncSeries> out;
    out.reserve(coords.size());
    for (const auto& poly : coords) {
        std::vector<FieldValue> c(static_cast<std::size_t>(precision), FieldValue::zero(field));
        for (std::size_t i = 0; i < poly.size() && i < static_cast<std::size_t>(precision); ++i)
            c[i] = poly[i];
        out.emplace_back(field, std::move(c));
    }
    return out;
}

std::vector<FieldValue> ArcGen::base_point() const {
    std::vector<FieldValue> out;
    for (const auto& poly : coords)
        out.push_back(poly.empty() ? FieldValue::zero(field) : poly[0]);
    return out;
}

ArcGen ArcGen::from_monomials(Field f, const std::vector<int>& t_powers) {
    ArcGen a{f, {}};
    for (int e : t_powers) {
        std::vector<FieldValue> c(static_cast<std::size_t>(e) + 1, FieldValue::zero(f));
        c[e] = FieldValue::one(f);
        a.coords.push_back(std::move(c));
    }
    return a;
}

std::vector<TruncSeries> Jet::as_series(Field f) const {
    std::vector<TruncSeries> out;
    for (const auto& c : coeffs) out.emplace_back(f, c);
    return out;
}

ArcValidation validate_arc(const AffineVariety& v, const ArcGen& arc, int precision) {
    if (arc.ncoords() != v.ambient_dim)
        throw DimensionMismatch("arc coordinate count differs from ambient dimension");
    std::vector<TruncSeries> pt = arc.emit(precision);
    for (int i = 0; i < v.ngens(); ++i) {
        TruncSeries r = v.gens[i].eval_series(pt);
        Order o = r.order();
        if (o.finite) return ArcValidation{false, i + 1, o.k};
    }
    return ArcValidation{true, 0, 0};
}

MultiPoly poly_det(const std::vector<MultiPoly>& m, int n) {
    if (n == 0) {
        Field f = m.empty() ? rationals() : m[0].field();
        int nv = m.empty() ? 0 : m[0].nvars();
        return MultiPoly::constant(f, nv, 1);
    }
    if (n == 1) return m[0];
    Field f = m[0].field();
    int nv = m[0].nvars();
    MultiPoly det = MultiPoly::zero(f, nv);
    // expand along the first row
    for (int j = 0; j < n; ++j) {
        if (m[j].is_zero()) continue;
        std::vector<MultiPoly> sub;
        sub.reserve(static_cast<std::size_t>(n - 1) * (n - 1));
        for (int i = 1; i < n; ++i)
            for (int k = 0; k < n; ++k)
                if (k != j) sub.push_back(m[i * n + k]);
        MultiPoly term = m[j] * poly_det(sub, n - 1);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

namespace {

// all k-subsets of {0..n-1} in lexicographic order
void subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    if (k > n) return;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
}

SubschemeIdeal minors_ideal(const std::string& owner, const std::vector<MultiPoly>& mat,
                            int rows, int cols, int size) {
    SubschemeIdeal ideal{owner, {}};
    std::vector<std::vector<int>> rsel, csel;
    subsets(rows, size, rsel);
    subsets(cols, size, csel);
    for (const auto& rs : rsel)
        for (const auto& cs : csel) {
            std::vector<MultiPoly> sub;
            sub.reserve(static_cast<std::size_t>(size) * size);
            for (int i : rs)
                for (int j : cs) sub.push_back(mat[i * cols + j]);
            MultiPoly d = poly_det(sub, size);
            if (!d.is_zero()) ideal.gens.push_back(d);
        }
    if (ideal.gens.empty()) {
        // all minors vanish identically, or there were none to take
        if (rsel.empty() || csel.empty())
            throw DegeneratePresentation("no minors of the required size");
    }
    return ideal;
}

}  // namespace

SubschemeIdeal jacobian_ideal(const AffineVariety& v) {
    int N = v.ambient_dim, d = v.dim, r = v.ngens();
    int size = N - d;
    if (size == 0) {
        // no equations needed locally: unit ideal
        SubschemeIdeal ideal{v.name, {MultiPoly::constant(v.field, N, 1)}};
        return ideal;
    }
    if (r < size)
        throw DegeneratePresentation("fewer generators than codimension");
    std::vector<MultiPoly> jac;
    jac.reserve(static_cast<std::size_t>(r) * N);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < N; ++j) jac.push_back(v.gens[i].derivative(j));
    return minors_ideal(v.name, jac, r, N, size);
}

SubschemeIdeal jacobian_ideal_of_morphism(const MorphismPres& f) {
    if (f.source.dim != f.target.dim)
        throw DimensionMismatch("source and target dimensions differ");
    int N = f.source.ambient_dim;
    int r = f.source.ngens();
    int M = f.target.ambient_dim;
    if (static_cast<int>(f.components.size()) != M)
        throw DimensionMismatch("component count differs from target ambient dimension");
    if (r + M < N)
        throw DegeneratePresentation("stacked Jacobian has fewer rows than columns");
    std::vector<MultiPoly> mat;
    mat.reserve(static_cast<std::size_t>(r + M) * N);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < N; ++j) mat.push_back(f.source.gens[i].derivative(j));
    for (int k = 0; k < M; ++k)
        for (int j = 0; j < N; ++j) mat.push_back(f.components[k].derivative(j));
    return minors_ideal(f.source.name, mat, r + M, N, N);
}

Order ord_ideal_series(const std::vector<TruncSeries>& point, const SubschemeIdeal& ideal) {
    std::optional<int> best;
    int bound = point.empty() ? 0 : point[0].precision();
    for (const auto& g : ideal.gens) {
        TruncSeries r = g.eval_series(point);
        Order o = r.order();
        if (o.finite) {
            if (!best || o.k < *best) best = o.k;
            if (*best == 0) break;
        } else {
            bound = std::min(bound, o.k);
        }
    }
    if (best) return Order::at(*best);
    return Order::at_least(bound);
}

Order ord_ideal(const ArcGen& arc, const SubschemeIdeal& ideal, int precision) {
    return ord_ideal_series(arc.emit(precision), ideal);
}

ArcGen push_arc(const MorphismPres& f, const ArcGen& arc) {
    ArcGen out{arc.field, {}};
    for (const auto& comp : f.components)
        out.coords.push_back(comp.eval_polys(arc.coords));
    return out;
}

}  // namespace arcspace
