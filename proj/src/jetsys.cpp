#include "arcspace/jets.hpp"

namespace arcspace {

namespace {
// truncated t-series whose coefficients are polynomials in the jet variables
using PolySeries = std::vector<MultiPoly>;

PolySeries ps_mul(const PolySeries& a, const PolySeries& b, Field f, int nv) {
    int len = static_cast<int>(a.size());
    PolySeries c(len, MultiPoly::zero(f, nv));
    for (int i = 0; i < len; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j < len; ++j) {
            if (b[j].is_zero()) continue;
            c[i + j] = c[i + j] + a[i] * b[j];
        }
    }
    return c;
}
}  // namespace

JetSystem jet_equations(const AffineVariety& v, int n) {
    if (n < 0) throw DimensionMismatch("negative jet level");
    JetSystem sys;
    sys.level = n;
    sys.ambient_dim = v.ambient_dim;
    sys.field = v.field;
    int nv = v.ambient_dim * (n + 1);
    int len = n + 1;
    // coordinate i as the series sum_j x_{i,j} t^j
    std::vector<PolySeries> coords;
    for (int i = 0; i < v.ambient_dim; ++i) {
        PolySeries s(len, MultiPoly::zero(v.field, nv));
        for (int j = 0; j < len; ++j) s[j] = MultiPoly::variable(v.field, nv, i * len + j);
        coords.push_back(std::move(s));
    }
    for (const auto& g : v.gens) {
        PolySeries acc(len, MultiPoly::zero(v.field, nv));
        for (const auto& t : g.terms()) {
            PolySeries m(len, MultiPoly::zero(v.field, nv));
            m[0] = MultiPoly::constant(v.field, nv, t.coeff);
            for (int i = 0; i < v.ambient_dim; ++i)
                for (int e = 0; e < t.exp[i]; ++e) m = ps_mul(m, coords[i], v.field, nv);
            for (int k = 0; k < len; ++k) acc[k] = acc[k] + m[k];
        }
        sys.eqs.push_back(std::move(acc));
    }
    return sys;
}

bool JetSystem::satisfied_by(const Jet& jet) const {
    if (jet.level != level || jet.ncoords() != ambient_dim)
        throw DimensionMismatch("jet shape does not match system");
    std::vector<FieldValue> point;
    for (const auto& c : jet.coeffs)
        for (const auto& x : c) point.push_back(x);
    for (const auto& per_gen : eqs)
        for (const auto& eq : per_gen)
            if (!eq.eval_point(point).is_zero()) return false;
    return true;
}

Jet truncate_jet(const Jet& jet, int m) {
    if (m > jet.level) throw DimensionMismatch("truncation above jet level");
    Jet out;
    out.level = m;
    for (const auto& c : jet.coeffs)
        out.coeffs.emplace_back(c.begin(), c.begin() + m + 1);
    return out;
}

Jet truncate_arc(const ArcGen& arc, int m) {
    Jet out;
    out.level = m;
    for (const auto& poly : arc.coords) {
        std::vector<FieldValue> c(static_cast<std::size_t>(m) + 1,
                                  FieldValue::zero(arc.field));
        for (std::size_t i = 0; i < poly.size() && i <= static_cast<std::size_t>(m); ++i)
            c[i] = poly[i];
        out.coeffs.push_back(std::move(c));
    }
    return out;
}

Jet push_jet(const MorphismPres& f, const Jet& jet) {
    Field fld = f.source.field;
    std::vector<TruncSeries> s = jet.as_series(fld);
    Jet out;
    out.level = jet.level;
    for (const auto& comp : f.components) {
        TruncSeries r = comp.eval_series(s);
        std::vector<FieldValue> c;
        for (int i = 0; i <= jet.level; ++i) c.push_back(r.coeff(i));
        out.coeffs.push_back(std::move(c));
    }
    return out;
}

}  // namespace arcspace
