#include "arcspace/integrate.hpp"

#include <sstream>

namespace arcspace {

MotivicRational cylinder_measure_exact(const StratumSpec& s, const std::vector<int>& params,
                                       int d) {
    s.check_params(params);
    MotivicClass cls = s.class_at(params) * MotivicClass::L_pow(-d * s.m_at(params));
    MotivicRational mu = MotivicRational::from_class(cls);
    if (mu.dimension() && *mu.dimension() > d)
        throw DimensionMismatch("stratum '" + s.name + "' has measure of dimension above " +
                                std::to_string(d));
    return mu;
}

MotivicRational motivic_integral_exact(const std::vector<StratumSpec>& strata, int d) {
    MotivicRational total;
    for (const StratumSpec& s : strata) {
        int np = s.nparams();
        // constant part of the exponent of measure * L^{-weight}
        MotivicRational term = MotivicRational::from_class(
            s.cls_base * MotivicClass::L_pow(-d * s.m0 - s.w0));
        for (int i = 0; i < np; ++i) {
            int ci = (i < static_cast<int>(s.cls_coef.size()) ? s.cls_coef[i] : 0) -
                     d * (i < static_cast<int>(s.m_coef.size()) ? s.m_coef[i] : 0) -
                     (i < static_cast<int>(s.w_coef.size()) ? s.w_coef[i] : 0);
            if (ci >= 0)
                throw NonSummableWeight("stratum '" + s.name + "' does not decay in parameter " +
                                        std::to_string(i));
            term = term * geometric_sum(MotivicClass::one(), -ci, s.pmin[i]);
        }
        total = total + term;
    }
    return total;
}

std::string ExactCovReport::text() const {
    std::ostringstream os;
    os << "example: " << example << "\n";
    os << "lhs: " << lhs.to_string() << "\n";
    os << "rhs: " << rhs.to_string() << "\n";
    os << "equal: " << (pass ? "yes" : "no") << "\n";
    return os.str();
}

ExactCovReport cov_check_exact(const CatalogExample& ex) {
    if (!ex.has_exact_sides())
        throw std::invalid_argument("example '" + ex.id +
                                    "' has no exact strata on both sides");
    ExactCovReport rep;
    rep.example = ex.id;
    rep.lhs = motivic_integral_exact(ex.lhs, ex.d);
    rep.rhs = motivic_integral_exact(ex.rhs, ex.d);
    rep.pass = rep.lhs == rep.rhs;
    if (ex.expected && !(rep.lhs == *ex.expected)) rep.pass = false;
    return rep;
}

}  // namespace arcspace
