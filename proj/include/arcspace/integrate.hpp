#pragma once

#include <string>
#include <vector>

#include "arcspace/catalog.hpp"
#include "arcspace/motivic.hpp"

namespace arcspace {

// class(params) * L^{-m(params) * d}
MotivicRational cylinder_measure_exact(const StratumSpec& s, const std::vector<int>& params,
                                       int d);

// sum over strata and parameter values of measure * L^{-weight}; each
// unbounded parameter direction must shrink the exponent
MotivicRational motivic_integral_exact(const std::vector<StratumSpec>& strata, int d);

struct ExactCovReport {
    std::string example;
    MotivicRational lhs, rhs;
    bool pass = false;
    std::string text() const;
};

ExactCovReport cov_check_exact(const CatalogExample& ex);

}  // namespace arcspace
