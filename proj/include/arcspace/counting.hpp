#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcspace/catalog.hpp"
#include "arcspace/jets.hpp"

namespace arcspace {

struct CountOptions {
    long long budget = 2000000000;  // jet-tree nodes visited
    int threads = 1;
    int fiber_samples = 50;    // image jets per piece checked as full fibers
    int lift_samples = 100;    // members cross-checked against the generic lift test
    int witness_samples = 3;   // witness arcs per piece for the discrepancy cross-check
    unsigned seed = 20240817;
};

// |psi_n(stratum)(F_q)| * q^{-n*d}, summed over the chart parts; recomputed at
// n+1 and required to agree.  level = -1 picks the stabilization level m+1.
Rational cylinder_measure_counting(const CatalogExample& ex, const StratumSpec& s,
                                   const std::vector<int>& params, std::int64_t q,
                                   int level = -1, const CountOptions& opt = {});

struct ProfileRow {
    int chart = 0;
    ContactProfile profile;
    int level = 0;
    long long members = 0;     // liftable jets in the piece at `level`
    long long image = 0;       // distinct pushforwards
    Rational measure;          // members * q^{-level*d}
    Rational image_measure;    // image * q^{-level*d}
    bool fibers_ok = false;    // every image fiber inside the piece has q^e members
    bool union_ok = false;     // sampled full liftable fibers lie inside the piece
    bool ratio_ok = false;     // members == q^e * image
    bool stability_ok = false; // recount at level+1 equals members * q^d
    bool lift_ok = false;      // fast lift test agrees with the generic one on samples
    bool witness_ok = false;   // witness arcs realize the labelled profile
    int undetermined = 0;      // generic lift test inconclusive on this many samples
    bool pass() const {
        return fibers_ok && union_ok && ratio_ok && stability_ok && lift_ok && witness_ok;
    }
};

struct CountingReport {
    std::string example;
    std::int64_t q = 0;
    int cap = 0;
    std::vector<ProfileRow> rows;
    bool disjoint_ok = false;  // image strata pairwise disjoint
    bool sums_ok = false;      // truncated two-sided sums agree piece by piece
    Rational lhs_sum, rhs_sum;
    bool pass = false;
    std::string text() const;
};

CountingReport cov_check_counting(const CatalogExample& ex, std::int64_t q, int cap,
                                  const CountOptions& opt = {});

}  // namespace arcspace
