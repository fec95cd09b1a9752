#pragma once

#include <cstdint>
#include <vector>

#include "arcspace/poly.hpp"

namespace arcspace {

// Polynomial compiled for fast evaluation mod a prime p, with int64 coefficients.
struct FpPoly {
    struct Term {
        std::vector<int> exp;
        std::int64_t c;
    };
    int nvars = 0;
    std::int64_t p = 0;
    std::vector<Term> terms;

    static FpPoly compile(const MultiPoly& poly, std::int64_t p);

    std::int64_t eval(const std::int64_t* x) const;

    // Coefficients of the t-expansion of the polynomial evaluated on
    // coordinate series stored in a flat buffer (coordinate major with the
    // given stride), truncated at t^len.
    std::vector<std::int64_t> eval_series(const std::int64_t* flat, int stride,
                                          int len) const;
};

// Row echelon solve of A x = b over F_p; A is rows x cols row-major.
// Returns false when inconsistent; otherwise fills a particular solution and a
// kernel basis (each of length cols).
bool fp_solve(std::vector<std::int64_t> A, std::vector<std::int64_t> b, int rows,
              int cols, std::int64_t p, std::vector<std::int64_t>& particular,
              std::vector<std::vector<std::int64_t>>& kernel);

}  // namespace arcspace
