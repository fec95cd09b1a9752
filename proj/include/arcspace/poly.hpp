#pragma once

#include <vector>
#include <string>

#include "arcspace/field.hpp"
#include "arcspace/series.hpp"

namespace arcspace {

// Sparse multivariate polynomial over an exact field.
// Terms carry no zero coefficients and are kept sorted (lex on exponent vectors),
// so equality is structural.
class MultiPoly {
public:
    struct Term {
        std::vector<int> exp;  // length = nvars
        FieldValue coeff;
    };

    MultiPoly(Field f, int nvars) : field_(f), nvars_(nvars) {}

    static MultiPoly zero(Field f, int nvars) { return MultiPoly(f, nvars); }
    static MultiPoly constant(Field f, int nvars, const FieldValue& c);
    static MultiPoly constant(Field f, int nvars, std::int64_t c);
    static MultiPoly variable(Field f, int nvars, int i);
    // Single monomial c * x^exp.
    static MultiPoly monomial(Field f, std::vector<int> exp, const FieldValue& c);

    Field field() const { return field_; }
    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scale(const FieldValue& c) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly derivative(int var) const;

    // Substitute truncated series for the variables.  All entries must share a
    // precision; the result carries that precision.
    TruncSeries eval_series(const std::vector<TruncSeries>& point) const;
    FieldValue eval_point(const std::vector<FieldValue>& point) const;
    // Substitute exact univariate polynomials in t (given as coefficient vectors);
    // the result is an exact coefficient vector.
    std::vector<FieldValue> eval_polys(const std::vector<std::vector<FieldValue>>& point) const;

    // Rename into a wider variable ring: variable i becomes variable map[i].
    MultiPoly embed(int new_nvars, const std::vector<int>& map) const;

    std::string to_string(const std::vector<std::string>& names) const;

    // Adds c * x^exp and restores canonical form.
    void add_term(const std::vector<int>& exp, const FieldValue& c);

private:
    void normalize();

    Field field_;
    int nvars_;
    std::vector<Term> terms_;
};

}  // namespace arcspace
