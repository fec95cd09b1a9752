#pragma once

#include <vector>
#include <string>

#include "arcspace/series.hpp"

namespace arcspace {

// Dense matrix of truncated series; all entries are kept at one shared
// precision (the minimum over the entries supplied).
class SeriesMatrix {
public:
    SeriesMatrix() : SeriesMatrix(rationals(), 0, 0, 0) {}
    SeriesMatrix(Field f, int rows, int cols, int precision);
    SeriesMatrix(int rows, int cols, std::vector<TruncSeries> entries);

    static SeriesMatrix identity(Field f, int n, int precision);

    Field field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int precision() const { return precision_; }

    const TruncSeries& at(int i, int j) const { return entries_[i * cols_ + j]; }
    void set(int i, int j, const TruncSeries& s);

    SeriesMatrix operator*(const SeriesMatrix& o) const;
    SeriesMatrix operator+(const SeriesMatrix& o) const;
    SeriesMatrix operator-(const SeriesMatrix& o) const;

    // Constant terms as a plain field matrix (row-major).
    std::vector<FieldValue> constant_terms() const;
    // Determinant of the constant-term matrix; nonzero iff the matrix is
    // invertible over the series ring.
    FieldValue constant_det() const;
    bool is_unimodular() const { return !constant_det().is_zero(); }

    // Inverse of a matrix with unit determinant, by Gaussian elimination with
    // unit pivots.
    SeriesMatrix unit_inverse() const;

    bool operator==(const SeriesMatrix& o) const;
    bool operator!=(const SeriesMatrix& o) const { return !(*this == o); }

    SeriesMatrix transpose() const;
    SeriesMatrix truncate(int precision) const;

    std::string to_string() const;

private:
    Field field_;
    int rows_, cols_, precision_;
    std::vector<TruncSeries> entries_;
};

// U * M * V = diag(t^{e_1}, ..., t^{e_r}) to the result precision, with the
// orders nondecreasing; an order is marked non-finite when the corresponding
// diagonal entry vanishes to the working precision.
struct SnfResult {
    std::vector<Order> orders;  // length min(rows, cols)
    SeriesMatrix U;             // rows x rows, unimodular
    SeriesMatrix V;             // cols x cols, unimodular
    int input_precision = 0;
    int result_precision = 0;   // precision to which U*M*V is certified diagonal

    // Sum of the diagonal orders; fails with InsufficientPrecision when some
    // order is undetermined.
    int total_order() const;
    bool all_finite() const;
};

SnfResult snf(const SeriesMatrix& M);

}  // namespace arcspace
