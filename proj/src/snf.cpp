#include "arcspace/snf.hpp"

#include <algorithm>
#include <sstream>

namespace arcspace {

SeriesMatrix::SeriesMatrix(Field f, int rows, int cols, int precision)
    : field_(f), rows_(rows), cols_(cols), precision_(precision) {
    entries_.assign(static_cast<std::size_t>(rows) * cols,
                    TruncSeries::zero(f, precision));
}

SeriesMatrix::SeriesMatrix(int rows, int cols, std::vector<TruncSeries> entries)
    : field_(entries.empty() ? rationals() : entries[0].field()),
      rows_(rows), cols_(cols), precision_(0), entries_(std::move(entries)) {
    if (static_cast<int>(entries_.size()) != rows * cols)
        throw DimensionMismatch("entry count does not match matrix shape");
    if (!entries_.empty()) {
        precision_ = entries_[0].precision();
        for (const auto& e : entries_) precision_ = std::min(precision_, e.precision());
        for (auto& e : entries_) e = e.truncate(precision_);
    }
}

SeriesMatrix SeriesMatrix::identity(Field f, int n, int precision) {
    SeriesMatrix m(f, n, n, precision);
    for (int i = 0; i < n; ++i)
        m.set(i, i, TruncSeries::constant(f, 1, precision));
    return m;
}

void SeriesMatrix::set(int i, int j, const TruncSeries& s) {
    entries_[i * cols_ + j] = s.truncate(precision_);
}

SeriesMatrix SeriesMatrix::operator*(const SeriesMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shapes");
    int p = std::min(precision_, o.precision_);
    SeriesMatrix r(field_, rows_, o.cols_, p);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            TruncSeries acc = TruncSeries::zero(field_, p);
            for (int k = 0; k < cols_; ++k)
                acc = acc + at(i, k) * o.at(k, j);
            r.set(i, j, acc);
        }
    return r;
}

SeriesMatrix SeriesMatrix::operator+(const SeriesMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shapes");
    int p = std::min(precision_, o.precision_);
    SeriesMatrix r(field_, rows_, cols_, p);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j) + o.at(i, j));
    return r;
}

SeriesMatrix SeriesMatrix::operator-(const SeriesMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shapes");
    int p = std::min(precision_, o.precision_);
    SeriesMatrix r(field_, rows_, cols_, p);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j) - o.at(i, j));
    return r;
}

std::vector<FieldValue> SeriesMatrix::constant_terms() const {
    std::vector<FieldValue> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_)
        out.push_back(precision_ > 0 ? e.coeff(0) : FieldValue::zero(field_));
    return out;
}

FieldValue SeriesMatrix::constant_det() const {
    if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square matrix");
    // Fraction-free is unnecessary here; exact field arithmetic suffices.
    std::vector<FieldValue> m = constant_terms();
    int n = rows_;
    FieldValue det = FieldValue::one(field_);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (!m[i * n + k].is_zero()) { piv = i; break; }
        if (piv < 0) return FieldValue::zero(field_);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
            det = -det;
        }
        det = det * m[k * n + k];
        FieldValue inv = m[k * n + k].inverse();
        for (int i = k + 1; i < n; ++i) {
            FieldValue f = m[i * n + k] * inv;
            if (f.is_zero()) continue;
            for (int j = k; j < n; ++j)
                m[i * n + j] = m[i * n + j] - f * m[k * n + j];
        }
    }
    return det;
}

SeriesMatrix SeriesMatrix::unit_inverse() const {
    if (rows_ != cols_) throw DimensionMismatch("inverse of a non-square matrix");
    if (!is_unimodular())
        throw NonUnitDivision("inverse of a matrix whose constant determinant vanishes");
    int n = rows_;
    SeriesMatrix a = *this;
    SeriesMatrix inv = identity(field_, n, precision_);
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a.at(i, k).is_unit()) { piv = i; break; }
        if (piv < 0)
            throw NonUnitDivision("no unit pivot during matrix inversion");
        if (piv != k)
            for (int j = 0; j < n; ++j) {
                std::swap(a.entries_[k * n + j], a.entries_[piv * n + j]);
                std::swap(inv.entries_[k * n + j], inv.entries_[piv * n + j]);
            }
        TruncSeries pinv = a.at(k, k).unit_inverse();
        for (int j = 0; j < n; ++j) {
            a.entries_[k * n + j] = a.at(k, j) * pinv;
            inv.entries_[k * n + j] = inv.at(k, j) * pinv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k) continue;
            TruncSeries f = a.at(i, k);
            if (f.known_zero()) continue;
            for (int j = 0; j < n; ++j) {
                a.entries_[i * n + j] = a.at(i, j) - f * a.at(k, j);
                inv.entries_[i * n + j] = inv.at(i, j) - f * inv.at(k, j);
            }
        }
    }
    return inv;
}

bool SeriesMatrix::operator==(const SeriesMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

SeriesMatrix SeriesMatrix::transpose() const {
    SeriesMatrix r(field_, cols_, rows_, precision_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

SeriesMatrix SeriesMatrix::truncate(int precision) const {
    if (precision >= precision_) return *this;
    SeriesMatrix r(field_, rows_, cols_, precision);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
    return r;
}

std::string SeriesMatrix::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[ ";
        for (int j = 0; j < cols_; ++j) {
            if (j) os << " | ";
            os << at(i, j).to_string();
        }
        os << " ]\n";
    }
    return os.str();
}

int SnfResult::total_order() const {
    int s = 0;
    for (const auto& o : orders) {
        if (!o.finite)
            throw InsufficientPrecision("diagonal order undetermined at working precision");
        s += o.k;
    }
    return s;
}

bool SnfResult::all_finite() const {
    for (const auto& o : orders)
        if (!o.finite) return false;
    return true;
}

namespace {

// Mutable working matrix with per-entry precision (the shared result precision
// is recomputed at the end).
struct Work {
    int rows, cols;
    std::vector<TruncSeries> e;
    TruncSeries& at(int i, int j) { return e[i * cols + j]; }
};

void swap_rows(Work& w, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < w.cols; ++j) std::swap(w.at(a, j), w.at(b, j));
}

void swap_cols(Work& w, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < w.rows; ++i) std::swap(w.at(i, a), w.at(i, b));
}

Work from_matrix(const SeriesMatrix& m) {
    Work w{m.rows(), m.cols(), {}};
    w.e.reserve(static_cast<std::size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) w.e.push_back(m.at(i, j));
    return w;
}

SeriesMatrix to_matrix(const Work& w) {
    return SeriesMatrix(w.rows, w.cols, w.e);
}

}  // namespace

SnfResult snf(const SeriesMatrix& M) {
    Field f = M.field();
    int P = M.precision();
    Work w = from_matrix(M);
    Work u = from_matrix(SeriesMatrix::identity(f, M.rows(), P));
    Work v = from_matrix(SeriesMatrix::identity(f, M.cols(), P));
    int r = std::min(M.rows(), M.cols());
    std::vector<Order> orders;
    orders.reserve(r);

    for (int k = 0; k < r; ++k) {
        // Pivot: minimal known order over the remaining block, ties by lowest
        // (row, col).
        int pi = -1, pj = -1, po = 0;
        for (int i = k; i < w.rows; ++i)
            for (int j = k; j < w.cols; ++j) {
                Order o = w.at(i, j).order();
                if (!o.finite) continue;
                if (pi < 0 || o.k < po) { pi = i; pj = j; po = o.k; }
            }
        if (pi < 0) {
            // Everything left vanishes to its precision.
            int rem = w.at(k, k).precision();
            for (int i = k; i < w.rows; ++i)
                for (int j = k; j < w.cols; ++j)
                    rem = std::min(rem, w.at(i, j).precision());
            for (int t = k; t < r; ++t) orders.push_back(Order::at_least(rem));
            break;
        }
        swap_rows(w, k, pi); swap_rows(u, k, pi);
        swap_cols(w, k, pj); swap_cols(v, k, pj);
        orders.push_back(Order::at(po));

        // Normalize the pivot to exactly t^po (skip when already so, to keep
        // identity transforms on already-diagonal input).
        TruncSeries unit = w.at(k, k).shift_down(po);
        if (!unit.is_known_one()) {
            TruncSeries uinv = unit.unit_inverse();
            for (int j = 0; j < w.cols; ++j) w.at(k, j) = w.at(k, j) * uinv;
            for (int j = 0; j < u.cols; ++j) u.at(k, j) = u.at(k, j) * uinv;
        }
        // Clear the pivot column, then the pivot row; quotients lie in the
        // ring because the pivot order is minimal.
        for (int i = k + 1; i < w.rows; ++i) {
            if (w.at(i, k).known_zero()) continue;
            TruncSeries q = w.at(i, k).shift_down(po);
            for (int j = 0; j < w.cols; ++j)
                w.at(i, j) = w.at(i, j) - q * w.at(k, j);
            for (int j = 0; j < u.cols; ++j)
                u.at(i, j) = u.at(i, j) - q * u.at(k, j);
        }
        for (int j = k + 1; j < w.cols; ++j) {
            if (w.at(k, j).known_zero()) continue;
            TruncSeries q = w.at(k, j).shift_down(po);
            for (int i = 0; i < w.rows; ++i)
                w.at(i, j) = w.at(i, j) - q * w.at(i, k);
            for (int i = 0; i < v.rows; ++i)
                v.at(i, j) = v.at(i, j) - q * v.at(i, k);
        }
    }

    SeriesMatrix D = to_matrix(w);
    SnfResult res{std::move(orders), to_matrix(u), to_matrix(v), P, D.precision()};
    return res;
}

}  // namespace arcspace
