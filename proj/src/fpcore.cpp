#include "arcspace/fpcore.hpp"

#include "arcspace/field.hpp"

namespace arcspace {

FpPoly FpPoly::compile(const MultiPoly& poly, std::int64_t p) {
    FpPoly out;
    out.nvars = poly.nvars();
    out.p = p;
    for (const auto& t : poly.terms()) {
        std::int64_t c;
        if (poly.field().p == p) {
            c = t.coeff.rep();
        } else if (poly.field().p == 0) {
            c = FieldValue(prime_field(p), t.coeff.rational()).rep();
        } else {
            throw FieldMismatch("compiling a polynomial across prime fields");
        }
        if (c % p != 0) out.terms.push_back({t.exp, c % p});
    }
    return out;
}

std::int64_t FpPoly::eval(const std::int64_t* x) const {
    std::int64_t acc = 0;
    for (const auto& t : terms) {
        std::int64_t m = t.c;
        for (int i = 0; i < nvars; ++i)
            for (int e = 0; e < t.exp[i]; ++e) m = m * x[i] % p;
        acc = (acc + m) % p;
    }
    return acc;
}

namespace {
// c <- c + a*b truncated at len, all mod p
void mul_add(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
             std::vector<std::int64_t>& c, int len, std::int64_t p) {
    for (int i = 0; i < len; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j < len; ++j) {
            if (b[j] == 0) continue;
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
        }
    }
}

std::vector<std::int64_t> mul(const std::vector<std::int64_t>& a,
                              const std::vector<std::int64_t>& b, int len,
                              std::int64_t p) {
    std::vector<std::int64_t> c(len, 0);
    mul_add(a, b, c, len, p);
    return c;
}
}  // namespace

std::vector<std::int64_t> FpPoly::eval_series(const std::int64_t* flat, int stride,
                                              int len) const {
    std::vector<std::int64_t> acc(len, 0);
    std::vector<std::int64_t> m(len, 0);
    for (const auto& t : terms) {
        m.assign(len, 0);
        m[0] = t.c;
        for (int i = 0; i < nvars; ++i) {
            if (t.exp[i] == 0) continue;
            std::vector<std::int64_t> xi(flat + i * stride, flat + i * stride + len);
            for (int e = 0; e < t.exp[i]; ++e) m = mul(m, xi, len, p);
        }
        for (int k = 0; k < len; ++k) acc[k] = (acc[k] + m[k]) % p;
    }
    return acc;
}

bool fp_solve(std::vector<std::int64_t> A, std::vector<std::int64_t> b, int rows,
              int cols, std::int64_t p, std::vector<std::int64_t>& particular,
              std::vector<std::vector<std::int64_t>>& kernel) {
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (A[i * cols + col] % p != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != rank) {
            for (int j = 0; j < cols; ++j) std::swap(A[rank * cols + j], A[piv * cols + j]);
            std::swap(b[rank], b[piv]);
        }
        std::int64_t inv = mod_inverse(A[rank * cols + col], p);
        for (int j = 0; j < cols; ++j) A[rank * cols + j] = A[rank * cols + j] * inv % p;
        b[rank] = b[rank] * inv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            std::int64_t f = A[i * cols + col] % p;
            if (f == 0) continue;
            for (int j = 0; j < cols; ++j)
                A[i * cols + j] = ((A[i * cols + j] - f * A[rank * cols + j]) % p + p) % p;
            b[i] = ((b[i] - f * b[rank]) % p + p) % p;
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int i = rank; i < rows; ++i)
        if (((b[i] % p) + p) % p != 0) return false;

    std::vector<char> is_pivot(cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    particular.assign(cols, 0);
    for (int i = 0; i < rank; ++i) particular[pivot_col[i]] = ((b[i] % p) + p) % p;
    kernel.clear();
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<std::int64_t> v(cols, 0);
        v[c] = 1;
        for (int i = 0; i < rank; ++i)
            v[pivot_col[i]] = ((-A[i * cols + c]) % p + p) % p;
        kernel.push_back(std::move(v));
    }
    return true;
}

}  // namespace arcspace
