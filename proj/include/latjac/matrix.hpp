#pragma once

// Dense exact matrices over Z and Q: determinants, inverses, Smith normal form.

#include <cstddef>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace latjac {

template <typename T>
using Mat = std::vector<std::vector<T>>;

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

template <typename T>
inline Mat<T> identity_matrix(std::size_t n) {
    Mat<T> m(n, std::vector<T>(n, T(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = T(1);
    return m;
}

template <typename T>
inline Mat<T> mat_mul(const Mat<T>& a, const Mat<T>& b) {
    std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), p = b.size();
    Mat<T> c(n, std::vector<T>(m, T(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < p; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

template <typename T>
inline Mat<T> transpose(const Mat<T>& a) {
    std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    Mat<T> t(m, std::vector<T>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) t[j][i] = a[i][j];
    return t;
}

inline RatMat to_rat(const IntMat& a) {
    RatMat r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (const auto& x : a[i]) r[i].emplace_back(x);
    return r;
}

// Row vector times matrix.
template <typename T>
inline std::vector<T> vec_mat(const std::vector<T>& v, const Mat<T>& a) {
    std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    std::vector<T> r(m, T(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m; ++j) r[j] += v[i] * a[i][j];
    }
    return r;
}

template <typename T>
inline T dot(const std::vector<T>& a, const std::vector<T>& b) {
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Determinant by fraction-free (Bareiss) elimination.
inline Int det_int(const IntMat& a0) {
    IntMat a = a0;
    std::size_t n = a.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = num / prev;  // exact by Bareiss
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

// Leading principal minors (for positive-definiteness checks).
inline std::vector<Int> leading_minors(const IntMat& a) {
    std::vector<Int> mins;
    for (std::size_t k = 1; k <= a.size(); ++k) {
        IntMat sub(k, IntVec(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[i][j];
        mins.push_back(det_int(sub));
    }
    return mins;
}

// Inverse of a rational matrix by Gauss-Jordan; throws DegenerateError.
inline RatMat rat_inverse(const RatMat& a0) {
    std::size_t n = a0.size();
    RatMat a = a0;
    RatMat inv = identity_matrix<Rat>(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && a[piv][k] == 0) ++piv;
        if (piv == n) throw DegenerateError("matrix not invertible");
        std::swap(a[k], a[piv]);
        std::swap(inv[k], inv[piv]);
        Rat d = a[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            a[k][j] /= d;
            inv[k][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[k][j];
                inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

// Rank of a rational matrix (exact Gaussian elimination).
inline std::size_t rat_rank(RatMat a) {
    std::size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m && rank < n; ++col) {
        std::size_t piv = rank;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[rank], a[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j < m; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Smith normal form: returns (U, D, V) with U*A*V = D, U and V unimodular,
// D diagonal with d_1 | d_2 | ... (nonnegative).
struct SmithResult {
    IntMat U, D, V;
};

inline SmithResult smith_normal_form(const IntMat& a0) {
    std::size_t n = a0.size();
    IntMat D = a0;
    IntMat U = identity_matrix<Int>(n);
    IntMat V = identity_matrix<Int>(n);

    auto row_op = [&](std::size_t i, std::size_t j, const Int& f) {
        // row_i -= f * row_j
        for (std::size_t c = 0; c < n; ++c) D[i][c] -= f * D[j][c];
        for (std::size_t c = 0; c < n; ++c) U[i][c] -= f * U[j][c];
    };
    auto col_op = [&](std::size_t i, std::size_t j, const Int& f) {
        // col_i -= f * col_j
        for (std::size_t r = 0; r < n; ++r) D[r][i] -= f * D[r][j];
        for (std::size_t r = 0; r < n; ++r) V[r][i] -= f * V[r][j];
    };

    for (std::size_t t = 0; t < n; ++t) {
        // Find a nonzero pivot in the trailing block with minimal |value|.
        while (true) {
            std::size_t pi = n, pj = n;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (D[i][j] != 0 &&
                        (pi == n || abs(D[i][j]) < abs(D[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == n) return {U, D, V};  // trailing block zero
            if (pi != t) {
                std::swap(D[pi], D[t]);
                std::swap(U[pi], U[t]);
            }
            if (pj != t) {
                for (std::size_t r = 0; r < n; ++r) std::swap(D[r][pj], D[r][t]);
                for (std::size_t r = 0; r < n; ++r) std::swap(V[r][pj], V[r][t]);
            }
            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i)
                if (D[i][t] != 0) {
                    row_op(i, t, floor_div(D[i][t], D[t][t]));
                    if (D[i][t] != 0) clean = false;
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (D[t][j] != 0) {
                    col_op(j, t, floor_div(D[t][j], D[t][t]));
                    if (D[t][j] != 0) clean = false;
                }
            if (!clean) continue;
            // Enforce divisibility d_t | trailing entries.
            bool divides_all = true;
            for (std::size_t i = t + 1; i < n && divides_all; ++i)
                for (std::size_t j = t + 1; j < n && divides_all; ++j)
                    if (D[i][j] % D[t][t] != 0) {
                        // Add row i to row t, redo.
                        for (std::size_t c = 0; c < n; ++c) D[t][c] += D[i][c];
                        for (std::size_t c = 0; c < n; ++c) U[t][c] += U[i][c];
                        divides_all = false;
                    }
            if (divides_all) break;
        }
        if (D[t][t] < 0) {
            for (std::size_t c = 0; c < n; ++c) D[t][c] = -D[t][c];
            for (std::size_t c = 0; c < n; ++c) U[t][c] = -U[t][c];
        }
    }
    return {U, D, V};
}

}  // namespace latjac
