/*
 * Copyright 2026 The dpcl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <vector>

#include "poly.hpp"

namespace dpcl {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
Matrix<T> zero_matrix(size_t rows, size_t cols) {
    return Matrix<T>(rows, std::vector<T>(cols, T(0)));
}

// in-place reduced row echelon form over a field; returns pivot columns
template <class T>
std::vector<size_t> rref(Matrix<T>& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t col = 0; col < cols && r < rows; ++col) {
        size_t sel = rows;
        for (size_t i = r; i < rows; ++i)
            if (!is_zero(m[i][col])) { sel = i; break; }
        if (sel == rows) continue;
        std::swap(m[r], m[sel]);
        T inv = T(1) / m[r][col];
        for (size_t j = col; j < cols; ++j) m[r][j] = m[r][j] * inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || is_zero(m[i][col])) continue;
            T f = m[i][col];
            for (size_t j = col; j < cols; ++j)
                if (!is_zero(m[r][j])) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

template <class T>
size_t rank(Matrix<T> m) {
    return rref(m).size();
}

// kernel basis in reduced echelon form (each vector has a leading 1 at its own column)
template <class T>
std::vector<std::vector<T>> kernel_basis(Matrix<T> m, size_t cols) {
    std::vector<size_t> piv = rref(m);
    std::vector<bool> is_piv(cols, false);
    for (size_t p : piv) is_piv[p] = true;
    std::vector<std::vector<T>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<T> v(cols, T(0));
        v[f] = T(1);
        for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
        basis.push_back(std::move(v));
    }
    if (!basis.empty()) {
        rref(basis);
        while (!basis.empty()) {
            bool allz = true;
            for (auto& a : basis.back()) allz = allz && is_zero(a);
            if (!allz) break;
            basis.pop_back();
        }
    }
    return basis;
}

template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
    if (m.empty()) return {};
    return kernel_basis(m, m[0].size());
}

template <class T>
struct LinearSolution {
    bool consistent = false;
    std::vector<T> particular;
    std::vector<std::vector<T>> kernel;
};

// particular solution has all free variables zero
template <class T>
LinearSolution<T> solve_linear_system(const Matrix<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("solve_linear_system: dimension mismatch");
    LinearSolution<T> out;
    size_t cols = a.empty() ? 0 : a[0].size();
    Matrix<T> aug = a;
    for (size_t i = 0; i < aug.size(); ++i) {
        if (aug[i].size() != cols) throw std::invalid_argument("solve_linear_system: ragged matrix");
        aug[i].push_back(b[i]);
    }
    std::vector<size_t> piv = rref(aug);
    if (!piv.empty() && piv.back() == cols) return out;
    out.consistent = true;
    out.particular.assign(cols, T(0));
    for (size_t r = 0; r < piv.size(); ++r) out.particular[piv[r]] = aug[r][cols];
    out.kernel = kernel_basis(a, cols);
    return out;
}

template <class T>
std::vector<T> mat_vec(const Matrix<T>& a, const std::vector<T>& x) {
    std::vector<T> r(a.size(), T(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) r[i] = r[i] + a[i][j] * x[j];
    return r;
}

template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix<T> r = zero_matrix<T>(n, m);
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (is_zero(a[i][l])) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] = r[i][j] + a[i][l] * b[l][j];
        }
    return r;
}

// fraction-free determinant over an integral domain with exact_div
template <class T>
T determinant(Matrix<T> m) {
    size_t n = m.size();
    if (n == 0) return T(1);
    T prev(1);
    bool neg = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m[k][k])) {
            size_t sel = n;
            for (size_t i = k + 1; i < n; ++i)
                if (!is_zero(m[i][k])) { sel = i; break; }
            if (sel == n) return T(0);
            std::swap(m[k], m[sel]);
            neg = !neg;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                T num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_div(num, prev);
            }
            m[i][k] = T(0);
        }
        prev = m[k][k];
    }
    T d = m[n - 1][n - 1];
    return neg ? T(-d) : d;
}

}  // namespace dpcl
