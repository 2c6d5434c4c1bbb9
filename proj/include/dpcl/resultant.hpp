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

#include "linalg.hpp"

namespace dpcl {

template <class T>
Matrix<T> sylvester_matrix(const UniPoly<T>& f, const UniPoly<T>& g) {
    int m = f.degree(), n = g.degree();
    size_t s = static_cast<size_t>(m + n);
    Matrix<T> a = zero_matrix<T>(s, s);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) a[i][i + k] = f.c[m - k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) a[n + i][i + k] = g.c[n - k];
    return a;
}

// Sylvester resultant over an integral domain
template <class T>
T resultant(const UniPoly<T>& f, const UniPoly<T>& g) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of zero polynomial");
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return T(1);
    if (m == 0) {
        T r(1);
        for (int i = 0; i < n; ++i) r = r * f.c[0];
        return r;
    }
    if (n == 0) {
        T r(1);
        for (int i = 0; i < m; ++i) r = r * g.c[0];
        return r;
    }
    return determinant(sylvester_matrix(f, g));
}

template <class T>
T discriminant(const UniPoly<T>& f) {
    int n = f.degree();
    if (n < 1) throw std::domain_error("discriminant of constant");
    T r = exact_div(resultant(f, f.derivative()), f.lead());
    if ((n * (n - 1) / 2) % 2) r = -r;
    return r;
}

// polynomials in W whose coefficients are polynomials in t
using WPoly = UniPoly<UniPoly<Rat>>;

inline UniPoly<Rat> resultant_in_W(const WPoly& f, const WPoly& g) { return resultant(f, g); }

}  // namespace dpcl
