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

#include <random>

#include "delpezzo.hpp"
#include "number_field.hpp"

namespace dpcl {

// (4^g + 2) / 3 orbits of a fixed-point-free order-3 automorphism on F_2^(2g)
inline Int orbit_count_formula(int g) {
    if (g < 1) throw std::invalid_argument("genus must be positive");
    Int n = ipow(Int(4), static_cast<unsigned long>(g)) + 2;
    if (n % 3 != 0) throw std::logic_error("4^g + 2 not divisible by 3");
    return n / 3;
}

inline int rank_bound(int g) {
    Int n = orbit_count_formula(g);
    return static_cast<int>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1;
}

using F2Matrix = std::vector<std::vector<int>>;

inline F2Matrix f2_mul(const F2Matrix& a, const F2Matrix& b) {
    size_t n = a.size();
    F2Matrix c(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k)
            if (a[i][k] & 1)
                for (size_t j = 0; j < n; ++j) c[i][j] ^= b[k][j] & 1;
    return c;
}

inline F2Matrix f2_identity(size_t n) {
    F2Matrix m(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline unsigned f2_apply(const F2Matrix& m, unsigned v) {
    unsigned out = 0;
    for (size_t i = 0; i < m.size(); ++i) {
        int bit = 0;
        for (size_t j = 0; j < m.size(); ++j) bit ^= m[i][j] & static_cast<int>((v >> j) & 1u);
        out |= static_cast<unsigned>(bit) << i;
    }
    return out;
}

// orbits of <M> on F_2^n by enumeration; n <= 20
inline size_t sigma_orbit_count(const F2Matrix& m) {
    size_t n = m.size();
    if (n == 0 || n > 20) throw std::invalid_argument("matrix size must be in 1..20");
    for (auto& row : m)
        if (row.size() != n) throw std::invalid_argument("matrix must be square");
    if (f2_mul(m, f2_mul(m, m)) != f2_identity(n)) throw std::invalid_argument("M^3 != I");
    for (unsigned v = 1; v < (1u << n); ++v)
        if (f2_apply(m, v) == v) {
            std::string s;
            for (size_t j = 0; j < n; ++j) s += ((v >> j) & 1u) ? '1' : '0';
            throw std::invalid_argument("M has a nonzero fixed vector " + s);
        }
    std::vector<bool> seen(1u << n, false);
    size_t orbits = 0;
    for (unsigned v = 0; v < (1u << n); ++v) {
        if (seen[v]) continue;
        ++orbits;
        for (unsigned w = v; !seen[w]; w = f2_apply(m, w)) seen[w] = true;
    }
    return orbits;
}

// number of fixed vectors, for the Burnside count (2^n + 2 #Fix) / 3
inline size_t f2_fixed_count(const F2Matrix& m) {
    size_t n = m.size(), c = 0;
    for (unsigned v = 0; v < (1u << n); ++v)
        if (f2_apply(m, v) == v) ++c;
    return c;
}

inline std::optional<F2Matrix> f2_inverse(const F2Matrix& m) {
    size_t n = m.size();
    F2Matrix a = m, inv = f2_identity(n);
    for (size_t c = 0; c < n; ++c) {
        size_t r = c;
        while (r < n && !(a[r][c] & 1)) ++r;
        if (r == n) return std::nullopt;
        std::swap(a[r], a[c]);
        std::swap(inv[r], inv[c]);
        for (size_t i = 0; i < n; ++i)
            if (i != c && (a[i][c] & 1))
                for (size_t j = 0; j < n; ++j) {
                    a[i][j] ^= a[c][j];
                    inv[i][j] ^= inv[c][j];
                }
    }
    return inv;
}

// P B P^-1 with B block-diagonal in [[0,1],[1,1]] and P uniformly random invertible
template <class Rng>
F2Matrix random_order3_matrix(int g, Rng& rng) {
    size_t n = static_cast<size_t>(2 * g);
    F2Matrix b(n, std::vector<int>(n, 0));
    for (size_t k = 0; k < n; k += 2) {
        b[k][k + 1] = 1;
        b[k + 1][k] = 1;
        b[k + 1][k + 1] = 1;
    }
    std::uniform_int_distribution<int> bit(0, 1);
    for (;;) {
        F2Matrix p(n, std::vector<int>(n, 0));
        for (auto& row : p)
            for (auto& x : row) x = bit(rng);
        auto pi = f2_inverse(p);
        if (pi) return f2_mul(p, f2_mul(b, *pi));
    }
}

using KPoint = ProjPoint<NumberFieldElem>;
using KMatrix3 = std::array<std::array<NumberFieldElem, 3>, 3>;

struct Mu3Config {
    FieldPtr field;
    std::vector<KPoint> points;
    KMatrix3 automorphism;
};

inline FieldPtr cyclotomic3() { return make_field(QPoly(std::vector<Rat>{1, 1, 1}), "zeta3"); }

// the quadratic conjugate: the generator goes to the other root -tr - x
inline NumberFieldElem conjugate(const NumberFieldElem& a) {
    const FieldPtr& k = a.field();
    if (!k) return a;
    if (k->degree() != 2) throw std::invalid_argument("conjugate: quadratic fields only");
    const QPoly& m = k->modulus();
    QPoly other(std::vector<Rat>{-m.coeff(1) / m.coeff(2), Rat(-1)});
    return NumberFieldElem(k, a.as_poly().compose(other));
}

inline Mu3Config mu3_example() {
    Mu3Config c;
    c.field = cyclotomic3();
    NumberFieldElem z = NumberFieldElem::generator(c.field), z2 = z * z, one(1), zero(0);
    auto P = [&](NumberFieldElem x, NumberFieldElem y, NumberFieldElem w) { return KPoint(x, y, w); };
    NumberFieldElem three(3), four(4), five(5);
    c.points = {P(zero, one, zero), P(zero, zero, one),   P(one, one, one),          P(one, z, z2),
                P(one, z2, z),      P(three, four, five), P(three, four * z, five * z2), P(three, four * z2, five * z)};
    c.automorphism = {{{one, zero, zero}, {zero, z, zero}, {zero, zero, z2}}};
    return c;
}

inline KPoint apply(const KMatrix3& m, const KPoint& p) {
    KPoint q;
    for (int i = 0; i < 3; ++i) {
        NumberFieldElem s(0);
        for (int j = 0; j < 3; ++j) s = s + m[i][j] * p.c[j];
        q.c[i] = s;
    }
    return q;
}

inline KMatrix3 mat_mul3(const KMatrix3& a, const KMatrix3& b) {
    KMatrix3 c;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            NumberFieldElem s(0);
            for (int k = 0; k < 3; ++k) s = s + a[i][k] * b[k][j];
            c[i][j] = s;
        }
    return c;
}

inline bool is_scalar(const KMatrix3& m) {
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i != j && !m[i][j].is_zero()) return false;
            if (i == j && m[i][i] != m[0][0]) return false;
        }
    return !m[0][0].is_zero();
}

struct Mu3Report {
    GeneralPositionVerdict<NumberFieldElem> general_position;
    bool invariant = false;
    bool order_three = false;
    int galois_orbits = 0;
    bool pass = false;
    std::vector<std::string> notes;
};

inline Mu3Report check_mu3(const Mu3Config& c) {
    Mu3Report r;
    r.general_position = check_general_position(c.points);
    r.invariant = true;
    for (auto& p : c.points) {
        KPoint q = apply(c.automorphism, p);
        bool found = false;
        for (auto& s : c.points) found = found || s == q;
        r.invariant = r.invariant && found;
    }
    KMatrix3 cube = mat_mul3(c.automorphism, mat_mul3(c.automorphism, c.automorphism));
    r.order_three = is_scalar(cube) && !is_scalar(c.automorphism);
    if (!r.order_three) r.notes.push_back("automorphism is not of order 3");
    // orbits of complex conjugation on the point set
    std::vector<bool> used(c.points.size(), false);
    for (size_t i = 0; i < c.points.size(); ++i) {
        if (used[i]) continue;
        ++r.galois_orbits;
        used[i] = true;
        KPoint q(conjugate(c.points[i].c[0]), conjugate(c.points[i].c[1]), conjugate(c.points[i].c[2]));
        for (size_t j = i + 1; j < c.points.size(); ++j)
            if (!used[j] && c.points[j] == q) used[j] = true;
    }
    r.pass = r.general_position.pass && r.invariant && r.order_three;
    return r;
}

inline Mu3Report check_mu3_example() { return check_mu3(mu3_example()); }

}  // namespace dpcl
