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

#include <sstream>
#include <utility>
#include <vector>

#include "integer.hpp"

namespace dpcl {

// dense univariate polynomial, c[i] is the coefficient of x^i
namespace detail {
template <class T>
bool zero_coeff(const T& a) {
    return is_zero(a);
}
}  // namespace detail

template <class T>
class UniPoly {
  public:
    std::vector<T> c;

    UniPoly() = default;
    UniPoly(const T& constant) {  // NOLINT
        if (!detail::zero_coeff(constant)) c.push_back(constant);
    }
    UniPoly(int constant) : UniPoly(T(constant)) {}  // NOLINT
    explicit UniPoly(std::vector<T> coeffs) : c(std::move(coeffs)) { trim(); }

    static UniPoly monomial(const T& a, int deg) {
        UniPoly p;
        if (detail::zero_coeff(a)) return p;
        p.c.assign(static_cast<size_t>(deg) + 1, T(0));
        p.c[deg] = a;
        return p;
    }
    static UniPoly x() { return monomial(T(1), 1); }

    void trim() {
        while (!c.empty() && detail::zero_coeff(c.back())) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const T& lead() const { return c.back(); }
    T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c.size())) ? c[i] : T(0); }

    // lowest exponent with a nonzero coefficient
    int order() const {
        for (size_t i = 0; i < c.size(); ++i)
            if (!detail::zero_coeff(c[i])) return static_cast<int>(i);
        return -1;
    }

    template <class U>
    U operator()(const U& x) const {
        U r(0);
        for (int i = degree(); i >= 0; --i) r = r * x + U(c[i]);
        return r;
    }
    T eval(const T& x) const { return (*this)(x); }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& a : r.c) a = -a;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), T(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] = c[i] + o.c[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), T(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] = c[i] - o.c[i];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return UniPoly();
        std::vector<T> r(a.c.size() + b.c.size() - 1, T(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (detail::zero_coeff(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
        }
        return UniPoly(std::move(r));
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }
    UniPoly scaled(const T& s) const {
        UniPoly r = *this;
        for (auto& a : r.c) a = a * s;
        r.trim();
        return r;
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.c.size() != b.c.size()) return false;
        for (size_t i = 0; i < a.c.size(); ++i) {
            T d = a.c[i] - b.c[i];
            if (!detail::zero_coeff(d)) return false;
        }
        return true;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    UniPoly derivative() const {
        if (c.size() <= 1) return UniPoly();
        std::vector<T> r(c.size() - 1, T(0));
        for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * T(static_cast<int>(i));
        return UniPoly(std::move(r));
    }

    UniPoly pow(unsigned e) const {
        UniPoly r(T(1)), b = *this;
        while (e) {
            if (e & 1) r *= b;
            e >>= 1;
            if (e) b *= b;
        }
        return r;
    }

    // this(q(x))
    UniPoly compose(const UniPoly& q) const {
        UniPoly r;
        for (int i = degree(); i >= 0; --i) r = r * q + UniPoly(c[i]);
        return r;
    }

    // x^deg * this(1/x) with the given formal degree
    UniPoly reversed(int deg) const {
        std::vector<T> r(static_cast<size_t>(deg) + 1, T(0));
        for (int i = 0; i <= degree(); ++i) r[deg - i] = c[i];
        return UniPoly(std::move(r));
    }

    // this / x^k, requires divisibility
    UniPoly shift_down(int k) const {
        if (is_zero()) return *this;
        for (int i = 0; i < k; ++i)
            if (!detail::zero_coeff(coeff(i))) throw std::domain_error("shift_down: not divisible");
        return UniPoly(std::vector<T>(c.begin() + k, c.end()));
    }
};

template <class T>
bool is_zero(const UniPoly<T>& p) {
    return p.is_zero();
}

// division with remainder over a field
template <class T>
std::pair<UniPoly<T>, UniPoly<T>> divmod(const UniPoly<T>& a, const UniPoly<T>& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    UniPoly<T> r = a;
    if (a.degree() < b.degree()) return {UniPoly<T>(), r};
    std::vector<T> q(static_cast<size_t>(a.degree() - b.degree()) + 1, T(0));
    T inv = T(1) / b.lead();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int s = r.degree() - b.degree();
        T f = r.lead() * inv;
        q[s] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + s] = r.c[i + s] - f * b.c[i];
        r.c.pop_back();
        r.trim();
    }
    return {UniPoly<T>(std::move(q)), r};
}

template <class T>
UniPoly<T> operator%(const UniPoly<T>& a, const UniPoly<T>& b) {
    return divmod(a, b).second;
}

// exact quotient; over a field via divmod, over a domain by leading-term elimination
template <class T>
UniPoly<T> exact_div(const UniPoly<T>& a, const UniPoly<T>& b) {
    if (b.is_zero()) throw std::domain_error("exact_div by zero");
    if (a.is_zero()) return a;
    if (a.degree() < b.degree()) throw std::domain_error("exact_div: not divisible");
    UniPoly<T> r = a;
    std::vector<T> q(static_cast<size_t>(a.degree() - b.degree()) + 1, T(0));
    while (!r.is_zero()) {
        int s = r.degree() - b.degree();
        if (s < 0) throw std::domain_error("exact_div: not divisible");
        T f = exact_div(r.lead(), b.lead());
        q[s] = f;
        for (int i = 0; i <= b.degree(); ++i) r.c[i + s] = r.c[i + s] - f * b.c[i];
        r.trim();
    }
    return UniPoly<T>(std::move(q));
}

template <class T>
UniPoly<T> monic(const UniPoly<T>& a) {
    if (a.is_zero()) return a;
    return a.scaled(T(1) / a.lead());
}

// monic gcd over a field
template <class T>
UniPoly<T> gcd(UniPoly<T> a, UniPoly<T> b) {
    while (!b.is_zero()) {
        UniPoly<T> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

// (g, s, t) with s a + t b = g monic
template <class T>
void xgcd(const UniPoly<T>& a, const UniPoly<T>& b, UniPoly<T>& g, UniPoly<T>& s, UniPoly<T>& t) {
    UniPoly<T> r0 = a, r1 = b, s0(T(1)), s1, t0, t1(T(1));
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        UniPoly<T> s2 = s0 - q * s1, t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    T inv = T(1) / r0.lead();
    g = r0.scaled(inv);
    s = s0.scaled(inv);
    t = t0.scaled(inv);
}

// squarefree decomposition over a field of characteristic zero: a = lc * prod f_m^m
template <class T>
std::vector<std::pair<UniPoly<T>, int>> squarefree_decomposition(const UniPoly<T>& a) {
    std::vector<std::pair<UniPoly<T>, int>> out;
    if (a.degree() < 1) return out;
    UniPoly<T> f = monic(a);
    UniPoly<T> g = gcd(f, f.derivative());
    UniPoly<T> w = divmod(f, g).first;
    int m = 1;
    while (w.degree() > 0) {
        UniPoly<T> y = gcd(w, g);
        UniPoly<T> z = divmod(w, y).first;
        if (z.degree() > 0) out.emplace_back(monic(z), m);
        g = divmod(g, y).first;
        w = y;
        ++m;
    }
    return out;
}

template <class T>
UniPoly<T> squarefree_part(const UniPoly<T>& a) {
    UniPoly<T> r(T(1));
    for (auto& [f, m] : squarefree_decomposition(a)) r *= f;
    return r;
}

template <class T>
std::string to_string(const UniPoly<T>& p, const std::string& var = "t") {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        if (is_zero(p.c[i])) continue;
        std::string cs = to_string(p.c[i]);
        bool neg = !cs.empty() && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos;
        bool compound = cs.find_first_of("+-", 1) != std::string::npos;
        if (compound) cs = "(" + cs + ")";
        if (first) {
            if (neg) { os << "-"; cs = cs.substr(1); }
        } else {
            os << (neg ? " - " : " + ");
            if (neg) cs = cs.substr(1);
        }
        first = false;
        if (i == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

using QPoly = UniPoly<Rat>;

// primitive integer polynomial with positive leading coefficient proportional to p
inline UniPoly<Rat> primitive_integer(const UniPoly<Rat>& p) {
    if (p.is_zero()) return p;
    Int l = 1, g = 0;
    for (auto& a : p.c) l = lcm(l, Int(a.get_den()));
    std::vector<Rat> out;
    for (auto& a : p.c) {
        Int n = Int(a * l);
        out.emplace_back(n);
        g = gcd(g, n);
    }
    if (sgn(p.lead()) < 0) g = -g;
    for (auto& a : out) a /= g;
    return UniPoly<Rat>(std::move(out));
}

}  // namespace dpcl
