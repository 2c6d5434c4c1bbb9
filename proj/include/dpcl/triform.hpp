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

#include <array>
#include <map>

#include "poly.hpp"

namespace dpcl {

using Exp3 = std::array<int, 3>;

// graded lexicographic, x > y > z, greatest first
struct GrLexGreater {
    bool operator()(const Exp3& a, const Exp3& b) const {
        int da = a[0] + a[1] + a[2], db = b[0] + b[1] + b[2];
        if (da != db) return da > db;
        if (a[0] != b[0]) return a[0] > b[0];
        return a[1] > b[1];
    }
};

// homogeneous form in x, y, z with rational coefficients
class TriForm {
  public:
    using Terms = std::map<Exp3, Rat, GrLexGreater>;

    TriForm() = default;
    explicit TriForm(int degree) : degree_(degree) {}
    TriForm(int degree, Terms terms) : degree_(degree), terms_(std::move(terms)) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->first[0] + it->first[1] + it->first[2] != degree_) throw std::invalid_argument("TriForm: inhomogeneous term");
            it = sgn(it->second) == 0 ? terms_.erase(it) : std::next(it);
        }
    }
    static TriForm var(int i) {
        Exp3 e{0, 0, 0};
        e[i] = 1;
        return TriForm(1, Terms{{e, Rat(1)}});
    }
    static TriForm constant(const Rat& c) { return TriForm(0, Terms{{{0, 0, 0}, c}}); }

    // all exponent triples of degree d in the fixed order
    static std::vector<Exp3> monomials(int d) {
        std::vector<Exp3> out;
        for (int i = d; i >= 0; --i)
            for (int j = d - i; j >= 0; --j) out.push_back({i, j, d - i - j});
        return out;
    }
    static TriForm from_coeffs(int d, const std::vector<Rat>& v) {
        auto mons = monomials(d);
        if (v.size() != mons.size()) throw std::invalid_argument("TriForm::from_coeffs: wrong length");
        Terms t;
        for (size_t k = 0; k < v.size(); ++k)
            if (sgn(v[k]) != 0) t[mons[k]] = v[k];
        return TriForm(d, std::move(t));
    }
    std::vector<Rat> coeffs() const {
        auto mons = monomials(degree_);
        std::vector<Rat> out;
        out.reserve(mons.size());
        for (auto& m : mons) out.push_back(coeff(m));
        return out;
    }

    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rat coeff(const Exp3& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    TriForm operator-() const {
        TriForm r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    TriForm& operator+=(const TriForm& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) degree_ = o.degree_;
        if (o.degree_ != degree_) throw std::invalid_argument("TriForm: adding forms of different degree");
        for (auto& [e, c] : o.terms_) {
            Rat& s = terms_[e];
            s += c;
            if (sgn(s) == 0) terms_.erase(e);
        }
        return *this;
    }
    TriForm& operator-=(const TriForm& o) { return *this += -o; }
    friend TriForm operator+(TriForm a, const TriForm& b) { return a += b; }
    friend TriForm operator-(TriForm a, const TriForm& b) { return a -= b; }
    friend TriForm operator*(const TriForm& a, const TriForm& b) {
        TriForm r(a.degree_ + b.degree_);
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) {
                Exp3 e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
                r.terms_[e] += ca * cb;
            }
        for (auto it = r.terms_.begin(); it != r.terms_.end();) it = sgn(it->second) == 0 ? r.terms_.erase(it) : std::next(it);
        return r;
    }
    friend TriForm operator*(const Rat& s, const TriForm& a) {
        TriForm r(a.degree_);
        if (sgn(s) == 0) return r;
        for (auto& [e, c] : a.terms_) r.terms_[e] = s * c;
        return r;
    }
    friend bool operator==(const TriForm& a, const TriForm& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TriForm& a, const TriForm& b) { return !(a == b); }

    TriForm pow(unsigned e) const {
        TriForm r = constant(Rat(1));
        for (unsigned k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    TriForm partial(int var) const {
        TriForm r(degree_ > 0 ? degree_ - 1 : 0);
        for (auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exp3 f = e;
            f[var] -= 1;
            r.terms_[f] = c * e[var];
        }
        return r;
    }

    template <class T>
    T eval(const T& x, const T& y, const T& z) const {
        std::array<std::vector<T>, 3> pw;
        const T* v[3] = {&x, &y, &z};
        for (int k = 0; k < 3; ++k) {
            pw[k].push_back(T(1));
            for (int i = 1; i <= degree_; ++i) pw[k].push_back(pw[k].back() * *v[k]);
        }
        T s(0);
        for (auto& [e, c] : terms_) s = s + T(c) * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]];
        return s;
    }
    template <class T>
    T eval(const std::array<T, 3>& p) const {
        return eval(p[0], p[1], p[2]);
    }

    // first nonzero coefficient scaled to one
    TriForm normalized() const {
        if (is_zero()) return *this;
        return (Rat(1) / terms_.begin()->second) * *this;
    }

  private:
    int degree_ = 0;
    Terms terms_;
};

inline bool is_zero(const TriForm& f) { return f.is_zero(); }

inline std::string to_string(const TriForm& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    static const char* names[3] = {"x", "y", "z"};
    for (auto& [e, c] : f.terms()) {
        Rat a = c;
        bool neg = sgn(a) < 0;
        if (neg) a = -a;
        if (first) os << (neg ? "-" : "");
        else os << (neg ? " - " : " + ");
        first = false;
        bool constant = e[0] + e[1] + e[2] == 0;
        bool one = a == 1;
        if (!one || constant) os << a.get_str();
        bool need_star = !one || constant;
        for (int k = 0; k < 3; ++k) {
            if (!e[k]) continue;
            os << (need_star ? "*" : "") << names[k];
            if (e[k] > 1) os << "^" << e[k];
            need_star = true;
        }
    }
    return os.str();
}

// polynomial in local coordinates X, Y
template <class T>
class BiPoly {
  public:
    std::map<std::pair<int, int>, T> terms;

    void add(int a, int b, const T& c) {
        if (is_zero(c)) return;
        auto key = std::make_pair(a, b);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(key, c);
        } else {
            it->second = it->second + c;
            if (is_zero(it->second)) terms.erase(it);
        }
    }
    int lowest_degree() const {
        int m = -1;
        for (auto& [e, c] : terms)
            if (m < 0 || e.first + e.second < m) m = e.first + e.second;
        return m;
    }
    // homogeneous part of degree d, as a polynomial in m with X = 1, Y = m
    UniPoly<T> cone(int d) const {
        std::vector<T> c(static_cast<size_t>(d) + 1, T(0));
        for (auto& [e, v] : terms)
            if (e.first + e.second == d) c[e.second] = v;
        return UniPoly<T>(std::move(c));
    }
    T coeff(int a, int b) const {
        auto it = terms.find({a, b});
        return it == terms.end() ? T(0) : it->second;
    }
};

inline std::vector<std::vector<Rat>> binomial_rows(int n) {
    std::vector<std::vector<Rat>> b(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        b[i].assign(static_cast<size_t>(i) + 1, Rat(1));
        for (int j = 1; j < i; ++j) b[i][j] = b[i - 1][j - 1] + b[i - 1][j];
    }
    return b;
}

// f in the affine chart where the chart coordinate of P is 1, centred at P.
// X, Y are the two remaining coordinates (in increasing index order) minus those of P.
inline BiPoly<Rat> local_expansion(const TriForm& f, const std::array<Rat, 3>& p, int chart) {
    int ia = chart == 0 ? 1 : 0, ib = chart == 2 ? 1 : 2;
    Rat s = p[chart];
    Rat a0 = p[ia] / s, b0 = p[ib] / s;
    auto bin = binomial_rows(f.degree());
    BiPoly<Rat> out;
    for (auto& [e, c] : f.terms()) {
        int i = e[ia], j = e[ib];
        for (int k = 0; k <= i; ++k) {
            Rat ck = c * bin[i][k] * rpow(a0, i - k);
            if (sgn(ck) == 0) continue;
            for (int l = 0; l <= j; ++l) out.add(k, l, Rat(ck * bin[j][l] * rpow(b0, j - l)));
        }
    }
    return out;
}

// X -> X + c Y
template <class T>
BiPoly<T> shear(const BiPoly<T>& f, const T& c) {
    int n = 0;
    for (auto& [e, v] : f.terms) n = std::max(n, e.first);
    auto bin = binomial_rows(n);
    BiPoly<T> out;
    for (auto& [e, v] : f.terms) {
        T cp(1);
        for (int k = 0; k <= e.first; ++k) {
            // X^a = sum_k binom(a,k) X^(a-k) (cY)^k
            out.add(e.first - k, e.second + k, T(v * T(bin[e.first][k]) * cp));
            cp = cp * c;
        }
    }
    return out;
}

template <class T>
UniPoly<T> truncate(const UniPoly<T>& s, int n) {
    if (s.degree() < n) return s;
    return UniPoly<T>(std::vector<T>(s.c.begin(), s.c.begin() + n));
}

// f(X(s), Y(s)) mod s^n
template <class T, class U>
UniPoly<T> substitute_series(const BiPoly<U>& f, const UniPoly<T>& xs, const UniPoly<T>& ys, int n) {
    int dx = 0, dy = 0;
    for (auto& [e, v] : f.terms) {
        dx = std::max(dx, e.first);
        dy = std::max(dy, e.second);
    }
    std::vector<UniPoly<T>> px{UniPoly<T>(T(1))}, py{UniPoly<T>(T(1))};
    for (int i = 1; i <= dx; ++i) px.push_back(truncate(px.back() * xs, n));
    for (int i = 1; i <= dy; ++i) py.push_back(truncate(py.back() * ys, n));
    UniPoly<T> out;
    for (auto& [e, v] : f.terms) out += truncate(px[e.first] * py[e.second], n).scaled(T(v));
    return out;
}

}  // namespace dpcl
