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

#include <optional>

#include "delpezzo.hpp"

namespace dpcl {

inline TriForm jacobian_determinant(const TriForm& u, const TriForm& v, const TriForm& w) {
    TriForm m[3][3];
    for (int r = 0; r < 3; ++r) {
        m[r][0] = u.partial(r);
        m[r][1] = v.partial(r);
        m[r][2] = w.partial(r);
    }
    TriForm f = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    if (f.is_zero()) throw std::runtime_error("jacobian determinant vanishes identically (w depends on u, v)");
    return f;
}

// order of vanishing >= 3 at p: every second partial vanishes there
inline bool has_triple_point(const TriForm& f, const QPoint& p) {
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
            if (sgn(f.partial(i).partial(j).eval(p.c)) != 0) return false;
    return true;
}

// coefficients c[j] of u^j v^(m-j)
using BinaryForm = std::vector<Rat>;

inline QPoly dehomogenize(const BinaryForm& c) { return QPoly(c); }

struct WeightedModel {
    Rat c0;
    BinaryForm c2, c4, c6;
};

// F^2 = c0 w^3 + c2(u,v) w^2 + c4(u,v) w + c6(u,v), solved with F scaled by the kernel
inline WeightedModel weighted_model_coefficients(const TriForm& u, const TriForm& v, const TriForm& w, const TriForm& f) {
    std::vector<TriForm> up{TriForm::constant(Rat(1))}, vp{TriForm::constant(Rat(1))}, wp{TriForm::constant(Rat(1))};
    for (int k = 1; k <= 6; ++k) {
        up.push_back(up.back() * u);
        vp.push_back(vp.back() * v);
    }
    for (int k = 1; k <= 3; ++k) wp.push_back(wp.back() * w);
    std::vector<TriForm> cols{f * f, wp[3]};
    for (int m : {2, 4, 6})
        for (int j = 0; j <= m; ++j) cols.push_back(up[j] * vp[m - j] * wp[(6 - m) / 2]);
    auto mons = TriForm::monomials(18);
    Matrix<Rat> a = zero_matrix<Rat>(mons.size(), cols.size());
    for (size_t c = 0; c < cols.size(); ++c) {
        std::vector<Rat> v18 = cols[c].coeffs();
        for (size_t r = 0; r < mons.size(); ++r) a[r][c] = c == 0 ? v18[r] : Rat(-v18[r]);
    }
    auto ker = kernel_basis(a, cols.size());
    if (ker.size() != 1) throw std::runtime_error("weighted model system has kernel dimension " + std::to_string(ker.size()) + ", expected 1");
    std::vector<Rat> s = ker[0];
    if (sgn(s[0]) == 0) throw std::runtime_error("weighted model system forces the F^2 coefficient to vanish");
    Rat mu = s[0];
    for (auto& x : s) x /= mu;
    WeightedModel out;
    out.c0 = s[1];
    if (sgn(out.c0) == 0) throw std::runtime_error("weighted model has c0 = 0");
    size_t k = 2;
    out.c2.assign(s.begin() + k, s.begin() + k + 3);
    k += 3;
    out.c4.assign(s.begin() + k, s.begin() + k + 5);
    k += 5;
    out.c6.assign(s.begin() + k, s.begin() + k + 7);
    return out;
}

// monic model W^n + a_{n-1}(t) W^(n-1) + ... + a_0(t)
struct TrigonalModel {
    int n = 3;
    std::vector<QPoly> a;             // a[j] multiplies W^j
    // provenance, when derived from a del Pezzo surface: W = c0 * w / v^2 - w_shift
    std::optional<WeightedModel> weighted;
    Rat w_shift = 0;
    Rat base_t = 0;
    std::optional<TriForm> singular_plane_model;

    const QPoly& coeff(int j) const { return a.at(static_cast<size_t>(j)); }
    const QPoly& a2() const { return a.at(2); }
    const QPoly& a1() const { return a.at(1); }
    const QPoly& a0() const { return a.at(0); }

    WPoly as_wpoly() const {
        std::vector<QPoly> c = a;
        c.push_back(QPoly(Rat(1)));
        return WPoly(std::move(c));
    }
    QPoly fibre(const Rat& t) const {
        std::vector<Rat> c;
        for (auto& p : a) c.push_back(p(t));
        c.emplace_back(1);
        return QPoly(std::move(c));
    }
};

inline TrigonalModel make_model(std::vector<QPoly> a) {
    TrigonalModel m;
    m.n = static_cast<int>(a.size());
    m.a = std::move(a);
    return m;
}

inline std::string to_string(const TrigonalModel& m) {
    std::string s = "W^" + std::to_string(m.n);
    for (int j = m.n - 1; j >= 0; --j) {
        if (m.a[j].is_zero()) continue;
        s += " + (" + to_string(m.a[j]) + ")";
        if (j > 0) s += j == 1 ? "*W" : "*W^" + std::to_string(j);
    }
    return s;
}

// f(W + r) for a monic model
inline std::vector<QPoly> translate_W(const std::vector<QPoly>& a, const QPoly& r) {
    WPoly f(std::vector<QPoly>(a.begin(), a.end()));
    f.c.resize(a.size() + 1);
    f.c.back() = QPoly(Rat(1));
    WPoly g = f.compose(WPoly(std::vector<QPoly>{r, QPoly(Rat(1))}));
    std::vector<QPoly> out(a.size());
    for (size_t j = 0; j < a.size(); ++j) out[j] = g.coeff(static_cast<int>(j));
    return out;
}

// dehomogenize at v = 1, make monic via Y = c0 W, move the base fibre to t = 0 and its triple root to W = 0
inline TrigonalModel trigonal_affine_model(const WeightedModel& wm, const Rat& base_t = Rat(0)) {
    QPoly sh(std::vector<Rat>{base_t, Rat(1)});
    QPoly c2 = dehomogenize(wm.c2).compose(sh), c4 = dehomogenize(wm.c4).compose(sh), c6 = dehomogenize(wm.c6).compose(sh);
    std::vector<QPoly> a{c6.scaled(wm.c0 * wm.c0), c4.scaled(wm.c0), c2};
    Rat r = -a[2](Rat(0)) / 3;
    if (a[1](Rat(0)) != 3 * r * r || a[0](Rat(0)) != -r * r * r)
        throw std::runtime_error("fibre at 0 not totally ramified");
    TrigonalModel m;
    m.n = 3;
    m.a = translate_W(a, QPoly(r));
    for (auto& p : m.a)
        if (sgn(p(Rat(0))) != 0) throw std::runtime_error("fibre at 0 not totally ramified");
    m.weighted = wm;
    m.w_shift = r;
    m.base_t = base_t;
    return m;
}

inline QPoly model_discriminant(const TrigonalModel& m) { return discriminant(m.as_wpoly()); }

namespace detail {

inline int ceil_div(int a, int b) { return a <= 0 ? 0 : (a + b - 1) / b; }

// model in s = 1/t with W = V / s^k, polynomial coefficients
inline std::vector<QPoly> model_at_infinity(const TrigonalModel& m) {
    int k = 0;
    for (int j = 0; j < m.n; ++j)
        if (!m.a[j].is_zero()) k = std::max(k, ceil_div(m.a[j].degree(), m.n - j));
    std::vector<QPoly> b(static_cast<size_t>(m.n));
    for (int j = 0; j < m.n; ++j) b[j] = m.a[j].is_zero() ? QPoly() : m.a[j].reversed(k * (m.n - j));
    return b;
}

inline void depressed(const std::vector<QPoly>& a, QPoly& p, QPoly& q) {
    const QPoly &a2 = a[2], &a1 = a[1], &a0 = a[0];
    p = a1 - (a2 * a2).scaled(Rat(1, 3));
    q = a0 - (a1 * a2).scaled(Rat(1, 3)) + (a2 * a2 * a2).scaled(Rat(2, 27));
}

inline QPoly gcd0(const QPoly& x, const QPoly& y) {
    if (x.is_zero()) return y.is_zero() ? QPoly() : monic(y);
    if (y.is_zero()) return monic(x);
    return gcd(x, y);
}

// split squarefree t into coprime parts on which ord of x is constant (-1 meaning x = 0)
inline std::vector<std::pair<QPoly, int>> split_by_order(const QPoly& t, const QPoly& x) {
    std::vector<std::pair<QPoly, int>> out;
    if (x.is_zero()) {
        out.emplace_back(t, -1);
        return out;
    }
    QPoly rem = t, cur = x;
    for (int k = 0; rem.degree() > 0; ++k) {
        QPoly d = gcd(rem, cur);
        QPoly exact = divmod(rem, d).first;
        if (exact.degree() > 0) out.emplace_back(exact, k);
        rem = d;
        if (rem.degree() > 0) cur = divmod(cur, rem).first;
    }
    return out;
}

inline QPoly pow_poly(const QPoly& d, int k) { return d.pow(static_cast<unsigned>(k)); }

// sum over places above the roots of squarefree s (all with ord_disc = m) of (e - 1)
inline int local_ramification(const std::vector<QPoly>& a, int n, const QPoly& s, int m) {
    if (s.degree() < 1 || m == 0) return 0;
    if (n == 2) return (m % 2) * s.degree();
    if (n != 3) throw std::domain_error("ramification analysis implemented for degree 2 and 3 covers");
    QPoly p, q;
    depressed(a, p, q);
    QPoly trip = gcd(s, gcd0(p, q));
    int total = (m % 2) * (s.degree() - trip.degree());
    if (trip.degree() < 1) return total;
    for (auto& [part_p, op] : split_by_order(trip, p))
        for (auto& [part, oq] : split_by_order(part_p, q)) {
            const long inf = 1L << 40;
            long P = op < 0 ? inf : op, Q = oq < 0 ? inf : oq;
            int contrib = 0;
            if (3 * P > 2 * Q) {
                contrib = (Q % 3 != 0) ? 2 * part.degree() : 0;
            } else if (3 * P == 2 * Q) {
                QPoly alpha = divmod(p, pow_poly(part, op)).first, beta = divmod(q, pow_poly(part, oq)).first;
                QPoly res = (alpha * alpha * alpha).scaled(Rat(4)) + (beta * beta).scaled(Rat(27));
                QPoly g = gcd0(part, res);
                contrib = (m % 2) * g.degree();
            } else {
                contrib = static_cast<int>(P % 2) * part.degree();
            }
            total += contrib;
        }
    return total;
}

inline int order_at_zero(const QPoly& f) { return f.is_zero() ? -1 : f.order(); }

}  // namespace detail

struct RamificationData {
    QPoly discriminant;
    int finite = 0;
    int infinity = 0;
    int total() const { return finite + infinity; }
};

inline RamificationData ramification(const TrigonalModel& m) {
    RamificationData out;
    out.discriminant = model_discriminant(m);
    if (out.discriminant.is_zero()) throw std::runtime_error("fibre polynomial is not squarefree over Q(t)");
    for (auto& [s, mult] : squarefree_decomposition(out.discriminant)) out.finite += detail::local_ramification(m.a, m.n, s, mult);
    std::vector<QPoly> b = detail::model_at_infinity(m);
    TrigonalModel mi = make_model(b);
    QPoly di = model_discriminant(mi);
    int ord = detail::order_at_zero(di);
    if (ord > 0) out.infinity = detail::local_ramification(b, m.n, QPoly::x(), ord);
    return out;
}

// Riemann-Hurwitz for the degree-n map t
inline int geometric_genus(const TrigonalModel& m) {
    int r = ramification(m).total();
    int twice = -2 * m.n + r + 2;
    if (twice % 2) throw std::runtime_error("odd ramification total; model analysis failed");
    return twice / 2;
}

struct TotallyRamified {
    std::vector<Rat> finite;
    QPoly irrational;   // monic product of the non-rational triple-root loci
    bool infinity = false;
};

inline TotallyRamified totally_ramified_fibres(const TrigonalModel& m) {
    if (m.n != 3) throw std::domain_error("totally_ramified_fibres expects a cubic model");
    TotallyRamified out;
    QPoly p, q;
    detail::depressed(m.a, p, q);
    QPoly g = detail::gcd0(p, q);
    if (g.is_zero()) throw std::runtime_error("every fibre has a triple root");
    out.irrational = g;
    for (const Rat& r : rational_roots(g)) {
        out.finite.push_back(r);
        QPoly lin(std::vector<Rat>{Rat(-r), Rat(1)});
        while (divmod(out.irrational, lin).second.is_zero()) out.irrational = divmod(out.irrational, lin).first;
    }
    auto b = detail::model_at_infinity(m);
    QPoly pi, qi;
    detail::depressed(b, pi, qi);
    out.infinity = sgn(pi.coeff(0)) == 0 && sgn(qi.coeff(0)) == 0;
    return out;
}

struct BranchCurveData {
    TriForm F;
    WeightedModel weighted;
    TrigonalModel model;
};

inline BranchCurveData build_branch_curve(const DelPezzoData& d) {
    BranchCurveData out;
    out.F = jacobian_determinant(d.u, d.v, d.w);
    for (auto& p : d.points)
        if (!has_triple_point(out.F, p)) throw std::runtime_error("plane model lacks a triple point at " + to_string(p));
    out.weighted = weighted_model_coefficients(d.u, d.v, d.w, out.F);
    out.model = trigonal_affine_model(out.weighted);
    out.model.singular_plane_model = out.F;
    return out;
}

}  // namespace dpcl
