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
#include <functional>
#include <optional>
#include <sstream>

#include "number_field.hpp"
#include "roots.hpp"
#include "triform.hpp"

namespace dpcl {

template <class T>
struct ProjPoint {
    std::array<T, 3> c{T(0), T(0), T(1)};

    ProjPoint() = default;
    ProjPoint(const T& x, const T& y, const T& z) : c{x, y, z} {}

    int last_nonzero() const {
        for (int k = 2; k >= 0; --k)
            if (!is_zero(c[k])) return k;
        throw std::domain_error("projective point with all coordinates zero");
    }
    ProjPoint canonical() const {
        int k = last_nonzero();
        T inv = T(1) / c[k];
        return ProjPoint(c[0] * inv, c[1] * inv, c[2] * inv);
    }
    friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                T m = a.c[i] * b.c[j] - a.c[j] * b.c[i];
                if (!is_zero(m)) return false;
            }
        return true;
    }
};

using QPoint = ProjPoint<Rat>;

template <class T>
std::string to_string(const ProjPoint<T>& p) {
    ProjPoint<T> q = p.canonical();
    return "(" + to_string(q.c[0]) + " : " + to_string(q.c[1]) + " : " + to_string(q.c[2]) + ")";
}

// coprime integer coordinates
inline std::array<Int, 3> integral_coordinates(const QPoint& p) {
    Int l = 1, g = 0;
    for (auto& a : p.c) l = lcm(l, Int(a.get_den()));
    std::array<Int, 3> r;
    for (int k = 0; k < 3; ++k) {
        r[k] = Int(p.c[k] * l);
        g = gcd(g, r[k]);
    }
    if (g == 0) throw std::domain_error("projective point with all coordinates zero");
    for (auto& a : r) a /= g;
    return r;
}

// values of all degree-d monomials at p, in the fixed order
template <class T>
std::vector<T> monomial_row(const ProjPoint<T>& p, int d) {
    std::vector<T> out;
    std::array<std::vector<T>, 3> pw;
    for (int k = 0; k < 3; ++k) {
        pw[k].push_back(T(1));
        for (int i = 1; i <= d; ++i) pw[k].push_back(pw[k].back() * p.c[k]);
    }
    for (auto& e : TriForm::monomials(d)) out.push_back(pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]);
    return out;
}

// values of the partial derivative in variable v of all degree-d monomials at p
template <class T>
std::vector<T> monomial_partial_row(const ProjPoint<T>& p, int d, int v) {
    std::vector<T> out;
    std::array<std::vector<T>, 3> pw;
    for (int k = 0; k < 3; ++k) {
        pw[k].push_back(T(1));
        for (int i = 1; i <= d; ++i) pw[k].push_back(pw[k].back() * p.c[k]);
    }
    for (auto e : TriForm::monomials(d)) {
        if (e[v] == 0) {
            out.push_back(T(0));
            continue;
        }
        int m = e[v];
        e[v] -= 1;
        out.push_back(T(m) * pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]);
    }
    return out;
}

enum class Violation { None, Coincident, Collinear, Conic, SingularCubic };

inline const char* violation_name(Violation v) {
    switch (v) {
        case Violation::None: return "none";
        case Violation::Coincident: return "coincident points";
        case Violation::Collinear: return "collinear";
        case Violation::Conic: return "six on a conic";
        case Violation::SingularCubic: return "singular through-cubic";
    }
    return "?";
}

template <class T>
struct GeneralPositionVerdict {
    bool pass = true;
    Violation kind = Violation::None;
    std::vector<int> witness;         // 0-based point indices
    std::vector<T> cubic;             // for SingularCubic: the offending cubic's coefficients

    std::string describe() const {
        if (pass) return "PASS";
        std::ostringstream os;
        os << "FAIL " << violation_name(kind) << " {";
        for (size_t k = 0; k < witness.size(); ++k) os << (k ? "," : "") << witness[k];
        os << "}";
        return os.str();
    }
};

namespace detail {

template <class T>
void combinations(int n, int k, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (!visit(idx)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

// cubic through all points singular at point i: the 10x10 system of 8 evaluations and two partials at P_i
template <class T>
Matrix<T> singular_cubic_system(const std::vector<ProjPoint<T>>& pts, size_t i) {
    Matrix<T> m;
    for (auto& p : pts) m.push_back(monomial_row(p, 3));
    int chart = pts[i].last_nonzero();
    for (int v = 0; v < 3; ++v)
        if (v != chart) m.push_back(monomial_partial_row(pts[i], 3, v));
    return m;
}

template <class T>
Matrix<T> conic_system(const std::vector<ProjPoint<T>>& pts, const std::vector<int>& idx) {
    Matrix<T> m;
    for (int k : idx) m.push_back(monomial_row(pts[k], 2));
    return m;
}

// conditions checked in order: coincidence, collinearity, six on a conic, singular through-cubic
template <class T>
GeneralPositionVerdict<T> check_general_position(const std::vector<ProjPoint<T>>& pts) {
    GeneralPositionVerdict<T> out;
    int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pts[i] == pts[j]) {
                out.pass = false;
                out.kind = Violation::Coincident;
                out.witness = {i, j};
                return out;
            }
    auto fail_on = [&](Violation kind, int k, auto make) {
        detail::combinations<T>(n, k, [&](const std::vector<int>& idx) {
            if (is_zero(determinant(make(idx)))) {
                out.pass = false;
                out.kind = kind;
                out.witness = idx;
                return false;
            }
            return true;
        });
        return !out.pass;
    };
    if (fail_on(Violation::Collinear, 3, [&](const std::vector<int>& idx) {
            Matrix<T> m;
            for (int k : idx) m.push_back({pts[k].c[0], pts[k].c[1], pts[k].c[2]});
            return m;
        }))
        return out;
    if (n >= 6 && fail_on(Violation::Conic, 6, [&](const std::vector<int>& idx) { return conic_system(pts, idx); })) return out;
    if (n == 8) {
        for (int i = 0; i < n; ++i) {
            Matrix<T> m = singular_cubic_system(pts, static_cast<size_t>(i));
            auto ker = kernel_basis(m, 10);
            if (!ker.empty()) {
                out.pass = false;
                out.kind = Violation::SingularCubic;
                out.witness = {i};
                out.cubic = ker.front();
                return out;
            }
        }
    }
    return out;
}

inline TriForm cubic_from(const std::vector<Rat>& v) { return TriForm::from_coeffs(3, v); }

// reduced echelon basis of the cubics through the points
inline std::vector<TriForm> anticanonical_cubics(const std::vector<QPoint>& pts) {
    Matrix<Rat> m;
    for (auto& p : pts) m.push_back(monomial_row(p, 3));
    auto ker = kernel_basis(m, 10);
    if (ker.size() != 2) throw std::runtime_error("anticanonical system has dimension " + std::to_string(ker.size()) + ", expected 2 (general position violated)");
    return {cubic_from(ker[0]), cubic_from(ker[1])};
}

// sextics singular at all points
inline std::vector<std::vector<Rat>> double_point_sextics(const std::vector<QPoint>& pts) {
    Matrix<Rat> m;
    for (auto& p : pts)
        for (int v = 0; v < 3; ++v) m.push_back(monomial_partial_row(p, 6, v));
    return kernel_basis(m, 28);
}

inline TriForm bianticanonical_sextic(const std::vector<QPoint>& pts, const TriForm& u, const TriForm& v) {
    auto ker = double_point_sextics(pts);
    if (ker.size() != 4) throw std::runtime_error("bianticanonical system has dimension " + std::to_string(ker.size()) + ", expected 4");
    Matrix<Rat> e{(u * u).coeffs(), (u * v).coeffs(), (v * v).coeffs()};
    auto piv = rref(e);
    if (piv.size() != 3) throw std::runtime_error("u^2, uv, v^2 are dependent");
    Matrix<Rat> red;
    for (auto k : ker) {
        for (size_t r = 0; r < piv.size(); ++r) {
            Rat f = k[piv[r]];
            if (sgn(f) == 0) continue;
            for (size_t j = 0; j < k.size(); ++j) k[j] -= f * e[r][j];
        }
        red.push_back(k);
    }
    auto rp = rref(red);
    if (rp.size() != 1) throw std::runtime_error("sextic completion is not unique modulo span{u^2,uv,v^2}");
    return TriForm::from_coeffs(6, red[0]);
}

// f(M (x,y,z)^T)
inline TriForm substitute_linear(const TriForm& f, const std::array<std::array<Rat, 3>, 3>& m) {
    std::array<TriForm, 3> lin;
    for (int r = 0; r < 3; ++r) {
        lin[r] = TriForm(1);
        for (int k = 0; k < 3; ++k) lin[r] += m[r][k] * TriForm::var(k);
    }
    std::array<std::vector<TriForm>, 3> pw;
    for (int r = 0; r < 3; ++r) {
        pw[r].push_back(TriForm::constant(Rat(1)));
        for (int i = 1; i <= f.degree(); ++i) pw[r].push_back(pw[r].back() * lin[r]);
    }
    TriForm out(f.degree());
    for (auto& [e, c] : f.terms()) out += c * (pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]);
    return out;
}

// f(x, y, 1) as a polynomial in y over Q[x]
inline UniPoly<UniPoly<Rat>> dehomogenize_y(const TriForm& f) {
    std::vector<UniPoly<Rat>> c;
    for (auto& [e, a] : f.terms()) {
        if (static_cast<int>(c.size()) <= e[1]) c.resize(static_cast<size_t>(e[1]) + 1);
        c[e[1]] += UniPoly<Rat>::monomial(a, e[0]);
    }
    return UniPoly<UniPoly<Rat>>(std::move(c));
}

// f(x0, y, 1) as a polynomial in y
inline UniPoly<Rat> restrict_x(const TriForm& f, const Rat& x0) {
    std::vector<Rat> c;
    for (auto& [e, a] : f.terms()) {
        if (static_cast<int>(c.size()) <= e[1]) c.resize(static_cast<size_t>(e[1]) + 1, Rat(0));
        c[e[1]] += a * rpow(x0, e[0]);
    }
    return UniPoly<Rat>(std::move(c));
}

// rational common zeros of a set of forms (finite set expected)
inline std::vector<QPoint> rational_common_zeros(const std::vector<TriForm>& forms) {
    std::vector<QPoint> out;
    std::vector<TriForm> fs;
    for (auto& f : forms)
        if (!f.is_zero()) fs.push_back(f);
    if (fs.empty()) throw std::domain_error("common zeros of zero forms");
    // affine chart z = 1
    UniPoly<Rat> r;
    std::vector<UniPoly<UniPoly<Rat>>> ys;
    for (auto& f : fs) ys.push_back(dehomogenize_y(f));
    bool have_y = false;
    for (size_t i = 0; i < ys.size(); ++i) {
        if (ys[i].degree() < 1) {
            UniPoly<Rat> c0 = ys[i].is_zero() ? UniPoly<Rat>() : ys[i].c[0];
            r = r.is_zero() ? c0 : gcd(r, c0);
            continue;
        }
        for (size_t j = i + 1; j < ys.size(); ++j) {
            if (ys[j].degree() < 1) continue;
            UniPoly<Rat> res = resultant(ys[i], ys[j]);
            if (res.is_zero()) continue;
            r = r.is_zero() ? res : gcd(r, res);
            have_y = true;
        }
    }
    if (r.is_zero()) {
        if (!have_y && ys.size() == 1 && ys[0].degree() >= 1) throw std::runtime_error("common zero locus is not finite");
        if (!have_y) throw std::runtime_error("common zero locus is not finite");
        throw std::runtime_error("common zero locus is not finite");
    }
    for (const Rat& x0 : rational_roots(r)) {
        UniPoly<Rat> g;
        for (auto& f : fs) {
            UniPoly<Rat> h = restrict_x(f, x0);
            g = g.is_zero() ? h : (h.is_zero() ? g : gcd(g, h));
        }
        if (g.is_zero()) throw std::runtime_error("common zero locus is not finite");
        for (const Rat& y0 : rational_roots(g)) out.emplace_back(x0, y0, Rat(1));
    }
    // line at infinity: (x : 1 : 0) and (1 : 0 : 0)
    UniPoly<Rat> g;
    for (auto& f : fs) {
        std::vector<Rat> c;
        for (auto& [e, a] : f.terms()) {
            if (e[2]) continue;
            if (static_cast<int>(c.size()) <= e[0]) c.resize(static_cast<size_t>(e[0]) + 1, Rat(0));
            c[e[0]] += a;
        }
        UniPoly<Rat> h(std::move(c));
        g = g.is_zero() ? h : (h.is_zero() ? g : gcd(g, h));
    }
    if (g.is_zero()) throw std::runtime_error("common zero locus contains the line at infinity");
    for (const Rat& x0 : rational_roots(g)) out.emplace_back(x0, Rat(1), Rat(0));
    bool at_x = true;
    for (auto& f : fs) at_x = at_x && sgn(f.coeff({f.degree(), 0, 0})) == 0;
    if (at_x) out.emplace_back(Rat(1), Rat(0), Rat(0));
    return out;
}

enum class SingularityType { Node, Cusp, Worse };

inline const char* singularity_name(SingularityType t) {
    switch (t) {
        case SingularityType::Node: return "node";
        case SingularityType::Cusp: return "cusp";
        case SingularityType::Worse: return "worse";
    }
    return "?";
}

struct SingularMember {
    Rat lambda, mu;                       // member lambda u + mu v
    int multiplicity = 1;                 // as a root of the pencil discriminant
    std::optional<QPoint> point;
    SingularityType type = SingularityType::Worse;
};

struct PencilSingularities {
    UniPoly<Rat> discriminant;            // in s for u + s v, degree 12 unless v is singular
    std::vector<SingularMember> rational;
    UniPoly<Rat> irrational_part;         // product of the remaining factors
};

// classification of an isolated singular point of a plane cubic
inline SingularityType classify_singularity(const TriForm& g, const QPoint& p) {
    Matrix<Rat> h(3, std::vector<Rat>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[i][j] = g.partial(i).partial(j).eval(p.c);
    Matrix<Rat> hc = h;
    size_t r = rank(hc);
    if (r == 2) return SingularityType::Node;
    if (r != 1) return SingularityType::Worse;
    // tangent cone is the double line l = 0; a cusp needs l not to be a component
    std::array<Rat, 3> l{};
    for (int i = 0; i < 3; ++i)
        if (sgn(h[i][0]) || sgn(h[i][1]) || sgn(h[i][2])) {
            l = {h[i][0], h[i][1], h[i][2]};
            break;
        }
    // two points spanning the line
    std::array<std::array<Rat, 3>, 2> q;
    Matrix<Rat> lm{{l[0], l[1], l[2]}};
    auto ker = kernel_basis(lm, 3);
    q[0] = {ker[0][0], ker[0][1], ker[0][2]};
    q[1] = {ker[1][0], ker[1][1], ker[1][2]};
    bool component = true;
    for (int s = 0; s < 5 && component; ++s) {
        Rat a(s), b(1);
        component = sgn(g.eval(Rat(q[0][0] + a * q[1][0]), Rat(q[0][1] + a * q[1][1]), Rat(q[0][2] + a * q[1][2]))) == 0;
        (void)b;
    }
    return component ? SingularityType::Worse : SingularityType::Cusp;
}

// 6x6 determinant of the partials of g and of its Hessian determinant; zero iff g is singular
inline Rat cubic_singularity_discriminant(const TriForm& g) {
    TriForm q[3] = {g.partial(0), g.partial(1), g.partial(2)};
    TriForm hess = TriForm(3);
    TriForm m[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = q[i].partial(j);
    hess = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    Matrix<Rat> a;
    for (auto& f : q) a.push_back(TriForm::from_coeffs(2, f.coeffs()).coeffs());
    for (int k = 0; k < 3; ++k) {
        TriForm d = hess.partial(k);
        a.push_back(d.is_zero() ? std::vector<Rat>(6, Rat(0)) : d.coeffs());
    }
    return determinant(a);
}

// polynomial through (x_k, y_k)
inline UniPoly<Rat> interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    UniPoly<Rat> out;
    for (size_t i = 0; i < xs.size(); ++i) {
        UniPoly<Rat> term(ys[i]);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            term = term * UniPoly<Rat>(std::vector<Rat>{Rat(-xs[j]), Rat(1)}).scaled(Rat(1) / (xs[i] - xs[j]));
        }
        out += term;
    }
    return out;
}

inline PencilSingularities pencil_singular_members(const TriForm& u, const TriForm& v) {
    PencilSingularities out;
    std::vector<Rat> xs, ys;
    for (int s = 0; s <= 12; ++s) {
        xs.emplace_back(s);
        ys.push_back(cubic_singularity_discriminant(u + Rat(s) * v));
    }
    out.discriminant = interpolate(xs, ys);
    if (out.discriminant.is_zero()) throw std::runtime_error("every member of the pencil is singular");
    auto analyse = [&](const Rat& lambda, const Rat& mu, int mult) {
        SingularMember m;
        m.lambda = lambda;
        m.mu = mu;
        m.multiplicity = mult;
        TriForm g = lambda * u + mu * v;
        try {
            auto pts = rational_common_zeros({g.partial(0), g.partial(1), g.partial(2)});
            if (pts.size() == 1) {
                m.point = pts[0].canonical();
                m.type = classify_singularity(g, *m.point);
            }
        } catch (const std::runtime_error&) {
            m.type = SingularityType::Worse;
        }
        out.rational.push_back(m);
    };
    UniPoly<Rat> rest = monic(out.discriminant);
    for (auto& [f, mult] : squarefree_decomposition(out.discriminant)) {
        for (const Rat& s : rational_roots(f)) {
            analyse(Rat(1), s, mult);
            rest = divmod(rest, UniPoly<Rat>(std::vector<Rat>{Rat(-s), Rat(1)}).pow(static_cast<unsigned>(mult))).first;
        }
    }
    if (out.discriminant.degree() < 12) analyse(Rat(0), Rat(1), 12 - out.discriminant.degree());
    out.irrational_part = rest;
    return out;
}

// the ninth base point of the pencil spanned by u and v
inline QPoint ninth_base_point(const TriForm& u, const TriForm& v, const std::vector<QPoint>& known) {
    static const std::array<std::array<std::array<Rat, 3>, 3>, 5> moves = {{
        {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}},
        {{{1, 2, 0}, {0, 1, 0}, {3, 5, 1}}},
        {{{1, 0, 7}, {-3, 1, 0}, {2, -1, 1}}},
        {{{2, 1, 0}, {1, 1, 5}, {-4, 3, 1}}},
        {{{1, 11, 3}, {0, 1, -13}, {17, 2, 1}}},
    }};
    for (auto& m : moves) {
        // inverse image of the known points under p -> M p
        Matrix<Rat> mm{{m[0][0], m[0][1], m[0][2]}, {m[1][0], m[1][1], m[1][2]}, {m[2][0], m[2][1], m[2][2]}};
        std::vector<QPoint> kn;
        bool ok = true;
        for (auto& p : known) {
            auto sol = solve_linear_system(mm, std::vector<Rat>{p.c[0], p.c[1], p.c[2]});
            QPoint q(sol.particular[0], sol.particular[1], sol.particular[2]);
            if (sgn(q.c[2]) == 0) { ok = false; break; }
            kn.push_back(q.canonical());
        }
        if (!ok) continue;
        TriForm us = substitute_linear(u, m), vs = substitute_linear(v, m);
        auto uy = dehomogenize_y(us), vy = dehomogenize_y(vs);
        if (uy.degree() < 1 || vy.degree() < 1) continue;
        UniPoly<Rat> res = resultant(uy, vy);
        if (res.is_zero()) throw std::runtime_error("degenerate pencil: u and v share a component");
        if (res.degree() != 9) continue;
        UniPoly<Rat> rest = res;
        for (auto& p : kn) {
            auto [q, r] = divmod(rest, UniPoly<Rat>(std::vector<Rat>{Rat(-p.c[0]), Rat(1)}));
            if (!r.is_zero()) { ok = false; break; }
            rest = q;
        }
        if (!ok || rest.degree() != 1) continue;
        Rat x0 = -rest.c[0] / rest.c[1];
        UniPoly<Rat> g = gcd(restrict_x(us, x0), restrict_x(vs, x0));
        for (auto& p : kn)
            if (p.c[0] == x0) {
                auto [q, r] = divmod(g, UniPoly<Rat>(std::vector<Rat>{Rat(-p.c[1]), Rat(1)}));
                if (r.is_zero()) g = q;
            }
        if (g.degree() != 1) continue;
        Rat y0 = -g.c[0] / g.c[1];
        QPoint o(x0, y0, Rat(1));
        for (auto& p : kn)
            if (p == o) throw std::runtime_error("degenerate pencil: base locus is not 9 distinct points");
        QPoint back(m[0][0] * x0 + m[0][1] * y0 + m[0][2], m[1][0] * x0 + m[1][1] * y0 + m[1][2], m[2][0] * x0 + m[2][1] * y0 + m[2][2]);
        return back.canonical();
    }
    throw std::runtime_error("degenerate pencil: base locus is not 9 distinct points");
}

struct DelPezzoData {
    std::vector<QPoint> points;
    TriForm u, v, w;
    QPoint base_point_O;
    std::vector<TriForm> cubic_basis;
};

// u given: validated and completed; otherwise the rational cuspidal member of least height
inline DelPezzoData build_delpezzo(const std::vector<QPoint>& pts, const std::optional<TriForm>& explicit_u) {
    if (pts.size() != 8) throw std::invalid_argument("expected 8 points");
    auto gp = check_general_position(pts);
    if (!gp.pass) throw std::runtime_error("points not in general position: " + gp.describe());
    DelPezzoData d;
    d.points = pts;
    d.cubic_basis = anticanonical_cubics(pts);
    TriForm u;
    if (explicit_u) {
        u = *explicit_u;
        if (u.degree() != 3) throw std::invalid_argument("u must be a cubic form");
        for (auto& p : pts)
            if (sgn(u.eval(p.c)) != 0) throw std::runtime_error("u does not vanish at " + to_string(p));
    } else {
        auto sing = pencil_singular_members(d.cubic_basis[0], d.cubic_basis[1]);
        std::optional<SingularMember> best;
        Int best_h;
        for (auto& m : sing.rational) {
            if (m.type != SingularityType::Cusp) continue;
            Rat ratio = sgn(m.lambda) ? m.mu / m.lambda : Rat(0);
            Int h = sgn(m.lambda) ? std::max(Int(abs(ratio.get_num())), Int(ratio.get_den())) : Int(1);
            if (!best || h < best_h) { best = m; best_h = h; }
        }
        if (!best) throw std::runtime_error("no rational cuspidal member in the anticanonical pencil");
        u = (best->lambda * d.cubic_basis[0] + best->mu * d.cubic_basis[1]).normalized();
    }
    // v: first echelon basis vector independent of u
    for (auto& b : d.cubic_basis) {
        Matrix<Rat> m{u.coeffs(), b.coeffs()};
        if (rank(m) == 2) { d.v = b; break; }
    }
    d.u = u;
    auto sing_u = rational_common_zeros({u.partial(0), u.partial(1), u.partial(2)});
    if (sing_u.size() != 1 || classify_singularity(u, sing_u[0]) != SingularityType::Cusp)
        throw std::runtime_error("u is not a cuspidal cubic");
    d.w = bianticanonical_sextic(pts, d.u, d.v);
    d.base_point_O = ninth_base_point(d.u, d.v, pts);
    QPoint cusp = sing_u[0];
    for (auto& p : pts)
        if (p == cusp) throw std::runtime_error("cusp of u lies in the base locus");
    if (cusp == d.base_point_O) throw std::runtime_error("cusp of u is the ninth base point");
    return d;
}

}  // namespace dpcl
