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

#include "branchcurve.hpp"
#include "parallel.hpp"

namespace dpcl {

using KPoly = UniPoly<NumberFieldElem>;

// one Galois orbit of branches: Y = slope X + ... over the stem field of the slope
struct BranchOrbit {
    FieldPtr field;
    NumberFieldElem slope;
    KPoly y_series;                      // Y(s) with X = s
    std::optional<NumberFieldElem> t_image, w_image;
    int degree() const { return field ? field->degree() : 1; }
};

struct BranchExpansion {
    QPoint center;
    int chart = 2;
    Rat shear = 0;                       // local X replaced by X + shear * Y
    int precision = 0;
    BiPoly<Rat> local;                   // F in sheared local coordinates
    std::vector<BranchOrbit> orbits;
    int branch_count() const {
        int n = 0;
        for (auto& o : orbits) n += o.degree();
        return n;
    }
};

inline BiPoly<Rat> local_sheared(const TriForm& f, const QPoint& p, int chart, const Rat& c) {
    BiPoly<Rat> l = local_expansion(f, p.canonical().c, chart);
    return sgn(c) == 0 ? l : shear(l, c);
}

inline KPoly to_kpoly(const UniPoly<Rat>& p) {
    std::vector<NumberFieldElem> c;
    for (auto& a : p.c) c.emplace_back(a);
    return KPoly(std::move(c));
}

namespace detail {

inline KPoly mul_trunc(const KPoly& a, const KPoly& b, int n) {
    int da = std::min(a.degree(), n - 1), db = std::min(b.degree(), n - 1);
    if (da < 0 || db < 0) return KPoly();
    FieldPtr k;
    for (auto* p : {&a, &b})
        for (auto& e : p->c)
            if (e.field()) k = e.field();
    // products summed before one reduction per coefficient
    std::vector<QPoly> acc(static_cast<size_t>(std::min(da + db, n - 1)) + 1);
    std::vector<QPoly> pa, pb;
    for (int i = 0; i <= da; ++i) pa.push_back(a.c[i].as_poly());
    for (int j = 0; j <= db; ++j) pb.push_back(b.c[j].as_poly());
    for (int i = 0; i <= da; ++i) {
        if (pa[i].is_zero()) continue;
        for (int j = 0; j <= db && i + j < n; ++j)
            if (!pb[j].is_zero()) acc[i + j] += pa[i] * pb[j];
    }
    std::vector<NumberFieldElem> c;
    for (auto& q : acc) c.push_back(k ? NumberFieldElem(k, q) : NumberFieldElem(q.coeff(0)));
    return KPoly(std::move(c));
}

inline KPoly trunc_k(const KPoly& a, int n) {
    if (a.degree() < n) return a;
    return KPoly(std::vector<NumberFieldElem>(a.c.begin(), a.c.begin() + n));
}

// 1/a mod s^n, a(0) != 0
inline KPoly series_inverse(const KPoly& a, int n) {
    NumberFieldElem a0inv = NumberFieldElem(1) / a.coeff(0);
    std::vector<NumberFieldElem> r{a0inv};
    for (int k = 1; k < n; ++k) {
        NumberFieldElem acc(0);
        for (int j = 1; j <= k && j <= a.degree(); ++j) acc = acc + a.c[j] * r[k - j];
        r.push_back(-(acc * a0inv));
    }
    return KPoly(std::move(r));
}

// Y = s Z(s) with G(s, sZ) = s^3 H(s, Z), H(0, m) = 0, H_Z(0, m) != 0; Newton on Z
inline KPoly lift_branch(const BiPoly<Rat>& g, const NumberFieldElem& m, int precision) {
    int dy = 0;
    for (auto& [e, v] : g.terms) dy = std::max(dy, e.second);
    // H = sum_b Z^b P_b(s), P_b = sum_a g_ab s^(a+b-3)
    std::vector<QPoly> pb(static_cast<size_t>(dy) + 1);
    for (auto& [e, v] : g.terms) pb[e.second] += QPoly::monomial(v, e.first + e.second - 3);
    auto eval = [&](const KPoly& z, int n, KPoly& h, KPoly& hz) {
        h = to_kpoly(pb[dy]);
        hz = KPoly();
        for (int b = dy - 1; b >= 0; --b) {
            hz = trunc_k(mul_trunc(hz, z, n) + h, n);
            h = trunc_k(mul_trunc(h, z, n) + to_kpoly(pb[b]), n);
        }
    };
    KPoly z(m);
    int n = 1;
    int target = precision - 1;  // Y has terms s^1 .. s^(precision-1)
    while (n < target) {
        n = std::min(2 * n, target);
        KPoly h, hz;
        eval(z, n, h, hz);
        z = trunc_k(z - mul_trunc(h, series_inverse(hz, n), n), n);
    }
    KPoly h, hz;
    eval(z, target, h, hz);
    if (!h.is_zero()) throw std::runtime_error("branch series does not satisfy F to the stated precision");
    return z * KPoly::x();
}

}  // namespace detail

// the three branches through a triple point of F, one series per Galois orbit
inline BranchExpansion expand_branches(const TriForm& f, const QPoint& p, int precision) {
    if (precision < 2) throw std::invalid_argument("precision must be at least 2");
    BranchExpansion out;
    out.center = p.canonical();
    out.chart = out.center.last_nonzero();
    out.precision = precision;
    BiPoly<Rat> l = local_expansion(f, out.center.c, out.chart);
    if (l.lowest_degree() != 3) throw std::runtime_error("wrong multiplicity: point has multiplicity " + std::to_string(l.lowest_degree()));
    // shear until no tangent is vertical: Y^3 coefficient after X -> X + cY is sum_a coeff(a, 3-a) c^a
    for (int k = 0;; ++k) {
        Rat c(k % 2 ? (k + 1) / 2 : -(k / 2));
        Rat top = 0;
        for (auto& [e, v] : l.terms)
            if (e.first + e.second == 3) top += v * rpow(c, e.first);
        if (sgn(top) != 0) {
            out.shear = c;
            break;
        }
    }
    out.local = sgn(out.shear) == 0 ? l : shear(l, out.shear);
    QPoly cone = out.local.cone(3);
    if (sgn(discriminant(cone)) == 0) throw std::runtime_error("non-ordinary triple point at " + to_string(out.center));
    // orbits: rational slopes, then the remaining irreducible factor
    std::vector<std::pair<FieldPtr, NumberFieldElem>> slopes;
    QPoly rest = monic(cone);
    for (const Rat& r : rational_roots(cone)) {
        slopes.emplace_back(nullptr, NumberFieldElem(r));
        rest = divmod(rest, QPoly(std::vector<Rat>{Rat(-r), Rat(1)})).first;
    }
    if (rest.degree() > 0) {
        FieldPtr k = make_field(rest, "m");
        slopes.emplace_back(k, NumberFieldElem::generator(k));
    }
    for (auto& [k, m] : slopes) {
        BranchOrbit o;
        o.field = k;
        o.slope = m;
        o.y_series = detail::lift_branch(out.local, m, precision);
        out.orbits.push_back(std::move(o));
    }
    if (out.branch_count() != 3) throw std::runtime_error("triple point does not have three branches");
    return out;
}

// leading coefficient of the restriction of a form to a branch, which must vanish to the given order
inline NumberFieldElem branch_coefficient(const TriForm& g, const BranchExpansion& e, const BranchOrbit& o, int order) {
    BiPoly<Rat> l = local_sheared(g, e.center, e.chart, e.shear);
    KPoly s = substitute_series(l, KPoly::x(), o.y_series, order + 1);
    for (int k = 0; k < order; ++k)
        if (!s.coeff(k).is_zero()) throw std::runtime_error("form vanishes to lower order than expected along a branch");
    return s.coeff(order);
}

// t = u/v and w/v^2 at each branch
inline void attach_images(BranchExpansion& e, const TriForm& u, const TriForm& v, const TriForm& w) {
    for (auto& o : e.orbits) {
        NumberFieldElem u1 = branch_coefficient(u, e, o, 1), v1 = branch_coefficient(v, e, o, 1);
        if (u1.is_zero() || v1.is_zero()) throw std::runtime_error("u or v vanishes to order >= 2 along a branch");
        o.t_image = u1 / v1;
        o.w_image = branch_coefficient(w, e, o, 2) / (v1 * v1);
    }
}

// monic cubic whose roots are the t-images of the branches
inline QPoly theta_image_cubic(BranchExpansion& e, const TriForm& u, const TriForm& v) {
    QPoly g(Rat(1));
    for (auto& o : e.orbits) {
        if (!o.t_image) {
            NumberFieldElem u1 = branch_coefficient(u, e, o, 1), v1 = branch_coefficient(v, e, o, 1);
            if (u1.is_zero() || v1.is_zero()) throw std::runtime_error("u or v vanishes to order >= 2 along a branch");
            o.t_image = u1 / v1;
        }
        NumberFieldElem t = *o.t_image;
        if (o.field) t = t + NumberFieldElem(o.field, QPoly());
        g = g * t.charpoly();
    }
    return g;
}

// a point of the curve given by its model coordinates (t, W) over a number field
struct CurvePoint {
    NumberFieldElem t, W;
};

struct ThetaDivisor {
    bool odd = true;
    int index = 0;                 // 1-based for odd thetas
    QPoint center;
    QPoly g;                        // monic image cubic
    std::vector<CurvePoint> orbits; // one representative per Galois orbit
};

struct KummerFunction {
    int index = 0;
    Rat alpha, beta, gamma, delta;  // h = alpha t^2 + beta t + gamma W + delta
    Rat normalization = 1;          // value of the unnormalized h at P0
    Rat square_constant = 0;        // Res_W(model, h) = square_constant * g^2

    WPoly as_wpoly() const {
        return WPoly(std::vector<QPoly>{QPoly(std::vector<Rat>{delta, beta, alpha}), QPoly(gamma)});
    }
    template <class T>
    T operator()(const T& t, const T& w) const {
        return T(alpha) * t * t + T(beta) * t + T(gamma) * w + T(delta);
    }
    KummerFunction normalized() const {
        if (sgn(delta) == 0) throw std::runtime_error("h(P0) = 0");
        KummerFunction k = *this;
        k.alpha /= delta;
        k.beta /= delta;
        k.gamma /= delta;
        k.square_constant /= delta * delta * delta;
        k.normalization = delta * normalization;
        k.delta = 1;
        return k;
    }
};

inline std::string to_string(const KummerFunction& h) {
    std::ostringstream os;
    auto term = [&](const Rat& c, const char* mono, bool first) {
        if (first) os << c.get_str();
        else os << (sgn(c) < 0 ? " - " : " + ") << Rat(abs(c)).get_str();
        os << mono;
    };
    term(h.alpha, "*t^2", true);
    term(h.beta, "*t", false);
    term(h.gamma, "*W", false);
    term(h.delta, "", false);
    return os.str();
}

// Res = c * G^2 with G monic, if Res is a constant times a square
inline std::optional<std::pair<Rat, QPoly>> as_constant_times_square(const QPoly& r) {
    if (r.is_zero()) return std::nullopt;
    QPoly g(Rat(1));
    for (auto& [f, m] : squarefree_decomposition(r)) {
        if (m % 2) return std::nullopt;
        g *= f.pow(static_cast<unsigned>(m / 2));
    }
    Rat c = r.lead();
    if (!((g * g).scaled(c) == r)) return std::nullopt;
    return std::make_pair(c, g);
}

inline ThetaDivisor theta_from_expansion(BranchExpansion& e, const TrigonalModel& model, const TriForm& u, const TriForm& v,
                                         const TriForm& w, int index) {
    if (!model.weighted) throw std::invalid_argument("model lacks weighted provenance");
    attach_images(e, u, v, w);
    ThetaDivisor th;
    th.index = index;
    th.center = e.center;
    th.g = theta_image_cubic(e, u, v);
    Rat c0 = model.weighted->c0;
    for (auto& o : e.orbits) {
        CurvePoint p;
        p.t = *o.t_image - NumberFieldElem(model.base_t);
        p.W = NumberFieldElem(c0) * *o.w_image - NumberFieldElem(model.w_shift);
        th.orbits.push_back(p);
    }
    if (model.base_t != 0) th.g = th.g.compose(QPoly(std::vector<Rat>{model.base_t, Rat(1)}));
    return th;
}

// h in span{1, t, t^2, W} vanishing on the theta divisor; unique up to scalar
inline KummerFunction kummer_function(const TrigonalModel& model, const ThetaDivisor& th) {
    Matrix<Rat> rows;
    for (auto& p : th.orbits) {
        int d = std::max(p.t.degree(), p.W.degree());
        std::vector<NumberFieldElem> basis{p.t * p.t, p.t, p.W, NumberFieldElem(1)};
        for (int k = 0; k < d; ++k) {
            std::vector<Rat> r;
            for (auto& b : basis) r.push_back(b.coord(k));
            rows.push_back(r);
        }
    }
    auto ker = kernel_basis(rows, 4);
    if (ker.size() != 1) throw std::runtime_error("theta data inconsistent: solution space has dimension " + std::to_string(ker.size()));
    KummerFunction h;
    h.index = th.index;
    h.alpha = ker[0][0];
    h.beta = ker[0][1];
    h.gamma = ker[0][2];
    h.delta = ker[0][3];
    QPoly res = resultant_in_W(model.as_wpoly(), h.as_wpoly());
    auto sq = as_constant_times_square(res);
    if (!sq || sq->second != th.g) throw std::runtime_error("theta data inconsistent: Res_W(model, h) is not c * g^2");
    h.square_constant = sq->first;
    if (sgn(h.delta) == 0) throw std::runtime_error("h(P0) = 0");
    return h.normalized();
}

// identity Res_W(model, h) = c g^2 with g of the expected degree
inline bool resultant_square_identity(const TrigonalModel& model, const KummerFunction& h, QPoly* g_out = nullptr, Rat* c_out = nullptr) {
    auto sq = as_constant_times_square(resultant_in_W(model.as_wpoly(), h.as_wpoly()));
    if (!sq) return false;
    if (g_out) *g_out = sq->second;
    if (c_out) *c_out = sq->first;
    return true;
}

// formal sum of points over one field
struct PointDivisor {
    std::vector<std::pair<CurvePoint, int>> terms;
};

inline NumberFieldElem pair(const PointDivisor& d, const KummerFunction& h) {
    NumberFieldElem r(1);
    for (auto& [p, n] : d.terms) {
        NumberFieldElem v = h(p.t, p.W);
        if (v.is_zero()) throw std::runtime_error("support collision: move the representative");
        r = r * v.pow(n);
    }
    return r;
}

// h over the full fibre at t = q: product of h over the roots of the fibre polynomial
inline Rat fibre_norm(const TrigonalModel& model, const KummerFunction& h, const Rat& q) {
    QPoly f = model.fibre(q);
    QPoly hq(std::vector<Rat>{h.alpha * q * q + h.beta * q + h.delta, h.gamma});
    Rat r = resultant(f, hq);
    return r;
}

// product of h over all conjugates of the theta divisor's points
inline Rat theta_norm(const ThetaDivisor& th, const KummerFunction& h) {
    Rat r = 1;
    for (auto& p : th.orbits) {
        NumberFieldElem v = h(p.t, p.W);
        r *= v.norm();
    }
    return r;
}

struct WeilPairing {
    std::vector<std::vector<int>> matrix;
    std::vector<Rat> shifts;
    unsigned seed = 0;
    size_t rank = 0;
};

inline size_t f2_rank(std::vector<std::vector<int>> m) {
    size_t r = 0, cols = m.empty() ? 0 : m[0].size();
    for (size_t c = 0; c < cols && r < m.size(); ++c) {
        size_t sel = m.size();
        for (size_t i = r; i < m.size(); ++i)
            if (m[i][c] & 1) { sel = i; break; }
        if (sel == m.size()) continue;
        std::swap(m[r], m[sel]);
        for (size_t i = 0; i < m.size(); ++i)
            if (i != r && (m[i][c] & 1))
                for (size_t j = 0; j < cols; ++j) m[i][j] ^= m[r][j] & 1;
        ++r;
    }
    return r;
}

// e(T_i, T_j) with representatives Theta_i - F_{q_i}
inline WeilPairing weil_pairing_matrix(const TrigonalModel& model, const std::vector<ThetaDivisor>& th, const std::vector<KummerFunction>& hs,
                                       unsigned seed = 20160701u) {
    size_t n = th.size();
    WeilPairing out;
    out.seed = seed;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-60, 60);
    QPoly disc = model_discriminant(model);
    for (size_t i = 0; i < n; ++i) {
        for (int attempt = 0;; ++attempt) {
            if (attempt > 1000) throw std::runtime_error("could not move the representatives off the supports");
            Rat q(dist(rng));
            bool ok = sgn(disc(q)) != 0;
            for (auto& s : out.shifts) ok = ok && s != q;
            for (size_t j = 0; j < n && ok; ++j) ok = sgn(th[j].g(q)) != 0 && sgn(fibre_norm(model, hs[j], q)) != 0;
            if (ok) {
                out.shifts.push_back(q);
                break;
            }
        }
    }
    // v[i][j] = h_i'(D_j)
    Matrix<Rat> v = zero_matrix<Rat>(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Rat nt = theta_norm(th[j], hs[i]);
            if (sgn(nt) == 0) throw std::runtime_error("support collision between theta divisors");
            Rat gq = th[j].g(out.shifts[i]);
            Rat at_theta = nt / (gq * gq);
            Rat dq = out.shifts[j] - out.shifts[i];
            Rat at_fibre = fibre_norm(model, hs[i], out.shifts[j]) / rpow(dq, 2 * model.n);
            v[i][j] = at_theta / at_fibre;
        }
    out.matrix.assign(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Rat e = v[i][j] / v[j][i];
            if (e == 1) out.matrix[i][j] = 0;
            else if (e == -1) out.matrix[i][j] = 1;
            else throw std::runtime_error("Weil pairing value is not +-1: " + e.get_str());
        }
    out.rank = f2_rank(out.matrix);
    return out;
}

struct TwoTorsionData {
    std::vector<BranchExpansion> expansions;
    std::vector<ThetaDivisor> thetas;
    std::vector<KummerFunction> h;
    WeilPairing weil;
    int precision = 0;
};

namespace detail {

inline bool same_images(const BranchExpansion& a, const BranchExpansion& b) {
    if (a.orbits.size() != b.orbits.size()) return false;
    for (size_t k = 0; k < a.orbits.size(); ++k)
        if (*a.orbits[k].t_image != *b.orbits[k].t_image || *a.orbits[k].w_image != *b.orbits[k].w_image) return false;
    return true;
}

}  // namespace detail

// precision doubles until two consecutive runs give identical branch images
inline TwoTorsionData build_two_torsion(const DelPezzoData& d, const BranchCurveData& bc, int precision = 12, unsigned workers = 1,
                                        unsigned seed = 20160701u) {
    TwoTorsionData out;
    struct Item {
        BranchExpansion e;
        ThetaDivisor th;
        KummerFunction h;
        int precision = 0;
    };
    auto items = parallel_map<Item>(d.points.size(), [&](size_t i) {
        Item it;
        int prec = precision;
        BranchExpansion e = expand_branches(bc.F, d.points[i], prec);
        attach_images(e, d.u, d.v, d.w);
        for (;;) {
            BranchExpansion e2 = expand_branches(bc.F, d.points[i], 2 * prec);
            attach_images(e2, d.u, d.v, d.w);
            if (detail::same_images(e, e2)) break;
            prec *= 2;
            e = e2;
            if (prec > 256) throw std::runtime_error("branch images do not stabilise");
        }
        it.th = theta_from_expansion(e, bc.model, d.u, d.v, d.w, static_cast<int>(i) + 1);
        it.h = kummer_function(bc.model, it.th);
        it.e = std::move(e);
        it.precision = prec;
        return it;
    }, workers);
    for (auto& it : items) {
        out.expansions.push_back(it.e);
        out.thetas.push_back(it.th);
        out.h.push_back(it.h);
        out.precision = std::max(out.precision, it.precision);
    }
    for (size_t i = 0; i < out.thetas.size(); ++i)
        for (size_t j = i + 1; j < out.thetas.size(); ++j)
            if (out.thetas[i].g == out.thetas[j].g) throw std::runtime_error("two theta divisors share their image cubic");
    out.weil = weil_pairing_matrix(bc.model, out.thetas, out.h, seed);
    return out;
}

}  // namespace dpcl
