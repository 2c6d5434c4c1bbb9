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

#include "support.hpp"

namespace dpcl::testing {

struct Mutation {
    std::string name;
    std::vector<QPoint> points;
    Violation planted;
    std::vector<int> planted_witness;   // sorted indices
};

namespace detail {

// f(P + s d) = B s^k + C s^(k+1) for k = order of vanishing at P; returns s = -B/C
inline std::optional<QPoint> second_point(const TriForm& f, const QPoint& p, const Rat& slope, int k) {
    auto at = [&](const Rat& s) {
        std::array<Rat, 3> q{p.c[0] + s, p.c[1] + s * slope, p.c[2]};
        return f.eval(q);
    };
    Rat g1 = at(Rat(1)), g2 = at(Rat(2));
    Rat scale = rpow(Rat(2), k);
    Rat C = (g2 - scale * g1) / (2 * scale - scale), B = g1 - C;
    if (sgn(C) == 0) return std::nullopt;
    Rat s = -B / C;
    if (sgn(s) == 0) return std::nullopt;
    return QPoint(p.c[0] + s, p.c[1] + s * slope, p.c[2]);
}

inline TriForm conic_through(const std::vector<QPoint>& five) {
    Matrix<Rat> m;
    for (auto& p : five) m.push_back(monomial_row(p, 2));
    auto ker = kernel_basis(m, 6);
    if (ker.size() != 1) throw std::runtime_error("five points do not determine a conic");
    return TriForm::from_coeffs(2, ker[0]);
}

// cubic through seven points, singular at the first
inline TriForm singular_cubic_through(const std::vector<QPoint>& seven) {
    Matrix<Rat> m;
    for (auto& p : seven) m.push_back(monomial_row(p, 3));
    for (int v = 0; v < 3; ++v) m.push_back(monomial_partial_row(seven[0], 3, v));
    auto ker = kernel_basis(m, 10);
    if (ker.size() != 1) throw std::runtime_error("no unique singular cubic");
    return TriForm::from_coeffs(3, ker[0]);
}

}  // namespace detail

// planted violations built from the example configuration; each is retried until the
// checker's first failing condition is the planted one
inline std::vector<Mutation> planted_violations() {
    auto base = example_points();
    std::vector<Mutation> out;
    auto accept = [&](const std::string& name, std::vector<QPoint> pts, Violation kind, std::vector<int> wit) {
        auto v = check_general_position(pts);
        if (v.pass || v.kind != kind) return false;
        std::sort(wit.begin(), wit.end());
        out.push_back({name, std::move(pts), kind, std::move(wit)});
        return true;
    };
    // collinear: replace point r by a point on the line through a, b
    std::vector<std::array<int, 3>> lines = {{0, 1, 7}, {1, 2, 0}, {2, 3, 4}, {3, 4, 5}, {4, 5, 6}, {5, 6, 7}, {6, 0, 3}};
    for (auto [a, b, r] : lines) {
        for (long k = 2; k < 40; ++k) {
            auto pts = base;
            QPoint pa = base[a].canonical(), pb = base[b].canonical();
            pts[r] = QPoint(pa.c[0] + Rat(k) * (pb.c[0] - pa.c[0]), pa.c[1] + Rat(k) * (pb.c[1] - pa.c[1]), Rat(1));
            if (accept("collinear " + std::to_string(a) + "," + std::to_string(b) + " moves " + std::to_string(r), pts, Violation::Collinear, {a, b, r})) break;
        }
    }
    // six on a conic: replace point r by a point on the conic through five others
    std::vector<std::pair<std::array<int, 5>, int>> conics = {{{0, 1, 2, 3, 4}, 5}, {{1, 2, 3, 4, 5}, 6}, {{2, 3, 4, 5, 6}, 7},
                                                              {{3, 4, 5, 6, 7}, 0}, {{0, 2, 4, 6, 7}, 1}, {{0, 1, 3, 5, 7}, 2},
                                                              {{1, 3, 5, 6, 7}, 4}};
    for (auto& [five, r] : conics) {
        std::vector<QPoint> fp;
        for (int i : five) fp.push_back(base[i]);
        TriForm q = detail::conic_through(fp);
        for (long m = 1; m < 60; ++m) {
            auto np = detail::second_point(q, fp[0].canonical(), make_rat(Int(m), Int(7)), 1);
            if (!np) continue;
            auto pts = base;
            pts[r] = *np;
            std::vector<int> wit(five.begin(), five.end());
            wit.push_back(r);
            if (accept("conic moves " + std::to_string(r), pts, Violation::Conic, wit)) break;
        }
    }
    // singular through-cubic: replace point r by a point on the cubic through the other seven, singular at s
    std::vector<std::pair<int, int>> sing = {{0, 7}, {1, 6}, {2, 5}, {3, 7}, {4, 0}, {5, 1}};
    for (auto [s, r] : sing) {
        std::vector<QPoint> seven{base[s]};
        for (int i = 0; i < 8; ++i)
            if (i != s && i != r) seven.push_back(base[i]);
        TriForm c = detail::singular_cubic_through(seven);
        for (long m = 1; m < 200; ++m) {
            auto np = detail::second_point(c, base[s].canonical(), make_rat(Int(m), Int(5)), 2);
            if (!np) continue;
            auto pts = base;
            pts[r] = *np;
            if (accept("singular cubic at " + std::to_string(s) + " moves " + std::to_string(r), pts, Violation::SingularCubic, {s})) break;
        }
    }
    return out;
}

// independent check of a failure witness
inline bool witness_is_valid(const std::vector<QPoint>& pts, const GeneralPositionVerdict<Rat>& v) {
    if (v.pass) return false;
    switch (v.kind) {
        case Violation::Coincident:
            return v.witness.size() == 2 && pts[v.witness[0]] == pts[v.witness[1]];
        case Violation::Collinear: {
            if (v.witness.size() != 3) return false;
            Matrix<Rat> m;
            for (int i : v.witness) m.push_back({pts[i].c[0], pts[i].c[1], pts[i].c[2]});
            return sgn(determinant(m)) == 0;
        }
        case Violation::Conic: {
            if (v.witness.size() != 6) return false;
            Matrix<Rat> m;
            for (int i : v.witness) m.push_back(monomial_row(pts[i], 2));
            return sgn(determinant(m)) == 0;
        }
        case Violation::SingularCubic: {
            if (v.witness.size() != 1 || v.cubic.size() != 10) return false;
            TriForm c = TriForm::from_coeffs(3, v.cubic);
            if (c.is_zero()) return false;
            for (auto& p : pts)
                if (sgn(c.eval(p.c)) != 0) return false;
            for (int k = 0; k < 3; ++k)
                if (sgn(c.partial(k).eval(pts[v.witness[0]].c)) != 0) return false;
            return true;
        }
        default:
            return false;
    }
}

}  // namespace dpcl::testing
