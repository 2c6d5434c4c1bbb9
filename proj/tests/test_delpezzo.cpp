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
#include <gtest/gtest.h>

#include "mutations.hpp"

using namespace dpcl;
using namespace dpcl::testing;

namespace {

// f and its gradient vanish at p
bool double_at(const TriForm& f, const QPoint& p) {
    if (sgn(f.eval(p.c)) != 0) return false;
    for (int k = 0; k < 3; ++k)
        if (sgn(f.partial(k).eval(p.c)) != 0) return false;
    return true;
}

QPoint transform(const Matrix<Rat>& m, const QPoint& p) {
    auto v = mat_vec(m, std::vector<Rat>{p.c[0], p.c[1], p.c[2]});
    return QPoint(v[0], v[1], v[2]);
}

Matrix<Rat> random_unimodular(Gen& g) {
    // product of elementary matrices
    Matrix<Rat> m{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    for (int step = 0; step < 6; ++step) {
        int i = static_cast<int>(g.integer(0, 2)), j = static_cast<int>(g.integer(0, 2));
        if (i == j) continue;
        Rat f(g.integer(-3, 3));
        for (int c = 0; c < 3; ++c) m[i][c] += f * m[j][c];
    }
    return m;
}

}  // namespace

TEST(GeneralPosition, ExamplePasses) {
    auto v = check_general_position(example_points());
    EXPECT_TRUE(v.pass) << v.describe();
}

TEST(GeneralPosition, CollinearOnXAxis) {
    auto pts = example_points();
    pts[0] = QPoint(0, 0, 1);
    pts[1] = QPoint(1, 0, 1);
    pts[2] = QPoint(2, 0, 1);
    pts[7] = QPoint(5, 11, 1);
    auto v = check_general_position(pts);
    ASSERT_FALSE(v.pass);
    EXPECT_EQ(v.kind, Violation::Collinear);
    EXPECT_EQ(v.witness, (std::vector<int>{0, 1, 2}));
}

TEST(GeneralPosition, CoincidentPoints) {
    auto pts = example_points();
    pts[5] = QPoint(6, 14, 2);
    auto v = check_general_position(pts);
    ASSERT_FALSE(v.pass);
    EXPECT_EQ(v.kind, Violation::Coincident);
    EXPECT_EQ(v.witness, (std::vector<int>{2, 5}));
}

TEST(GeneralPosition, ZetaThreeConfiguration) {
    auto v = check_general_position(mu3_example().points);
    EXPECT_TRUE(v.pass) << v.describe();
}

TEST(GeneralPosition, PlantedViolationsHaveValidWitnesses) {
    auto ms = planted_violations();
    ASSERT_EQ(ms.size(), 20u);
    int counts[5] = {0, 0, 0, 0, 0};
    for (auto& m : ms) {
        auto v = check_general_position(m.points);
        EXPECT_FALSE(v.pass) << m.name;
        EXPECT_EQ(v.kind, m.planted) << m.name;
        EXPECT_EQ(v.witness, m.planted_witness) << m.name;
        EXPECT_TRUE(witness_is_valid(m.points, v)) << m.name;
        ++counts[static_cast<int>(m.planted)];
    }
    EXPECT_EQ(counts[static_cast<int>(Violation::Collinear)], 7);
    EXPECT_EQ(counts[static_cast<int>(Violation::Conic)], 7);
    EXPECT_EQ(counts[static_cast<int>(Violation::SingularCubic)], 6);
}

TEST(GeneralPosition, InvariantUnderLinearChange) {
    Gen g(2016);
    auto ms = planted_violations();
    for (int trial = 0; trial < 10; ++trial) {
        auto m = random_unimodular(g);
        std::vector<QPoint> ex;
        for (auto& p : example_points()) ex.push_back(transform(m, p));
        EXPECT_TRUE(check_general_position(ex).pass);
        auto& mut = ms[static_cast<size_t>(trial) % ms.size()];
        std::vector<QPoint> bad;
        for (auto& p : mut.points) bad.push_back(transform(m, p));
        auto v = check_general_position(bad);
        EXPECT_FALSE(v.pass);
        EXPECT_EQ(v.kind, mut.planted);
    }
}

TEST(Anticanonical, ContainsPrintedCubic) {
    auto pts = example_points();
    auto basis = anticanonical_cubics(pts);
    ASSERT_EQ(basis.size(), 2u);
    for (auto& b : basis)
        for (auto& p : pts) EXPECT_EQ(sgn(b.eval(p.c)), 0);
    Matrix<Rat> m{basis[0].coeffs(), basis[1].coeffs(), example_u().coeffs()};
    EXPECT_EQ(rank(m), 2u);
}

TEST(Anticanonical, GenericPointsGiveAPencil) {
    Gen g(99);
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<QPoint> pts;
        for (int i = 0; i < 8; ++i) pts.emplace_back(Rat(g.integer(-50, 50)), Rat(g.integer(-50, 50)), Rat(1));
        if (!check_general_position(pts).pass) continue;
        auto b = anticanonical_cubics(pts);
        EXPECT_EQ(b.size(), 2u);
        for (auto& c : b)
            for (auto& p : pts) EXPECT_EQ(sgn(c.eval(p.c)), 0);
    }
}

TEST(Anticanonical, CollinearTripleRejected) {
    auto pts = example_points();
    pts[0] = QPoint(0, 0, 1);
    pts[1] = QPoint(1, 1, 1);
    pts[2] = QPoint(2, 2, 1);
    EXPECT_THROW(build_delpezzo(pts, std::nullopt), std::runtime_error);
}

TEST(Sextics, CompletionIsSingularAtTheBasePoints) {
    auto pts = example_points();
    auto d = build_delpezzo(pts, example_u());
    for (auto& p : pts) {
        EXPECT_TRUE(double_at(d.w, p));
        EXPECT_TRUE(double_at(d.u * d.u, p));
        EXPECT_TRUE(double_at(d.u * d.v, p));
        EXPECT_TRUE(double_at(d.v * d.v, p));
    }
    Matrix<Rat> m{(d.u * d.u).coeffs(), (d.u * d.v).coeffs(), (d.v * d.v).coeffs(), d.w.coeffs()};
    EXPECT_EQ(rank(m), 4u);
    EXPECT_EQ(double_point_sextics(pts).size(), 4u);
    // recorded from the echelon choice
    EXPECT_EQ(d.w.coeff({5, 0, 1}), 1);
    EXPECT_EQ(d.w.coeff({4, 1, 1}), Rat("-9711829938905107/6116145594113037"));
}

TEST(Pencil, PrintedCubicIsCuspidal) {
    auto pts = example_points();
    auto basis = anticanonical_cubics(pts);
    TriForm u = example_u(), v;
    for (auto& b : basis)
        if (rank(Matrix<Rat>{u.coeffs(), b.coeffs()}) == 2) {
            v = b;
            break;
        }
    auto s = pencil_singular_members(u, v);
    EXPECT_EQ(s.discriminant.degree(), 12);
    bool found = false;
    for (auto& m : s.rational)
        if (sgn(m.mu) == 0) {
            found = true;
            ASSERT_TRUE(m.point.has_value());
            EXPECT_EQ(*m.point, QPoint(-1, -1, 1));
            EXPECT_EQ(m.type, SingularityType::Cusp);
        }
    EXPECT_TRUE(found);
    int total = 0;
    for (auto& m : s.rational) total += m.multiplicity;
    EXPECT_EQ(total + s.irrational_part.degree(), 12);
}

TEST(Pencil, NodeAndCusp) {
    EXPECT_EQ(classify_singularity(parse_form("y^2*z - x^3"), QPoint(0, 0, 1)), SingularityType::Cusp);
    EXPECT_EQ(classify_singularity(parse_form("y^2*z - x^3 - x^2*z"), QPoint(0, 0, 1)), SingularityType::Node);
    EXPECT_EQ(classify_singularity(parse_form("x*y*z"), QPoint(0, 0, 1)), SingularityType::Node);
    EXPECT_EQ(classify_singularity(parse_form("x^2*z"), QPoint(0, 1, 0)), SingularityType::Worse);
}

TEST(Pencil, SmoothMemberAbsent) {
    auto basis = anticanonical_cubics(example_points());
    TriForm u;
    for (long c = 1;; ++c) {
        u = basis[0] + Rat(c) * basis[1];
        if (sgn(cubic_singularity_discriminant(u)) != 0) break;
    }
    auto s = pencil_singular_members(u, basis[1]);
    EXPECT_NE(sgn(s.discriminant.coeff(0)), 0);
    for (auto& m : s.rational) EXPECT_FALSE(sgn(m.mu) == 0);
}

TEST(NinthPoint, Example) {
    auto d = build_delpezzo(example_points(), example_u());
    EXPECT_EQ(d.base_point_O, QPoint(Rat("25079/151321"), Rat("-132951869/58863869"), 1));
    EXPECT_EQ(sgn(d.u.eval(d.base_point_O.c)), 0);
    EXPECT_EQ(sgn(d.v.eval(d.base_point_O.c)), 0);
}

TEST(NinthPoint, SyntheticGrid) {
    // base locus {0,1,2} x {0,1,2}
    TriForm u = parse_form("x*(x-z)*(x-2*z)"), v = parse_form("y*(y-z)*(y-2*z)");
    std::vector<QPoint> known;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i || j) known.emplace_back(Rat(i), Rat(j), Rat(1));
    EXPECT_EQ(ninth_base_point(u, v, known), QPoint(0, 0, 1));
}

TEST(NinthPoint, CommonComponent) {
    TriForm u = parse_form("x*(y^2 - z^2)"), v = parse_form("x*(x^2 - y*z)");
    EXPECT_THROW(ninth_base_point(u, v, {}), std::runtime_error);
}
