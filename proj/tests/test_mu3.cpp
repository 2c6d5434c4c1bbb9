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

#include "support.hpp"

using namespace dpcl;
using namespace dpcl::testing;

namespace {

// orbit sizes by closure under v -> Mv, sharing nothing with the library counter
size_t orbits_by_closure(const F2Matrix& m) {
    size_t n = m.size();
    auto mul = [&](unsigned v) {
        unsigned out = 0;
        for (size_t i = 0; i < n; ++i) {
            int s = 0;
            for (size_t j = 0; j < n; ++j)
                if ((v >> j) & 1u) s += m[i][j];
            if (s & 1) out |= 1u << i;
        }
        return out;
    };
    std::set<std::set<unsigned>> orbits;
    for (unsigned v = 0; v < (1u << n); ++v) {
        std::set<unsigned> o{v};
        for (unsigned w = mul(v); w != v; w = mul(w)) o.insert(w);
        orbits.insert(o);
    }
    return orbits.size();
}

}  // namespace

TEST(Mu3, OrbitFormulaSmallGenera) {
    EXPECT_EQ(orbit_count_formula(1), 2);
    EXPECT_EQ(orbit_count_formula(2), 6);
    EXPECT_EQ(orbit_count_formula(4), 86);
    EXPECT_EQ(rank_bound(4), 6);
    EXPECT_EQ(rank_bound(1), 1);
    EXPECT_THROW(orbit_count_formula(0), std::invalid_argument);
}

TEST(Mu3, OrbitFormulaAgainstRandomMatrices) {
    std::mt19937_64 rng(2016);
    for (int g = 1; g <= 5; ++g)
        for (int trial = 0; trial < 50; ++trial) {
            F2Matrix m = random_order3_matrix(g, rng);
            size_t n = static_cast<size_t>(2 * g);
            ASSERT_EQ(f2_mul(m, f2_mul(m, m)), f2_identity(n));
            EXPECT_EQ(f2_fixed_count(m), 1u);
            size_t c = sigma_orbit_count(m);
            EXPECT_EQ(Int(c), orbit_count_formula(g));
            // Burnside with the identity and two fixed-point-free powers
            EXPECT_EQ(3 * c, (size_t(1) << n) + 2 * f2_fixed_count(m));
            if (g <= 3) {
                EXPECT_EQ(orbits_by_closure(m), c);
            }
        }
}

TEST(Mu3, RejectsBadMatrices) {
    EXPECT_THROW(sigma_orbit_count(f2_identity(4)), std::invalid_argument);
    F2Matrix swap{{0, 1}, {1, 0}};
    EXPECT_THROW(sigma_orbit_count(swap), std::invalid_argument);
    // order 3 with a fixed line
    F2Matrix fix{{1, 0, 0}, {0, 0, 1}, {0, 1, 1}};
    EXPECT_THROW(sigma_orbit_count(fix), std::invalid_argument);
    EXPECT_FALSE(f2_inverse(F2Matrix{{1, 1}, {1, 1}}).has_value());
}

TEST(Mu3, ExampleConfiguration) {
    auto r = check_mu3_example();
    EXPECT_TRUE(r.general_position.pass);
    EXPECT_TRUE(r.invariant);
    EXPECT_TRUE(r.order_three);
    EXPECT_EQ(r.galois_orbits, 6);
    EXPECT_TRUE(r.pass);
}

TEST(Mu3, ConjugationIsAnInvolution) {
    auto k = cyclotomic3();
    NumberFieldElem z = NumberFieldElem::generator(k);
    EXPECT_EQ(conjugate(z), z * z);
    EXPECT_EQ(conjugate(conjugate(z * Rat(3) + Rat(2))), z * Rat(3) + Rat(2));
    EXPECT_EQ(conjugate(z) * z, NumberFieldElem(k, QPoly(std::vector<Rat>{1})));
}

TEST(Mu3, FailureModes) {
    auto c = mu3_example();
    c.points[7] = c.points[6];
    auto r = check_mu3(c);
    EXPECT_FALSE(r.general_position.pass);
    EXPECT_FALSE(r.pass);

    c = mu3_example();
    NumberFieldElem one(1), zero(0);
    c.automorphism = {{{one, zero, zero}, {zero, one, zero}, {zero, zero, one}}};
    r = check_mu3(c);
    EXPECT_TRUE(r.invariant);
    EXPECT_FALSE(r.order_three);
    EXPECT_FALSE(r.pass);

    c = mu3_example();
    c.points[5] = KPoint(NumberFieldElem(3), NumberFieldElem(4), NumberFieldElem(7));
    r = check_mu3(c);
    EXPECT_FALSE(r.invariant);
    EXPECT_FALSE(r.pass);
}
