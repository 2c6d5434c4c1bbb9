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

// reduced forms counted by a direct loop over a, b
size_t brute_class_number(long long D) {
    size_t h = 0;
    long long n = -D;
    for (long long a = 1; 3 * a * a <= n; ++a)
        for (long long b = -a + 1; b <= a; ++b) {
            long long num = b * b - D;
            if (num % (4 * a)) continue;
            long long c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            ++h;
        }
    return h;
}

int distinct_prime_count(long long n) {
    n = std::llabs(n);
    int k = 0;
    for (long long p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ++k;
            while (n % p == 0) n /= p;
        }
    return k + (n > 1);
}

}  // namespace

TEST(Forms, SmallDiscriminants) {
    auto g15 = form_class_group(-15);
    EXPECT_EQ(g15.class_number(), 2u);
    EXPECT_EQ(g15.two_rank, 1);
    auto g3 = form_class_group(-3);
    EXPECT_EQ(g3.class_number(), 1u);
    EXPECT_EQ(g3.two_rank, 0);
    auto g84 = form_class_group(-84);
    EXPECT_EQ(g84.class_number(), 4u);
    EXPECT_EQ(g84.elementary_divisors, (std::vector<long long>{2, 2}));
    auto g23 = form_class_group(-23);
    EXPECT_EQ(g23.class_number(), 3u);
    EXPECT_EQ(g23.elementary_divisors, (std::vector<long long>{3}));
    auto g5440 = form_class_group(-5440);
    EXPECT_EQ(g5440.class_number(), 16u);
    EXPECT_EQ(g5440.elementary_divisors, (std::vector<long long>{2, 2, 4}));
    EXPECT_THROW(form_class_group(-6), std::invalid_argument);
    EXPECT_THROW(form_class_group(5), std::invalid_argument);
}

TEST(Forms, ReductionAndComposition) {
    long long D = -5440;
    auto fs = forms::reduced_forms(D);
    Form id = forms::identity(D);
    for (auto& f : fs) {
        EXPECT_TRUE(forms::is_reduced(f));
        EXPECT_EQ(forms::disc(f), D);
        EXPECT_EQ(forms::compose(f, id, D), f);
        Form inv{f.a, -f.b, f.c};
        EXPECT_EQ(forms::compose(f, forms::reduce(inv, D), D), id);
    }
    Gen g(4);
    for (int i = 0; i < 100; ++i) {
        auto& x = fs[g.integer(0, fs.size() - 1)];
        auto& y = fs[g.integer(0, fs.size() - 1)];
        auto& z = fs[g.integer(0, fs.size() - 1)];
        EXPECT_EQ(forms::compose(x, y, D), forms::compose(y, x, D));
        EXPECT_EQ(forms::compose(forms::compose(x, y, D), z, D), forms::compose(x, forms::compose(y, z, D), D));
    }
    // reduction of a translate (x -> x + 5y) returns the original class
    for (auto& f : fs) {
        Form g{f.a, f.b + 10 * f.a, f.a * 25 + f.b * 5 + f.c};
        EXPECT_EQ(forms::reduce(g, D), f);
    }
}

TEST(Forms, SqrtModPrimePower) {
    for (long long p : {2LL, 3LL, 5LL, 7LL})
        for (int k = 1; k <= 4; ++k) {
            long long pk = 1;
            for (int i = 0; i < k; ++i) pk *= p;
            for (long long D : {-3LL, -4LL, -15LL, -23LL, -84LL, -140LL}) {
                auto rs = forms::sqrt_mod_prime_power(D, p, k);
                std::set<long long> expect;
                for (long long x = 0; x < pk; ++x)
                    if (((x * x - D) % pk + pk) % pk == 0) expect.insert(x);
                std::set<long long> got(rs.begin(), rs.end());
                EXPECT_EQ(got, expect) << D << " " << p << "^" << k;
            }
        }
}

// class numbers by brute force and two-ranks by genus theory
TEST(Forms, GenusTheoryBelow10000) {
    size_t n = 0;
    for (long long D = -3; D > -10000; --D) {
        if (!is_fundamental_discriminant(D)) continue;
        auto g = form_class_group(D, 0);
        ASSERT_EQ(g.class_number(), brute_class_number(D)) << D;
        ASSERT_EQ(g.two_rank, distinct_prime_count(D) - 1) << D;
        ++n;
    }
    EXPECT_EQ(n, 3043u);
}

TEST(Forms, FundamentalDiscriminant) {
    EXPECT_TRUE(is_fundamental_discriminant(-4));
    EXPECT_TRUE(is_fundamental_discriminant(-8));
    EXPECT_TRUE(is_fundamental_discriminant(-15));
    EXPECT_FALSE(is_fundamental_discriminant(-12));
    EXPECT_FALSE(is_fundamental_discriminant(-16));
    EXPECT_FALSE(is_fundamental_discriminant(-27));
    EXPECT_EQ(fundamental_discriminant(Int(-12)), -3);
    EXPECT_EQ(fundamental_discriminant(Int(-20)), -20);
    EXPECT_EQ(fundamental_discriminant(Int(-2 * 49)), -8);
    EXPECT_EQ(fundamental_discriminant(Int(-7 * 9)), -7);
}

TEST(Family, QuadraticModelShape) {
    auto fam = build_quad_family(Int(1), Int(4));
    EXPECT_EQ(fam.h.size(), 2u);
    EXPECT_FALSE(fam.profile.finite.empty());
    EXPECT_GT(fam.profile.archimedean, 0);
    EXPECT_EQ(fam.profile.finite.count(Int(2)), 1u);
}

TEST(Family, TwoRankAtLeastTwo) {
    for (auto [a, b] : {std::pair<long, long>{1, 4}, {3, 8}}) {
        auto rep = validate_family(Int(a), Int(b), 25);
        ASSERT_EQ(rep.members.size(), 25u) << a << "," << b;
        EXPECT_TRUE(rep.assertion_holds);
        EXPECT_GE(rep.min_rank, 2);
        for (auto& m : rep.members) {
            EXPECT_LT(m.discriminant, 0);
            EXPECT_TRUE(is_fundamental_discriminant(m.discriminant.get_si()));
            // the fibre value differs from the discriminant by a square
            Rat v = m.q * (m.q + Rat(a)) * (m.q + Rat(b));
            Rat ratio = v / Rat(m.discriminant);
            EXPECT_TRUE(mpz_perfect_square_p(Int(ratio.get_num()).get_mpz_t()) && mpz_perfect_square_p(Int(ratio.get_den()).get_mpz_t()));
            EXPECT_EQ(m.two_rank, distinct_prime_count(m.discriminant.get_si()) - 1);
            for (auto& [p, k] : rep.profile.finite) EXPECT_GE(valuation(m.q, p), k);
        }
    }
}
