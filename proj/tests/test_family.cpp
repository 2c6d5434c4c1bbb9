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

#include <sstream>

#include "support.hpp"

using namespace dpcl;
using namespace dpcl::testing;

namespace {

AdmissibilityProfile reference_profile() { return compute_profile(reference_model(), {reference_h()}, reference_bad_primes()); }

// N(a + g theta) for monic f of degree n
Rat norm_linear(const QPoly& f, const Rat& a, const Rat& g) {
    int n = f.degree();
    if (sgn(g) == 0) return rpow(a, n);
    return rpow(-g, n) * f.eval(-a / g);
}

QPoly random_irreducible_cubic(Gen& g) {
    for (;;) {
        QPoly f(std::vector<Rat>{Rat(g.integer(-60, 60)) * g.integer(1, 12), Rat(g.integer(-30, 30)), Rat(g.integer(-9, 9)), Rat(1)});
        if (rational_roots(f).empty() && sgn(discriminant(f)) != 0) return f;
    }
}

std::string cert_text(const FieldCertificate& c) {
    std::ostringstream os;
    write_certificate(os, c);
    return os.str();
}

}  // namespace

TEST(Enumerate, SmallProfile) {
    AdmissibilityProfile prof;
    prof.finite[Int(2)] = 1;
    prof.archimedean = Rat(1, 3);
    auto ts = enumerate_admissible(prof, 4);
    ASSERT_EQ(ts.size(), 4u);
    EXPECT_EQ(ts[0], Rat(2, 7));
    EXPECT_EQ(ts[1], Rat(2, 9));
    EXPECT_EQ(ts[2], Rat(2, 11));
    EXPECT_EQ(ts[3], Rat(2, 13));
    auto both = enumerate_admissible(prof, 4, SignStrategy::Both);
    EXPECT_EQ(both[0], Rat(2, 7));
    EXPECT_EQ(both[1], Rat(-2, 7));
    auto neg = enumerate_admissible(prof, 2, SignStrategy::Negative);
    EXPECT_EQ(neg[0], Rat(-2, 7));
    EXPECT_TRUE(enumerate_admissible(prof, 0).empty());
}

TEST(Enumerate, MembersAreAdmissibleAndDistinct) {
    Gen g(5);
    for (int trial = 0; trial < 20; ++trial) {
        AdmissibilityProfile prof;
        for (long p : {2L, 3L, 5L, 7L, 11L})
            if (g.integer(0, 1)) prof.finite[Int(p)] = static_cast<int>(g.integer(1, 3));
        prof.archimedean = make_rat(Int(g.integer(1, 9)), Int(g.integer(10, 300)));
        auto ts = enumerate_admissible(prof, 12, SignStrategy::Both);
        ASSERT_EQ(ts.size(), 12u);
        std::set<Rat> seen(ts.begin(), ts.end());
        EXPECT_EQ(seen.size(), ts.size());
        for (auto& t : ts) {
            EXPECT_LT(abs(t), prof.archimedean);
            for (auto& [p, k] : prof.finite) EXPECT_GE(valuation(t, p), k) << t.get_str();
        }
    }
}

TEST(Enumerate, ReferenceProfileFirstMember) {
    auto prof = reference_profile();
    auto ts = enumerate_admissible(prof, 3);
    ASSERT_EQ(ts.size(), 3u);
    for (auto& t : ts) {
        EXPECT_LT(abs(t), prof.archimedean);
        for (auto& [p, k] : prof.finite) EXPECT_GE(valuation(t, p), k);
    }
    EXPECT_LT(ts[0].get_den(), ts[1].get_den());
}

TEST(FibreField, IntegralModelAndReducible) {
    QPoly f = parse_univariate("t^3 + 1/6 t + 5/4");
    auto k = field_from_poly(f);
    EXPECT_EQ(k.scale, 12);
    for (int j = 0; j <= 3; ++j) EXPECT_EQ(k.integral.coeff(j).get_den(), 1);
    EXPECT_EQ(k.integral.eval(Rat(k.scale) * Rat(2)), rpow(Rat(k.scale), 3) * f.eval(Rat(2)));
    EXPECT_EQ(k.real_embeddings, 1);
    EXPECT_THROW(field_from_poly(parse_univariate("t^3 - 1")), std::runtime_error);
    auto m = make_model({parse_univariate("-t"), QPoly(), QPoly()});
    EXPECT_THROW(fibre_field(m, Rat(8)), ReducibleFibre);
    EXPECT_NO_THROW(fibre_field(m, Rat(2)));
}

// sum e f = degree, and at unramified primes the degree-one places match the roots mod p
TEST(Places, DegreeSumAndUnramifiedSplitting) {
    Gen g(99);
    for (int trial = 0; trial < 60; ++trial) {
        QPoly f = random_irreducible_cubic(g);
        Int disc = Int(discriminant(f).get_num());
        for (long p : {2L, 3L, 5L, 7L, 13L}) {
            auto dec = padic_places(f, p);
            if (!dec.determined) continue;
            int sum = 0;
            for (auto& pl : dec.places) sum += pl.e * pl.f;
            EXPECT_EQ(sum, 3);
            if (disc % p != 0) {
                int ones = 0;
                for (auto& pl : dec.places) {
                    EXPECT_EQ(pl.e, 1);
                    if (pl.f == 1) ++ones;
                }
                EXPECT_EQ(ones, static_cast<int>(roots_mod_p(reduce_mod(f, p), p).size())) << to_string(f, "t") << " p=" << p;
            }
        }
    }
}

// v_p(N(a + g theta)) = sum_w e_w f_w v_w(a + g theta)
TEST(Places, ValuationsMatchNorm) {
    Gen g(17);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        QPoly f = random_irreducible_cubic(g);
        Rat a = g.rational(40), gm = g.rational(40);
        Rat nm = norm_linear(f, a, gm);
        if (sgn(nm) == 0) continue;
        for (long p : {2L, 3L, 5L, 7L}) {
            auto dec = padic_places(f, p);
            if (!dec.determined) continue;
            Rat sum = 0;
            bool all = true;
            for (auto& pl : dec.places) {
                auto v = place_valuation(f, p, pl, a, gm, 320);
                if (!v) { all = false; break; }
                sum += *v * pl.e * pl.f;
            }
            if (!all) continue;
            ++checked;
            EXPECT_EQ(sum, Rat(valuation(nm, Int(p)))) << to_string(f, "t") << " p=" << p;
        }
    }
    EXPECT_GT(checked, 150);
}

TEST(Certify, ReferenceModelThreeMembers) {
    auto m = reference_model();
    std::vector<KummerFunction> hs{reference_h()};
    auto prof = reference_profile();
    auto ts = enumerate_admissible(prof, 3);
    auto outs = certify_many(m, hs, prof, ts);
    ASSERT_EQ(outs.size(), 3u);
    for (auto& o : outs) {
        ASSERT_TRUE(o.certificate.has_value()) << o.skipped;
        auto& c = *o.certificate;
        EXPECT_EQ(c.overall, Verdict::Pass) << c.t.get_str();
        for (auto& pc : c.parity_checks) EXPECT_EQ(pc.verdict, Verdict::Pass);
        for (auto& sc : c.square2_checks) EXPECT_EQ(sc.verdict, Verdict::Pass);
        for (auto& sc : c.sign_checks) EXPECT_EQ(sc.sign, 1);
        EXPECT_EQ(c.places.size(), prof.finite.size());
        EXPECT_LE(c.independence.rank, 1u);
        // parity from the norm: the sum of orders is even when each is
        for (auto& [p, places] : c.places) {
            Rat nm = norm_linear(c.field.poly, c.x_const[0], c.x_gamma[0]);
            EXPECT_EQ(valuation(nm, p) % 2, 0) << p;
        }
        EXPECT_EQ(cert_text(c), cert_text(certify(m, hs, prof, c.t)));
    }
}

TEST(Certify, PrecisionStable) {
    auto m = reference_model();
    std::vector<KummerFunction> hs{reference_h()};
    auto prof = reference_profile();
    Rat t = enumerate_admissible(prof, 1)[0];
    auto a = certify(m, hs, prof, t, {20, 24});
    auto b = certify(m, hs, prof, t, {40, 24});
    EXPECT_EQ(a.overall, b.overall);
    ASSERT_EQ(a.parity_checks.size(), b.parity_checks.size());
    for (size_t i = 0; i < a.parity_checks.size(); ++i) {
        EXPECT_EQ(a.parity_checks[i].valuation, b.parity_checks[i].valuation);
        EXPECT_EQ(a.parity_checks[i].verdict, b.parity_checks[i].verdict);
    }
    EXPECT_EQ(a.independence.matrix, b.independence.matrix);
}

TEST(Certify, NonAdmissibleFails) {
    auto m = reference_model();
    std::vector<KummerFunction> hs{reference_h()};
    auto prof = reference_profile();
    // a negative t of tiny size fails the sign test at a real place, or some local test
    Rat t = -enumerate_admissible(prof, 1)[0];
    auto c = certify(m, hs, prof, t);
    EXPECT_NE(c.overall, Verdict::Undetermined);
    AdmissibilityProfile loose = prof;
    Rat big = make_rat(Int(1), Int(7));
    try {
        auto d = certify(m, hs, loose, big);
        EXPECT_EQ(d.overall, Verdict::Fail);
    } catch (const ReducibleFibre&) {
    }
}

TEST(Independence, MonotoneInBudget) {
    Gen g(3);
    for (int trial = 0; trial < 10; ++trial) {
        QPoly f = random_irreducible_cubic(g);
        auto k = field_from_poly(f);
        std::vector<Rat> xc, xg;
        for (int i = 0; i < 4; ++i) {
            xc.push_back(g.rational(20));
            xg.push_back(g.rational(20));
            if (sgn(norm_linear(f, xc.back(), xg.back())) == 0) xc.back() += 1;
        }
        size_t prev = 0;
        for (size_t budget : {0u, 2u, 4u, 8u, 16u}) {
            auto ev = independence_rank(k, xc, xg, {}, {}, budget);
            EXPECT_EQ(ev.auxiliary_primes.size(), budget);
            EXPECT_GE(ev.rank, prev);
            EXPECT_LE(ev.rank, 4u);
            EXPECT_EQ(ev.inconclusive, ev.rank < 4);
            prev = ev.rank;
        }
    }
    // squares have zero rows
    QPoly f = parse_univariate("t^3 - 2");
    auto k = field_from_poly(f);
    auto ev = independence_rank(k, {Rat(4), Rat(9)}, {Rat(0), Rat(0)}, {}, {}, 12);
    EXPECT_EQ(ev.rank, 0u);
}
