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

#include "dpcl/dpcl.hpp"

namespace dpcl::testing {

inline std::vector<QPoint> example_points() {
    std::vector<std::array<long, 2>> xy = {{0, -2}, {3, -9}, {3, 7}, {8, 26}, {15, 63}, {24, 124}, {48, 342}, {0, 0}};
    std::vector<QPoint> out;
    for (auto& p : xy) out.emplace_back(Rat(p[0]), Rat(p[1]), Rat(1));
    return out;
}

// the cuspidal cubic (x+z)^3 - (y+z)^2 z
inline TriForm example_u() { return parse_form("(x+z)^3 - (y+z)^2*z"); }

inline const char* kReferenceA2 = "136902207241/16 t^2 - 1208223/4 t";
inline const char* kReferenceA1 = "24403582287284966245 t^4 - 13786310912398097/8 t^3 + 234505995159/8 t^2 - 316801/4 t";
inline const char* kReferenceA0 =
    "23200074887895098984232713028 t^6 - 2457892462046662336694429 t^5 + 1338378986926042827721/16 t^4"
    " - 9000960055643209/8 t^3 + 158059424789/16 t^2 + 11025 t";
inline const char* kReferenceH = "-484335370397555869540982096 t^2 + 21745428828566997697489 t - 184765518741585604 W + 22709411000816400";

inline TrigonalModel reference_model() {
    return make_model({parse_univariate(kReferenceA0), parse_univariate(kReferenceA1), parse_univariate(kReferenceA2)});
}
inline KummerFunction reference_h() { return parse_kummer(kReferenceH).normalized(); }

inline std::vector<std::pair<long, int>> reference_table() {
    return {{2, 33},  {3, 21},  {5, 21},  {7, 21},  {11, 5},  {13, 5},  {17, 1},  {19, 5},  {23, 9},  {29, 1},
            {31, 5},  {37, 1},  {41, 1},  {43, 5},  {47, 1},  {59, 1},  {61, 1},  {71, 1},  {83, 1},  {103, 1},
            {107, 1}, {179, 5}, {223, 1}, {241, 1}, {389, 1}, {449, 5}, {599, 5}, {809, 5}, {1019, 1}};
}

inline std::vector<Int> reference_bad_primes() {
    std::vector<Int> out;
    for (auto& [p, k] : reference_table()) out.emplace_back(p);
    return out;
}

// seeded generators for property tests
struct Gen {
    std::mt19937_64 rng;
    explicit Gen(uint64_t seed) : rng(seed) {}
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }
    Rat rational(long bound) {
        long d = integer(1, bound);
        return make_rat(Int(integer(-bound, bound)), Int(d));
    }
    QPoly poly(int deg, long bound) {
        std::vector<Rat> c;
        for (int i = 0; i <= deg; ++i) c.push_back(Rat(integer(-bound, bound)));
        if (sgn(c.back()) == 0) c.back() = 1;
        return QPoly(c);
    }
};

}  // namespace dpcl::testing
