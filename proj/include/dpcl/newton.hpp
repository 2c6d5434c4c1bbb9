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

#include <utility>
#include <vector>

#include "integer.hpp"

namespace dpcl {

// v_p of a value; prime 0 denotes the archimedean place
struct PadicValuation {
    Int prime = 0;
    bool infinite = false;
    Rat value = 0;

    static PadicValuation of(const Rat& q, const Int& p) {
        PadicValuation v;
        v.prime = p;
        if (sgn(q) == 0) v.infinite = true;
        else v.value = Rat(valuation(q, p));
        return v;
    }
    static PadicValuation finite(const Rat& x, const Int& p = 0) {
        PadicValuation v;
        v.prime = p;
        v.value = x;
        return v;
    }
    static PadicValuation infinity(const Int& p = 0) {
        PadicValuation v;
        v.prime = p;
        v.infinite = true;
        return v;
    }
};

struct NPSegment {
    int i0 = 0, i1 = 0;
    Rat v0, v1;
    Rat slope() const { return (v1 - v0) / (i1 - i0); }
    Rat root_valuation() const { return -slope(); }
    int length() const { return i1 - i0; }
};

// lower convex hull of the finite points, ordered by index
inline std::vector<NPSegment> newton_polygon(std::vector<std::pair<int, PadicValuation>> pts) {
    std::vector<std::pair<int, Rat>> p;
    for (auto& [i, v] : pts)
        if (!v.infinite) p.emplace_back(i, v.value);
    if (p.empty()) throw std::domain_error("newton polygon of the zero polynomial");
    std::sort(p.begin(), p.end(), [](auto& a, auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Rat>> hull;
    for (auto& q : p) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull.back();
            // drop b when it lies on or above the segment a-q
            Rat lhs = (b.second - a.second) * (q.first - a.first);
            Rat rhs = (q.second - a.second) * (b.first - a.first);
            if (lhs >= rhs) hull.pop_back();
            else break;
        }
        hull.push_back(q);
    }
    std::vector<NPSegment> segs;
    for (size_t k = 0; k + 1 < hull.size(); ++k) segs.push_back({hull[k].first, hull[k + 1].first, hull[k].second, hull[k + 1].second});
    return segs;
}

// least valuation among the nonzero roots; infinite when there are none
inline PadicValuation newton_polygon_min_root_valuation(const std::vector<std::pair<int, PadicValuation>>& pts) {
    auto segs = newton_polygon(pts);
    Int p = pts.empty() ? Int(0) : pts.front().second.prime;
    if (segs.empty()) return PadicValuation::infinity(p);
    return PadicValuation::finite(segs.back().root_valuation(), p);
}

}  // namespace dpcl
