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

#include "modp.hpp"

namespace dpcl {

namespace detail {

inline Int eval_int(const std::vector<Int>& c, const Int& x, const Int& m) {
    Int r = 0;
    for (size_t i = c.size(); i-- > 0;) r = mod(r * x + c[i], m);
    return r;
}

}  // namespace detail

// all rational roots, sorted, without multiplicity
inline std::vector<Rat> rational_roots(const UniPoly<Rat>& f) {
    if (f.is_zero()) throw std::domain_error("rational_roots of zero polynomial");
    std::vector<Rat> out;
    if (f.degree() < 1) return out;
    UniPoly<Rat> g = f;
    if (sgn(g.coeff(0)) == 0) {
        out.push_back(Rat(0));
        g = g.shift_down(g.order());
    }
    if (g.degree() >= 1) {
        g = primitive_integer(squarefree_part(g));
        std::vector<Int> c;
        for (auto& a : g.c) c.emplace_back(a.get_num());
        if (g.degree() == 1) {
            out.push_back(make_rat(-c[0], c[1]));
        } else {
            Int lc = c.back(), c0 = c.front();
            UniPoly<Rat> gd = g.derivative();
            long p = 3;
            for (;; p = next_prime(Int(p)).get_si()) {
                if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(p))) continue;
                FpPoly gp = reduce_mod(g, p);
                if (!squarefree_mod_p(gp)) continue;
                break;
            }
            FpPoly gp = reduce_mod(g, p);
            // a root a/b has |a| <= |c0| and b <= |lc|
            Int bound = 2 * abs(c0) * abs(lc) + 1, m(p);
            int e = 1;
            while (m <= bound) { m *= p; ++e; }
            std::vector<Int> dc;
            for (auto& a : gd.c) dc.emplace_back(a.get_num());
            for (long long r0 : roots_mod_p(gp, p)) {
                Int r(static_cast<long>(r0)), pk(p);
                while (pk < m) {
                    Int pk2 = pk * pk;
                    if (pk2 > m) pk2 = m;
                    Int fv = detail::eval_int(c, r, pk2), dv = detail::eval_int(dc, r, pk2);
                    r = mod(r - fv * invmod(dv, pk2), pk2);
                    pk = pk2;
                }
                Rat cand;
                if (rational_reconstruct(r, m, abs(c0), abs(lc), cand) && sgn(g(cand)) == 0) out.push_back(cand);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Sturm sequence of a squarefree polynomial
inline std::vector<UniPoly<Rat>> sturm_sequence(const UniPoly<Rat>& f) {
    std::vector<UniPoly<Rat>> s{f, f.derivative()};
    while (!s.back().is_zero()) {
        UniPoly<Rat> r = -(s[s.size() - 2] % s.back());
        if (r.is_zero()) break;
        s.push_back(r);
    }
    return s;
}

inline int sign_changes(const std::vector<UniPoly<Rat>>& s, const Rat& x) {
    int changes = 0, last = 0;
    for (auto& p : s) {
        int v = sgn(p(x));
        if (v == 0) continue;
        if (last != 0 && v != last) ++changes;
        last = v;
    }
    return changes;
}

// a real root inside (lo, hi]
struct RealRoot {
    Rat lo, hi;
};

class RealRootIsolator {
  public:
    explicit RealRootIsolator(const UniPoly<Rat>& f) : f_(squarefree_part(f)), sturm_(sturm_sequence(f_)) {}

    int count(const Rat& a, const Rat& b) const { return sign_changes(sturm_, a) - sign_changes(sturm_, b); }

    std::vector<RealRoot> isolate() const {
        std::vector<RealRoot> out;
        if (f_.degree() < 1) return out;
        Rat bound = 1;
        for (int i = 0; i < f_.degree(); ++i) {
            Rat r = abs(f_.c[i] / f_.lead()) + 1;
            if (r > bound) bound = r;
        }
        split(-bound, bound, out);
        return out;
    }

    RealRoot refine(RealRoot r) const {
        Rat mid = (r.lo + r.hi) / 2;
        if (count(r.lo, mid) == 1) r.hi = mid;
        else r.lo = mid;
        return r;
    }

    // sign of c0 + c1 * theta at the root isolated by r
    int sign_linear(RealRoot r, const Rat& c0, const Rat& c1) const {
        if (sgn(c1) == 0) return sgn(c0);
        Rat z = -c0 / c1;
        for (;;) {
            if (z <= r.lo) return sgn(c1);
            if (z >= r.hi && sgn(f_(r.hi)) != 0) return -sgn(c1);
            if (z == r.hi) return 0;
            r = refine(r);
        }
    }

    const UniPoly<Rat>& poly() const { return f_; }

  private:
    void split(const Rat& a, const Rat& b, std::vector<RealRoot>& out) const {
        int n = count(a, b);
        if (n == 0) return;
        if (n == 1) {
            out.push_back({a, b});
            return;
        }
        Rat m = (a + b) / 2;
        split(a, m, out);
        split(m, b, out);
    }
    UniPoly<Rat> f_;
    std::vector<UniPoly<Rat>> sturm_;
};

}  // namespace dpcl
