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

#include <map>
#include <set>

#include "delpezzo.hpp"
#include "modp.hpp"
#include "newton.hpp"
#include "parallel.hpp"
#include "twotorsion.hpp"

namespace dpcl {

struct AdmissibilityProfile {
    std::map<Int, int> finite;       // p -> k_p, |t|_p <= p^-k_p
    Rat archimedean = 1;             // |t| < archimedean
    std::vector<std::string> provenance;

    Int modulus() const {
        Int m = 1;
        for (auto& [p, k] : finite) m *= ipow(p, static_cast<unsigned long>(k));
        return m;
    }
};

namespace detail {

inline Int content_gcd(const std::vector<Rat>& dets) {
    Int g = 0;
    for (auto& d : dets) {
        if (d.get_den() != 1) throw std::logic_error("non-integral minor");
        g = gcd(g, Int(d.get_num()));
    }
    return g;
}

}  // namespace detail

// {2,3,5} and every prime at which the reductions collide or leave general position
inline std::vector<Int> candidate_bad_primes(const std::vector<QPoint>& pts, long prime_bound = 0) {
    if (pts.size() != 8) throw std::invalid_argument("expected 8 points");
    std::vector<QPoint> ip;
    for (auto& p : pts) {
        auto c = integral_coordinates(p);
        ip.emplace_back(Rat(c[0]), Rat(c[1]), Rat(c[2]));
    }
    std::set<Int> out{2, 3, 5};
    auto add = [&](const Int& d) {
        if (sgn(d) == 0) throw std::runtime_error("points not in general position over Q");
        for (auto& q : prime_divisors(abs(d))) out.insert(q);
    };
    detail::combinations<Rat>(8, 3, [&](const std::vector<int>& idx) {
        Matrix<Rat> m;
        for (int k : idx) m.push_back({ip[k].c[0], ip[k].c[1], ip[k].c[2]});
        add(Int(determinant(m).get_num()));
        return true;
    });
    detail::combinations<Rat>(8, 6, [&](const std::vector<int>& idx) {
        add(Int(determinant(conic_system(ip, idx)).get_num()));
        return true;
    });
    // a singular through-cubic mod p means all maximal minors of the 11 x 10 system vanish mod p
    for (size_t i = 0; i < 8; ++i) {
        Matrix<Rat> full;
        for (auto& p : ip) full.push_back(monomial_row(p, 3));
        for (int v = 0; v < 3; ++v) full.push_back(monomial_partial_row(ip[i], 3, v));
        std::vector<Rat> minors;
        for (size_t drop = 0; drop < full.size(); ++drop) {
            Matrix<Rat> m;
            for (size_t r = 0; r < full.size(); ++r)
                if (r != drop) m.push_back(full[r]);
            minors.push_back(determinant(m));
        }
        add(detail::content_gcd(minors));
    }
    // direct scan of small primes, as a cross-check of the minors
    for (long p : primes_up_to(prime_bound)) {
        if (out.count(Int(p))) continue;
        std::vector<ProjPoint<Fp>> red;
        for (auto& q : ip) red.emplace_back(Fp::from(q.c[0], p), Fp::from(q.c[1], p), Fp::from(q.c[2], p));
        if (!check_general_position(red).pass) throw std::logic_error("prime scan disagrees with the minors at p = " + std::to_string(p));
    }
    return {out.begin(), out.end()};
}

namespace detail {

inline long val_or_inf(const Rat& q, const Int& p) { return sgn(q) == 0 ? kInfVal : valuation(q, p); }

// lower bound for v(a_j(t)) when v(t) >= k
inline PadicValuation coeff_bound(const QPoly& a, const Int& p, long k) {
    if (a.is_zero()) return PadicValuation::infinity(p);
    long best = kInfVal;
    for (int m = 0; m <= a.degree(); ++m)
        if (sgn(a.c[m]) != 0) best = std::min(best, valuation(a.c[m], p) + m * k);
    return PadicValuation::finite(Rat(best), p);
}

inline Rat min3(const Rat& a, const Rat& b, const Rat& c) { return std::min(a, std::min(b, c)); }

inline Rat threshold(const Int& p) { return p == 2 ? Rat(3) : Rat(1); }

// bounds are rational (ramified places); odd p needs v > 0, p = 2 needs v >= 3
inline bool meets_threshold(const Rat& b, const Int& p) { return p == 2 ? b >= 3 : sgn(b) > 0; }

}  // namespace detail

// lower bound on the valuation of every root W of the fibre over t with v(t) >= k
inline PadicValuation fibre_root_bound(const TrigonalModel& model, const Int& p, long k) {
    std::vector<std::pair<int, PadicValuation>> pts;
    for (int j = 0; j < model.n; ++j) pts.emplace_back(j, detail::coeff_bound(model.a[j], p, k));
    pts.emplace_back(model.n, PadicValuation::finite(0, p));
    return newton_polygon_min_root_valuation(pts);
}

inline void require_normalized(const std::vector<KummerFunction>& hs) {
    for (auto& h : hs)
        if (h.delta != 1) throw std::invalid_argument("Kummer function is not normalized at P0");
}

// least m >= 1 with |t|_p, |W|_p <= p^-m forcing v(h_i - 1) >= threshold for all i
inline int lambda_exponent(const std::vector<KummerFunction>& hs, const Int& p) {
    require_normalized(hs);
    int best = 1;
    for (auto& h : hs) {
        Rat va(detail::val_or_inf(h.alpha, p)), vb(detail::val_or_inf(h.beta, p)), vc(detail::val_or_inf(h.gamma, p));
        int m = 1;
        while (detail::min3(va + 2 * m, vb + m, vc + m) < detail::threshold(p)) ++m;
        best = std::max(best, m);
    }
    return best;
}

// dyadic radius rho with |t|, |W| <= rho forcing |h_i - 1| < 1
inline Rat lambda_archimedean(const std::vector<KummerFunction>& hs) {
    require_normalized(hs);
    Rat rho = 1;
    auto ok = [&](const Rat& r) {
        for (auto& h : hs)
            if (abs(h.alpha) * r * r + abs(h.beta) * r + abs(h.gamma) * r >= 1) return false;
        return true;
    };
    while (!ok(rho)) rho /= 2;
    return rho;
}

inline void require_totally_ramified(const TrigonalModel& model) {
    for (int j = 0; j < model.n; ++j)
        if (sgn(model.a[j].coeff(0)) != 0) throw std::invalid_argument("model is not totally ramified at t = 0");
}

// least k >= m with every fibre root over v(t) >= k of valuation >= m
inline int ell_at_finite_place(const TrigonalModel& model, int m, const Int& p) {
    require_totally_ramified(model);
    for (long k = m;; ++k) {
        PadicValuation r = fibre_root_bound(model, p, k);
        if (r.infinite || r.value >= m) return static_cast<int>(k);
        if (k > 1000000) throw std::runtime_error("root bound does not grow");
    }
}

struct SufficiencyResult {
    bool pass = false;
    Int p = 0;
    int k = 0;
    PadicValuation root_bound;
    std::vector<Rat> h_bounds;   // lower bound for v(h_i - 1)
    std::vector<std::string> trace;
};

// v(t) >= k forces v(h_i - 1) >= threshold for all i (strict > 0 for odd p, >= 3 at 2)
inline SufficiencyResult verify_sufficiency(const TrigonalModel& model, const std::vector<KummerFunction>& hs, const Int& p, int k) {
    SufficiencyResult out;
    out.p = p;
    out.k = k;
    out.root_bound = fibre_root_bound(model, p, k);
    Rat rv = out.root_bound.infinite ? Rat(kInfVal) : out.root_bound.value;
    {
        std::ostringstream os;
        os << "p=" << p << " k=" << k << " root_valuation>=" << (out.root_bound.infinite ? std::string("inf") : rv.get_str());
        out.trace.push_back(os.str());
    }
    out.pass = true;
    for (size_t i = 0; i < hs.size(); ++i) {
        auto& h = hs[i];
        Rat vt(k);
        Rat b = detail::min3(Rat(detail::val_or_inf(h.alpha, p)) + 2 * vt, Rat(detail::val_or_inf(h.beta, p)) + vt,
                             Rat(detail::val_or_inf(h.gamma, p)) + rv);
        out.h_bounds.push_back(b);
        bool ok = detail::meets_threshold(b, p);
        std::ostringstream os;
        os << "h" << (i + 1) << " v(h-1)>=" << b.get_str() << (ok ? " ok" : " FAIL");
        out.trace.push_back(os.str());
        out.pass = out.pass && ok;
    }
    return out;
}

// Fujiwara root bound on |t| <= l and the triangle inequality on |h - 1|
inline bool archimedean_check(const TrigonalModel& model, const std::vector<KummerFunction>& hs, const Rat& l) {
    std::optional<Rat> r;
    for (auto& h : hs) {
        Rat rest = 1 - abs(h.alpha) * l * l - abs(h.beta) * l;
        if (sgn(rest) <= 0) return false;
        if (sgn(h.gamma) == 0) continue;
        Rat rh = rest / abs(h.gamma);
        if (!r || rh < *r) r = rh;
    }
    if (!r) return true;
    Rat half = *r / 2;
    for (int j = 0; j < model.n; ++j) {
        Rat aj = 0, lp = 1;
        for (int m = 0; m <= model.a[j].degree(); ++m, lp *= l) aj += abs(model.a[j].c[m]) * lp;
        if (aj >= rpow(half, model.n - j)) return false;
    }
    return true;
}

// halve from 1 until the check passes, then 12 bisection steps
inline Rat ell_at_infinity(const TrigonalModel& model, const std::vector<KummerFunction>& hs) {
    require_normalized(hs);
    require_totally_ramified(model);
    Rat lo = 1;
    int halvings = 0;
    while (!archimedean_check(model, hs, lo)) {
        lo /= 2;
        if (++halvings > 4000) throw std::runtime_error("archimedean bound does not converge");
    }
    if (halvings == 0) return lo;
    Rat hi = lo * 2;
    for (int s = 0; s < 12; ++s) {
        Rat mid = (lo + hi) / 2;
        if (archimedean_check(model, hs, mid)) lo = mid;
        else hi = mid;
    }
    return lo;
}

struct PlaceBound {
    Int p;
    int lambda = 0, ell = 0, k = 0;
};

inline PlaceBound bound_at_prime(const TrigonalModel& model, const std::vector<KummerFunction>& hs, const Int& p) {
    PlaceBound b;
    b.p = p;
    b.lambda = lambda_exponent(hs, p);
    b.ell = ell_at_finite_place(model, b.lambda, p);
    if (!verify_sufficiency(model, hs, p, b.ell).pass) throw std::logic_error("hull bound fails the sufficiency check at p = " + p.get_str());
    for (int k = 1; k <= b.ell; ++k)
        if (verify_sufficiency(model, hs, p, k).pass) {
            b.k = k;
            break;
        }
    return b;
}

inline AdmissibilityProfile compute_profile(const TrigonalModel& model, const std::vector<KummerFunction>& hs, const std::vector<Int>& primes,
                                            unsigned workers = 1) {
    AdmissibilityProfile prof;
    auto bounds = parallel_map<PlaceBound>(primes.size(), [&](size_t i) { return bound_at_prime(model, hs, primes[i]); }, workers);
    for (auto& b : bounds) {
        prof.finite[b.p] = b.k;
        std::ostringstream os;
        os << "p=" << b.p << " lambda=" << b.lambda << " ell=" << b.ell << " k=" << b.k;
        prof.provenance.push_back(os.str());
    }
    prof.archimedean = ell_at_infinity(model, hs);
    prof.provenance.push_back("inf l=" + prof.archimedean.get_str() + " lambda=" + lambda_archimedean(hs).get_str());
    return prof;
}

}  // namespace dpcl
