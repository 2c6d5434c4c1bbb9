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

#include "localbounds.hpp"
#include "roots.hpp"

namespace dpcl {

enum class Verdict { Pass, Fail, Undetermined };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Undetermined: return "UNDETERMINED";
    }
    return "?";
}

enum class SignStrategy { Positive, Negative, Both };

// t = M n / d in increasing height: by d, then |n|, positive before negative
inline std::vector<Rat> enumerate_admissible(const AdmissibilityProfile& prof, size_t count, SignStrategy strategy = SignStrategy::Positive) {
    std::vector<Rat> out;
    if (count == 0) return out;
    Int M = prof.modulus();
    Rat l = prof.archimedean;
    if (sgn(l) <= 0) throw std::invalid_argument("archimedean bound must be positive");
    // |M n / d| < l needs d > M / l
    Rat dmin = Rat(M) / l;
    Int d = Int(dmin.get_num() / dmin.get_den());
    if (d < 1) d = 1;
    for (;; ++d) {
        bool ok = true;
        for (auto& [p, k] : prof.finite)
            if (d % p == 0) ok = false;
        if (!ok) continue;
        for (Int n = 1;; ++n) {
            Rat t = make_rat(M * n, d);
            if (t >= l) break;
            if (gcd(M * n, d) != 1) continue;
            if (strategy != SignStrategy::Negative) out.push_back(t);
            if (out.size() == count) return out;
            if (strategy != SignStrategy::Positive) out.push_back(-t);
            if (out.size() == count) return out;
        }
    }
}

struct FibreField {
    QPoly poly;            // the fibre polynomial, monic in W
    QPoly integral;        // monic with integer coefficients: D^n poly(Y / D)
    Int scale = 1;         // D, the lcm of the denominators
    Int discriminant = 0;  // of the integral model
    int real_embeddings = 0;
    int degree() const { return poly.degree(); }
};

struct ReducibleFibre : std::runtime_error {
    Rat t;
    explicit ReducibleFibre(const Rat& tt)
        : std::runtime_error("Hilbert-exceptional t = " + tt.get_str() + ": fibre polynomial is reducible"), t(tt) {}
};

inline FibreField field_from_poly(const QPoly& f) {
    if (f.degree() < 2 || f.degree() > 3 || f.lead() != 1) throw std::invalid_argument("fibre polynomial must be monic of degree 2 or 3");
    FibreField k;
    k.poly = f;
    int n = f.degree();
    // lcm of denominators: not minimal, but needs no factoring of large integers
    for (int j = 0; j < n; ++j) k.scale = lcm(k.scale, Int(f.c[j].get_den()));
    std::vector<Rat> c(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) c[j] = f.c[j] * rpow(Rat(k.scale), n - j);
    k.integral = QPoly(c);
    k.discriminant = Int(discriminant(k.integral).get_num());
    if (sgn(k.discriminant) == 0) throw std::runtime_error("fibre polynomial is not separable");
    if (!rational_roots(f).empty()) throw std::runtime_error("reducible");
    k.real_embeddings = static_cast<int>(RealRootIsolator(f).isolate().size());
    return k;
}

inline FibreField fibre_field(const TrigonalModel& model, const Rat& t) {
    QPoly f = model.fibre(t);
    if (!rational_roots(f).empty()) throw ReducibleFibre(t);
    return field_from_poly(f);
}

// a place of Q(theta) over p, located by a chain of Newton polygons around rational centres
struct PadicPlace {
    int e = 1, f = 1;
    Rat root_valuation;   // v(theta)
    Rat center;           // theta - center has valuation mu at every root of the place
    Rat mu;
    long residue = -1;    // e = f = 1: (theta - center) / p^mu mod p
};

struct PlaceDecomposition {
    bool determined = true;
    std::vector<PadicPlace> places;
};

namespace detail {

inline QPoly shift_poly(const QPoly& f, const Rat& c) { return f.compose(QPoly(std::vector<Rat>{c, Rat(1)})); }

struct Seg {
    Rat mu;
    int e = 1;
    FpPoly residual;
};

// segments of the Newton polygon of g with root valuation > floor_mu, with residual polynomials
inline std::vector<Seg> segments_above(const QPoly& g, long long p, const std::optional<Rat>& floor_mu) {
    std::vector<std::pair<int, PadicValuation>> pts;
    Int P(static_cast<long>(p));
    for (int i = 0; i <= g.degree(); ++i) pts.emplace_back(i, PadicValuation::of(g.coeff(i), P));
    std::vector<Seg> out;
    for (auto& s : newton_polygon(pts)) {
        Rat mu = s.root_valuation();
        if (floor_mu && mu <= *floor_mu) continue;
        Seg sg;
        sg.mu = mu;
        sg.e = static_cast<int>(Int(mu.get_den()).get_si());
        std::vector<Fp> rc;
        for (int i = s.i0; i <= s.i1; i += sg.e) {
            Rat line = s.v0 - mu * (i - s.i0);
            Rat gi = g.coeff(i);
            if (sgn(gi) != 0 && Rat(valuation(gi, P)) == line) {
                Rat u = gi / rpow(Rat(P), Int(line.get_num()).get_si());
                rc.push_back(Fp::from(u, p));
            } else {
                rc.push_back(Fp(0LL, p));
            }
        }
        sg.residual = FpPoly(std::move(rc));
        out.push_back(std::move(sg));
    }
    return out;
}

inline Rat ppow(long long p, const Rat& mu) {
    if (mu.get_den() != 1) throw std::logic_error("integral exponent expected");
    return rpow(Rat(Int(static_cast<long>(p))), Int(mu.get_num()).get_si());
}

inline bool decompose(const QPoly& f, long long p, const Rat& center, const std::optional<Rat>& floor_mu, const std::optional<Rat>& top_mu,
                      long cap, PlaceDecomposition& out) {
    QPoly g = shift_poly(f, center);
    if (sgn(g.coeff(0)) == 0) throw std::runtime_error("fibre polynomial has a rational root");
    for (auto& s : segments_above(g, p, floor_mu)) {
        Rat vtheta = top_mu ? *top_mu : s.mu;
        FpPoly r = s.residual;
        if (s.e > 1 || squarefree_mod_p(r)) {
            FpPoly rest = r;
            for (long long x : roots_mod_p(r, p)) {
                PadicPlace pl;
                pl.e = s.e;
                pl.f = 1;
                pl.root_valuation = vtheta;
                pl.center = center;
                pl.mu = s.mu;
                if (s.e == 1) pl.residue = x;
                out.places.push_back(pl);
                rest = divmod(rest, FpPoly(std::vector<Fp>{Fp(-x, p), Fp(1LL, p)})).first;
            }
            if (rest.degree() > 0) {
                PadicPlace pl;
                pl.e = s.e;
                pl.f = rest.degree();
                pl.root_valuation = vtheta;
                pl.center = center;
                pl.mu = s.mu;
                out.places.push_back(pl);
            }
            continue;
        }
        // e = 1 with a repeated residual root: recentre and look closer
        if (s.mu > cap) {
            out.determined = false;
            return false;
        }
        // roots with multiplicity (the derivative can vanish identically for p = 2, 3)
        FpPoly rest = r;
        for (long long x : roots_mod_p(r, p)) {
            FpPoly lin(std::vector<Fp>{Fp(-x, p), Fp(1LL, p)});
            int mult = 0;
            for (;;) {
                auto [qq, rr] = divmod(rest, lin);
                if (!rr.is_zero()) break;
                rest = qq;
                ++mult;
            }
            if (mult == 1) {
                PadicPlace pl;
                pl.root_valuation = vtheta;
                pl.center = center;
                pl.mu = s.mu;
                pl.residue = x;
                out.places.push_back(pl);
                continue;
            }
            Rat c2 = center + Rat(static_cast<long>(x)) * ppow(p, s.mu);
            if (!decompose(f, p, c2, s.mu, vtheta, cap, out)) return false;
        }
        // what is left has no roots and degree <= 3, hence is irreducible
        if (rest.degree() > 0) {
            PadicPlace pl;
            pl.f = rest.degree();
            pl.root_valuation = vtheta;
            pl.center = center;
            pl.mu = s.mu;
            out.places.push_back(pl);
        }
    }
    return true;
}

}  // namespace detail

inline PlaceDecomposition padic_places(const QPoly& f, long long p, long cap = 320) {
    PlaceDecomposition out;
    detail::decompose(f, p, Rat(0), std::nullopt, std::nullopt, cap, out);
    if (out.determined) {
        int total = 0;
        for (auto& pl : out.places) total += pl.e * pl.f;
        if (total != f.degree()) throw std::logic_error("place degrees do not add up");
    }
    return out;
}

// v(A + gamma theta) at the roots of a place; nullopt when the working precision runs out
inline std::optional<Rat> place_valuation(const QPoly& f, long long p, const PadicPlace& pl, const Rat& A, const Rat& gamma, long cap) {
    Int P(static_cast<long>(p));
    if (sgn(gamma) == 0) {
        if (sgn(A) == 0) throw std::runtime_error("support collision: move the representative");
        return Rat(valuation(A, P));
    }
    Rat c = pl.center, mu = pl.mu;
    long residue = pl.residue;
    Rat vg(valuation(gamma, P));
    for (;;) {
        Rat B = A + gamma * c;
        Rat target = vg + mu;
        if (sgn(B) != 0) {
            Rat vb(valuation(B, P));
            if (vb < target) return vb;
            if (vb > target) return target;
        } else {
            return target;
        }
        // v(B) = v(gamma) + mu: cancellation possible only at an unramified degree-1 place
        if (pl.e > 1 || pl.f > 1) return target;
        if (mu > cap) return std::nullopt;
        Rat c2 = c + Rat(static_cast<long>(residue)) * detail::ppow(p, mu);
        QPoly g = detail::shift_poly(f, c2);
        if (sgn(g.coeff(0)) == 0) throw std::runtime_error("fibre polynomial has a rational root");
        auto segs = detail::segments_above(g, p, mu);
        if (segs.size() != 1 || segs[0].residual.degree() != 1) throw std::logic_error("lost track of a simple p-adic root");
        c = c2;
        mu = segs[0].mu;
        residue = roots_mod_p(segs[0].residual, p).at(0);
    }
}

struct ParityCheck {
    int h = 0;
    Int p;
    int place = 0;
    int e = 1, f = 1;
    std::optional<Rat> valuation;
    Verdict verdict = Verdict::Undetermined;
};

struct Square2Check {
    int h = 0;
    int place = 0;
    Rat bound;   // lower bound for v(x - 1)
    Verdict verdict = Verdict::Undetermined;
};

struct SignCheck {
    int h = 0;
    int embedding = 0;
    int sign = 0;
    Verdict verdict = Verdict::Fail;
};

struct IndependenceEvidence {
    size_t rank = 0;
    std::vector<Int> auxiliary_primes;
    std::vector<std::vector<int>> matrix;   // one row per x_i
    bool inconclusive = false;
};

struct FieldCertificate {
    Rat t;
    FibreField field;
    std::vector<Rat> x_const, x_gamma;   // x_i = x_const + x_gamma theta
    std::map<Int, std::vector<PadicPlace>> places;
    std::vector<ParityCheck> parity_checks;
    std::vector<Square2Check> square2_checks;
    std::vector<SignCheck> sign_checks;
    IndependenceEvidence independence;
    Verdict overall = Verdict::Undetermined;
    long precision = 20;
};

// F2 vectors from parities over S, real signs and residue symbols at split auxiliary primes
inline IndependenceEvidence independence_rank(const FibreField& k, const std::vector<Rat>& xc, const std::vector<Rat>& xg,
                                              const std::vector<std::vector<int>>& local_bits, const std::vector<Int>& avoid, size_t budget) {
    IndependenceEvidence ev;
    size_t m = xc.size();
    ev.matrix = local_bits;
    ev.matrix.resize(m);
    Int bad = k.discriminant * k.scale;
    for (size_t i = 0; i < m; ++i) bad *= Int(xc[i].get_den()) * Int(xg[i].get_den());
    for (long q = 3; ev.auxiliary_primes.size() < budget; q = next_prime(Int(q)).get_si()) {
        Int Q(q);
        if (bad % Q == 0 || std::find(avoid.begin(), avoid.end(), Q) != avoid.end()) continue;
        FpPoly fr = reduce_mod(k.poly, q);
        auto roots = roots_mod_p(fr, q);
        if (static_cast<int>(roots.size()) != k.degree()) continue;
        std::vector<std::vector<int>> cols(m);
        bool ok = true;
        for (size_t i = 0; i < m && ok; ++i)
            for (long long r : roots) {
                Fp v = Fp::from(xc[i], q) + Fp::from(xg[i], q) * Fp(r, q);
                if (v.is_zero()) { ok = false; break; }
                cols[i].push_back(legendre(Int(static_cast<long>(v.value())), Q) == -1 ? 1 : 0);
            }
        if (!ok) continue;
        ev.auxiliary_primes.push_back(Q);
        for (size_t i = 0; i < m; ++i) ev.matrix[i].insert(ev.matrix[i].end(), cols[i].begin(), cols[i].end());
    }
    ev.rank = f2_rank(ev.matrix);
    ev.inconclusive = ev.rank < m;
    return ev;
}

struct CertifyOptions {
    long precision = 20;       // starting p-adic precision; doubled up to 4 times
    size_t aux_budget = 24;
};

inline FieldCertificate certify(const TrigonalModel& model, const std::vector<KummerFunction>& hs, const AdmissibilityProfile& prof, const Rat& t,
                                const CertifyOptions& opt = {}) {
    require_normalized(hs);
    FieldCertificate c;
    c.t = t;
    c.precision = opt.precision;
    c.field = fibre_field(model, t);
    const QPoly& f = c.field.poly;
    for (auto& h : hs) {
        Rat A = h.alpha * t * t + h.beta * t + h.delta;
        if (sgn(h.gamma) == 0 && sgn(A) == 0) throw std::runtime_error("support collision: P_t is a zero of h; move the representative");
        c.x_const.push_back(A);
        c.x_gamma.push_back(h.gamma);
    }
    long cap = opt.precision << 4;
    std::vector<std::vector<int>> bits(hs.size());
    bool undetermined = false, failed = false;
    for (auto& [p, kp] : prof.finite) {
        long long pl = p.get_si();
        PlaceDecomposition dec = padic_places(f, pl, cap);
        if (!dec.determined) {
            undetermined = true;
            for (size_t i = 0; i < hs.size(); ++i) c.parity_checks.push_back({static_cast<int>(i) + 1, p, -1, 0, 0, std::nullopt, Verdict::Undetermined});
            continue;
        }
        c.places[p] = dec.places;
        for (size_t w = 0; w < dec.places.size(); ++w) {
            auto& place = dec.places[w];
            for (size_t i = 0; i < hs.size(); ++i) {
                ParityCheck pc;
                pc.h = static_cast<int>(i) + 1;
                pc.p = p;
                pc.place = static_cast<int>(w);
                pc.e = place.e;
                pc.f = place.f;
                pc.valuation = place_valuation(f, pl, place, c.x_const[i], c.x_gamma[i], cap);
                if (!pc.valuation) {
                    pc.verdict = Verdict::Undetermined;
                    undetermined = true;
                } else {
                    Rat ord = *pc.valuation * place.e;
                    if (ord.get_den() != 1) throw std::logic_error("non-integral order at a place");
                    bool even = Int(ord.get_num()) % 2 == 0;
                    pc.verdict = even ? Verdict::Pass : Verdict::Fail;
                    failed = failed || !even;
                    bits[i].push_back(even ? 0 : 1);
                }
                c.parity_checks.push_back(pc);
                if (p == 2) {
                    Square2Check sc;
                    sc.h = pc.h;
                    sc.place = pc.place;
                    Rat a1 = c.x_const[i] - 1;
                    Rat b1 = sgn(a1) ? Rat(valuation(a1, p)) : Rat(kInfVal);
                    Rat b2 = sgn(c.x_gamma[i]) ? Rat(valuation(c.x_gamma[i], p)) + place.root_valuation : Rat(kInfVal);
                    sc.bound = std::min(b1, b2);
                    sc.verdict = sc.bound >= 3 ? Verdict::Pass : Verdict::Fail;
                    failed = failed || sc.verdict == Verdict::Fail;
                    c.square2_checks.push_back(sc);
                }
            }
        }
    }
    RealRootIsolator iso(f);
    auto roots = iso.isolate();
    for (size_t r = 0; r < roots.size(); ++r)
        for (size_t i = 0; i < hs.size(); ++i) {
            SignCheck sc;
            sc.h = static_cast<int>(i) + 1;
            sc.embedding = static_cast<int>(r);
            sc.sign = iso.sign_linear(roots[r], c.x_const[i], c.x_gamma[i]);
            if (sc.sign == 0) throw std::runtime_error("support collision at a real place");
            sc.verdict = sc.sign > 0 ? Verdict::Pass : Verdict::Fail;
            failed = failed || sc.sign < 0;
            bits[i].push_back(sc.sign < 0 ? 1 : 0);
            c.sign_checks.push_back(sc);
        }
    std::vector<Int> avoid;
    for (auto& [p, k] : prof.finite) avoid.push_back(p);
    c.independence = independence_rank(c.field, c.x_const, c.x_gamma, bits, avoid, opt.aux_budget);
    c.overall = failed ? Verdict::Fail : undetermined ? Verdict::Undetermined : Verdict::Pass;
    return c;
}

struct CertifyOutcome {
    Rat t;
    std::optional<FieldCertificate> certificate;
    std::string skipped;   // reason when there is no certificate
};

// independent per t; results in input order
inline std::vector<CertifyOutcome> certify_many(const TrigonalModel& model, const std::vector<KummerFunction>& hs, const AdmissibilityProfile& prof,
                                                const std::vector<Rat>& ts, const CertifyOptions& opt = {}, unsigned workers = 1) {
    return parallel_map<CertifyOutcome>(ts.size(), [&](size_t i) {
        CertifyOutcome o;
        o.t = ts[i];
        try {
            o.certificate = certify(model, hs, prof, ts[i], opt);
        } catch (const ReducibleFibre& e) {
            o.skipped = e.what();
        }
        return o;
    }, workers);
}

}  // namespace dpcl
