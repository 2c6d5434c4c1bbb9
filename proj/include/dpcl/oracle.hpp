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

#include <numeric>

#include "family.hpp"

namespace dpcl {

// primitive binary quadratic form A x^2 + B xy + C y^2
struct Form {
    long long a = 1, b = 1, c = 1;
    friend bool operator==(const Form& x, const Form& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
    friend bool operator<(const Form& x, const Form& y) { return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c); }
};

inline std::string to_string(const Form& f) {
    return "(" + std::to_string(f.a) + "," + std::to_string(f.b) + "," + std::to_string(f.c) + ")";
}

namespace forms {

using i128 = __int128;

inline long long disc(const Form& f) { return static_cast<long long>((i128)f.b * f.b - (i128)4 * f.a * f.c); }

inline bool is_reduced(const Form& f) {
    if (!(std::llabs(f.b) <= f.a && f.a <= f.c)) return false;
    if ((std::llabs(f.b) == f.a || f.a == f.c) && f.b < 0) return false;
    return true;
}

// b into (-a, a], then swap while a > c
inline Form reduce(Form f, long long D) {
    auto norm = [&]() {
        i128 a2 = 2 * (i128)f.a;
        i128 b = f.b % a2;
        if (b > f.a) b -= a2;
        if (b <= -f.a) b += a2;
        f.b = static_cast<long long>(b);
        f.c = static_cast<long long>(((i128)f.b * f.b - D) / (4 * (i128)f.a));
    };
    norm();
    while (f.a > f.c) {
        std::swap(f.a, f.c);
        f.b = -f.b;
        norm();
    }
    if (f.a == f.c && f.b < 0) f.b = -f.b;
    return f;
}

inline long long ext_gcd(long long a, long long b, long long& x, long long& y) {
    long long x0 = 1, y0 = 0, x1 = 0, y1 = 1;
    while (b != 0) {
        long long q = a / b;
        std::tie(a, b) = std::make_tuple(b, a - q * b);
        std::tie(x0, x1) = std::make_tuple(x1, x0 - q * x1);
        std::tie(y0, y1) = std::make_tuple(y1, y0 - q * y1);
    }
    if (a < 0) { a = -a; x0 = -x0; y0 = -y0; }
    x = x0;
    y = y0;
    return a;
}

// Shanks composition followed by reduction
inline Form compose(Form f1, Form f2, long long D) {
    if (f1.a > f2.a) std::swap(f1, f2);
    long long s = (f1.b + f2.b) / 2, n = f2.b - s;
    long long y1 = 0, d = f1.a;
    if (f2.a % f1.a != 0) {
        long long u, v;
        d = ext_gcd(f2.a, f1.a, u, v);
        y1 = u;
    }
    long long x2 = 0, y2 = -1, d1 = d;
    if (s % d != 0) {
        long long xx, yy;
        d1 = ext_gcd(s, d, xx, yy);
        x2 = xx;
        y2 = -yy;
    }
    long long v1 = f1.a / d1, v2 = f2.a / d1;
    i128 r = ((i128)y1 * y2 % v1 * n - (i128)x2 * f2.c) % v1;
    if (r < 0) r += v1;
    Form out;
    out.a = static_cast<long long>((i128)v1 * v2);
    i128 b3 = (i128)f2.b + 2 * (i128)v2 * r;
    i128 a2 = 2 * (i128)out.a;
    b3 %= a2;
    out.b = static_cast<long long>(b3);
    out.c = static_cast<long long>(((i128)out.b * out.b - D) / (4 * (i128)out.a));
    return reduce(out, D);
}

inline Form identity(long long D) {
    Form f;
    f.a = 1;
    f.b = (D % 2 == 0) ? 0 : 1;
    f.c = static_cast<long long>(((i128)f.b * f.b - D) / 4);
    return f;
}

inline long long mulmod(long long x, long long y, long long m) { return static_cast<long long>((i128)x * y % m); }

// smallest prime factors up to n
inline std::vector<int> spf_sieve(long long n) {
    std::vector<int> s(static_cast<size_t>(n) + 1, 0);
    for (long long i = 2; i <= n; ++i)
        if (!s[i])
            for (long long j = i; j <= n; j += i)
                if (!s[j]) s[j] = static_cast<int>(i);
    return s;
}

// all x mod p^k with x^2 = D
inline std::vector<long long> sqrt_mod_prime_power(long long D, long long p, int k) {
    long long pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    std::vector<long long> cur;
    long long dp = ((D % p) + p) % p;
    if (p == 2) {
        for (long long x = 0; x < 2; ++x)
            if ((x * x - dp) % 2 == 0) cur.push_back(x);
    } else if (dp == 0) {
        cur.push_back(0);
    } else {
        long long r = sqrt_mod_prime(dp, p);
        if (r < 0) return {};
        cur.push_back(r);
        if (r != p - r) cur.push_back(p - r);
    }
    long long pj = p;
    bool simple = p != 2 && dp != 0;
    for (int j = 1; j < k; ++j) {
        long long pj1 = pj * p;
        long long dm = ((D % pj1) + pj1) % pj1;
        std::vector<long long> nxt;
        for (long long r : cur) {
            if (simple) {
                // unique Hensel lift
                long long e = ((mulmod(r, r, pj1) - dm) % pj1 + pj1) % pj1 / pj;
                long long inv = Int(invmod(Int(static_cast<long>((2 * r) % p)), Int(static_cast<long>(p)))).get_si();
                long long t = ((p - e % p) % p) * inv % p;
                nxt.push_back(r + t * pj);
                continue;
            }
            for (long long t = 0; t < p; ++t) {
                long long x = r + t * pj;
                if ((mulmod(x, x, pj1) - dm) % pj1 == 0) nxt.push_back(x);
            }
        }
        std::sort(nxt.begin(), nxt.end());
        nxt.erase(std::unique(nxt.begin(), nxt.end()), nxt.end());
        cur = std::move(nxt);
        pj = pj1;
        if (cur.empty()) break;
    }
    return cur;
}

// reduced primitive forms of discriminant D < 0
inline std::vector<Form> reduced_forms(long long D) {
    if (D >= 0) throw std::invalid_argument("real quadratic discriminants are unsupported");
    if (((D % 4) + 4) % 4 > 1) throw std::invalid_argument("discriminant must be 0 or 1 mod 4");
    long long amax = static_cast<long long>(std::sqrt(static_cast<long double>(-D) / 3.0L)) + 1;
    while ((i128)amax * amax * 3 > -(i128)D) --amax;
    auto spf = spf_sieve(4 * amax + 4);
    std::vector<Form> out;
    for (long long a = 1; a <= amax; ++a) {
        long long m = 4 * a;
        // CRT over the prime powers of 4a
        std::vector<long long> sols{0};
        long long mod = 1;
        long long rest = m;
        bool none = false;
        while (rest > 1 && !none) {
            long long p = spf[rest];
            int k = 0;
            long long pk = 1;
            while (rest % p == 0) { rest /= p; ++k; pk *= p; }
            auto roots = sqrt_mod_prime_power(D, p, k);
            if (roots.empty()) { none = true; break; }
            std::vector<long long> next;
            long long u, v;
            ext_gcd(mod, pk, u, v);  // u mod + v pk = 1
            long long nm = mod * pk;
            for (long long s : sols)
                for (long long r : roots) {
                    // x = s mod `mod`, x = r mod pk
                    i128 x = (i128)s + (i128)mod * (((i128)(r - s) % pk * u % pk + pk) % pk);
                    next.push_back(static_cast<long long>(((x % nm) + nm) % nm));
                }
            sols = std::move(next);
            mod = nm;
        }
        if (none) continue;
        std::vector<long long> bs;
        for (long long x : sols) {
            long long b = x % (2 * a);
            if (b > a) b -= 2 * a;
            bs.push_back(b);
        }
        std::sort(bs.begin(), bs.end());
        bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
        for (long long b : bs) {
            if (b == -a) continue;
            i128 num = (i128)b * b - D;
            long long c = static_cast<long long>(num / (4 * a));
            if (c < a) continue;
            if (b < 0 && (a == c)) continue;
            if (std::gcd(std::gcd(a, std::llabs(b)), c) != 1) continue;
            out.push_back({a, b, c});
        }
    }
    return out;
}

}  // namespace forms

struct FormClassGroup {
    long long discriminant = 0;
    std::vector<Form> reduced;
    std::vector<long long> elementary_divisors;   // filled when the class number is small
    int two_rank = 0;
    size_t class_number() const { return reduced.size(); }
};

namespace detail {

inline int log2_exact(size_t n) {
    int r = 0;
    while ((size_t(1) << r) < n) ++r;
    if ((size_t(1) << r) != n) throw std::logic_error("2-torsion count is not a power of 2");
    return r;
}

// invariant factors from |G[p^j]| for every p | h
inline std::vector<long long> group_structure(const std::vector<Form>& g, long long D) {
    size_t h = g.size();
    std::map<Form, size_t> index;
    for (size_t i = 0; i < h; ++i) index[g[i]] = i;
    Form id = forms::identity(D);
    auto power = [&](Form f, long long e) {
        Form r = id;
        while (e > 0) {
            if (e & 1) r = forms::compose(r, f, D);
            f = forms::compose(f, f, D);
            e >>= 1;
        }
        return r;
    };
    std::map<long long, std::vector<int>> parts;   // p -> exponents of cyclic factors
    long long hh = static_cast<long long>(h);
    for (long long p = 2; hh > 1; ++p) {
        if (hh % p) continue;
        int k = 0;
        while (hh % p == 0) { hh /= p; ++k; }
        // n_j = log_p |G[p^j]|
        std::vector<int> n{0};
        long long pj = 1;
        for (int j = 1; j <= k; ++j) {
            pj *= p;
            size_t cnt = 0;
            for (auto& f : g)
                if (power(f, pj) == id) ++cnt;
            int e = 0;
            for (size_t c = cnt; c > 1; c /= static_cast<size_t>(p)) ++e;
            n.push_back(e);
            if (e == k) break;
        }
        // number of cyclic factors of order >= p^j is n_j - n_{j-1}
        std::vector<int> exps;
        for (size_t j = 1; j < n.size(); ++j) {
            int ge = n[j] - n[j - 1];
            int ge_next = j + 1 < n.size() ? n[j + 1] - n[j] : 0;
            for (int c = 0; c < ge - ge_next; ++c) exps.push_back(static_cast<int>(j));
        }
        parts[p] = exps;
    }
    // combine p-parts into invariant factors d_1 | d_2 | ...
    size_t len = 0;
    for (auto& [p, e] : parts) len = std::max(len, e.size());
    std::vector<long long> out(len, 1);
    for (auto& [p, e] : parts) {
        std::vector<int> s = e;
        std::sort(s.begin(), s.end());
        for (size_t i = 0; i < s.size(); ++i) {
            long long q = 1;
            for (int j = 0; j < s[i]; ++j) q *= p;
            out[len - s.size() + i] *= q;
        }
    }
    return out;
}

}  // namespace detail

// enumerates Cl(D) by reduced forms; 2-rank from the squaring map, cross-checked with ambiguous forms
inline FormClassGroup form_class_group(long long D, size_t structure_limit = 2000) {
    FormClassGroup g;
    g.discriminant = D;
    g.reduced = forms::reduced_forms(D);
    Form id = forms::identity(D);
    size_t two = 0, ambiguous = 0;
    for (auto& f : g.reduced) {
        if (forms::compose(f, f, D) == id) ++two;
        if (f.b == 0 || f.b == f.a || f.a == f.c) ++ambiguous;
    }
    if (two != ambiguous) throw std::logic_error("ambiguous form count disagrees with the 2-torsion count");
    g.two_rank = detail::log2_exact(two);
    if (g.reduced.size() <= structure_limit) g.elementary_divisors = detail::group_structure(g.reduced, D);
    return g;
}

inline int class_group_2rank(long long D) { return form_class_group(D, 0).two_rank; }

inline bool is_fundamental_discriminant(long long D) {
    Int d(static_cast<long>(D));
    Int m4 = mod(d, Int(4));
    if (m4 == 1) return squarefree_part(d) == d;
    if (m4 != 0) return false;
    Int m = d / 4, r = mod(m, Int(4));
    if (r != 2 && r != 3) return false;
    return squarefree_part(m) == m;
}

// discriminant of Q(sqrt(v)), v a nonzero non-square
inline Int fundamental_discriminant(const Int& v) {
    Int s = squarefree_part(v);
    if (s == 1) throw std::invalid_argument("square: no quadratic field");
    return mod(s, Int(4)) == 1 ? s : Int(4 * s);
}

// y^2 = x(x+a)(x+b) with x = t, the degree-2 map, and the descent functions (x+a)(x+b), x+a
struct QuadFamily {
    Int a, b;
    TrigonalModel model;
    std::vector<KummerFunction> h;
    std::vector<Int> primes;
    AdmissibilityProfile profile;
};

inline QuadFamily build_quad_family(const Int& a, const Int& b, unsigned workers = 1) {
    if (sgn(a) == 0 || sgn(b) == 0 || a == b) throw std::invalid_argument("roots 0, -a, -b must be distinct");
    QuadFamily q;
    q.a = a;
    q.b = b;
    QPoly t = QPoly::x();
    QPoly cubic = t * QPoly(std::vector<Rat>{Rat(a), Rat(1)}) * QPoly(std::vector<Rat>{Rat(b), Rat(1)});
    q.model = make_model({-cubic, QPoly()});
    KummerFunction h1, h2;
    Rat ab = Rat(a * b);
    h1.alpha = 1 / ab;
    h1.beta = Rat(a + b) / ab;
    h1.delta = 1;
    h1.index = 1;
    h2.beta = 1 / Rat(a);
    h2.delta = 1;
    h2.index = 2;
    q.h = {h1, h2};
    std::set<Int> s{2};
    for (auto& p : prime_divisors(Int(a * b * (a - b)))) s.insert(p);
    q.primes.assign(s.begin(), s.end());
    q.profile = compute_profile(q.model, q.h, q.primes, workers);
    return q;
}

struct OracleMember {
    Rat q;
    Int discriminant;          // fundamental
    Int conductor_square;      // radicand / (squarefree part), logged
    size_t class_number = 0;
    int two_rank = 0;
    size_t independence_rank = 0;
};

struct OracleReport {
    Int a, b;
    AdmissibilityProfile profile;
    std::vector<OracleMember> members;
    std::vector<std::string> skipped;
    int min_rank = 0;
    Rat mean_rank = 0;
    bool assertion_holds = true;
};

inline OracleReport validate_family(const Int& a, const Int& b, size_t count, unsigned workers = 1) {
    OracleReport rep;
    rep.a = a;
    rep.b = b;
    if (count == 0) {
        rep.profile = build_quad_family(a, b, workers).profile;
        return rep;
    }
    QuadFamily fam = build_quad_family(a, b, workers);
    rep.profile = fam.profile;
    // candidates in height order; imaginary fibres only
    size_t want = count * 4 + 16;
    for (;;) {
        auto ts = enumerate_admissible(fam.profile, want, SignStrategy::Both);
        std::vector<Rat> imag;
        for (auto& t : ts) {
            Rat v = t * (t + Rat(a)) * (t + Rat(b));
            if (sgn(v) < 0) imag.push_back(t);
        }
        auto outs = certify_many(fam.model, fam.h, fam.profile, imag, {}, workers);
        std::vector<OracleMember> certified;
        std::vector<std::string> skipped;
        for (auto& o : outs) {
            if (certified.size() == count) break;
            if (!o.certificate || o.certificate->overall != Verdict::Pass) {
                skipped.push_back(o.t.get_str() + ": " + (o.certificate ? verdict_name(o.certificate->overall) : o.skipped));
                continue;
            }
            OracleMember m;
            m.q = o.t;
            Rat v = o.t * (o.t + Rat(a)) * (o.t + Rat(b));
            // square class of v: numerator * denominator, factored piecewise
            Int n = o.t.get_num(), d = o.t.get_den();
            std::map<Int, int> ex;
            for (const Int& part : {Int(n), Int(n + a * d), Int(n + b * d), Int(d)})
                for (auto& [p, e] : factor(part)) ex[p] += e;
            Int s = sgn(v) < 0 ? Int(-1) : Int(1);
            for (auto& [p, e] : ex)
                if (e % 2) s *= p;
            m.discriminant = mod(s, Int(4)) == 1 ? s : Int(4 * s);
            m.conductor_square = Int(v.get_num() * v.get_den()) / s;
            if (abs(m.discriminant) >= Int(1) << 62) throw std::runtime_error("discriminant too large for the form code");
            FormClassGroup g = form_class_group(m.discriminant.get_si(), 0);
            m.class_number = g.class_number();
            m.two_rank = g.two_rank;
            m.independence_rank = o.certificate->independence.rank;
            certified.push_back(m);
        }
        if (certified.size() == count || ts.size() < want) {
            rep.members = std::move(certified);
            rep.skipped = std::move(skipped);
            break;
        }
        want *= 2;
    }
    if (!rep.members.empty()) {
        rep.min_rank = rep.members.front().two_rank;
        Rat sum = 0;
        for (auto& m : rep.members) {
            rep.min_rank = std::min(rep.min_rank, m.two_rank);
            sum += m.two_rank;
        }
        rep.mean_rank = sum / static_cast<long>(rep.members.size());
        rep.assertion_holds = rep.min_rank >= 2;
    }
    return rep;
}

}  // namespace dpcl
