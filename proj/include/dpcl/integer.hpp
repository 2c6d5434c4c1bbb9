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

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dpcl {

using Int = mpz_class;
using Rat = mpq_class;

// valuation of zero
inline constexpr long kInfVal = std::numeric_limits<long>::max() / 4;

inline Rat make_rat(const Int& n, const Int& d) {
    if (d == 0) throw std::domain_error("zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(const Int& x) { return sgn(x) == 0; }
inline Rat exact_div(const Rat& a, const Rat& b) { return a / b; }
inline std::string to_string(const Rat& x) { return x.get_str(); }
inline std::string to_string(const Int& x) { return x.get_str(); }

inline Int ipow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Rat rpow(const Rat& b, long e) {
    Rat r(1);
    Rat base = e >= 0 ? b : Rat(1) / b;
    for (long k = std::labs(e); k > 0; --k) r *= base;
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// floor division and nonnegative remainder
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int invmod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("not invertible modulo " + m.get_str());
    return r;
}

inline Int powmod(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int isqrt(const Int& n) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline bool is_square(const Int& n) { return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

inline bool is_probable_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

inline Int next_prime(const Int& n) {
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

inline long valuation(Int n, const Int& p) {
    if (n == 0) return kInfVal;
    long v = 0;
    v = static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
    return v;
}

inline long valuation(const Rat& q, const Int& p) {
    if (sgn(q) == 0) return kInfVal;
    return valuation(Int(q.get_num()), p) - valuation(Int(q.get_den()), p);
}

// p-adic unit part u with q = p^v u
inline Rat unit_part(const Rat& q, const Int& p) {
    long v = valuation(q, p);
    return q / rpow(Rat(p), v);
}

inline Int bit_length(const Int& n) { return Int(static_cast<unsigned long>(sgn(n) == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2))); }

inline std::vector<long> primes_up_to(long n) {
    std::vector<long> out;
    if (n < 2) return out;
    std::vector<bool> comp(static_cast<size_t>(n) + 1, false);
    for (long i = 2; i <= n; ++i) {
        if (comp[i]) continue;
        out.push_back(i);
        for (long j = i * i; j <= n; j += i) comp[j] = true;
    }
    return out;
}

namespace detail {

inline Int rho_factor(const Int& n, unsigned long seed) {
    // Brent's cycle variant
    if (mpz_even_p(n.get_mpz_t())) return Int(2);
    Int c(seed), y(2), x, g(1), q(1), ys;
    unsigned long r = 1, m = 128;
    auto f = [&](const Int& v) { return mod(v * v + c, n); };
    while (g == 1) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            unsigned long lim = std::min(m, r - k);
            for (unsigned long i = 0; i < lim; ++i) {
                y = f(y);
                q = mod(q * abs(Int(x - y)), n);
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        do {
            ys = f(ys);
            g = gcd(abs(Int(x - ys)), n);
        } while (g == 1);
    }
    return g;
}

inline void factor_into(Int n, std::map<Int, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out[n]++;
        return;
    }
    for (unsigned long seed = 1;; ++seed) {
        Int d = rho_factor(n, seed);
        if (d != n && d != 1) {
            factor_into(d, out);
            factor_into(Int(n / d), out);
            return;
        }
    }
}

}  // namespace detail

// prime factorization of |n|, n != 0
inline std::map<Int, int> factor(const Int& n) {
    if (n == 0) throw std::domain_error("factor(0)");
    std::map<Int, int> out;
    Int m = abs(n);
    static const std::vector<long> small = primes_up_to(10000);
    for (long p : small) {
        if (m == 1) break;
        if (Int(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
            m /= p;
            out[Int(p)]++;
        }
    }
    if (m != 1) detail::factor_into(m, out);
    return out;
}

inline std::vector<Int> prime_divisors(const Int& n) {
    std::vector<Int> out;
    for (auto& [p, e] : factor(n)) out.push_back(p);
    return out;
}

// squarefree kernel with sign: n = s * square
inline Int squarefree_part(const Int& n) {
    Int s = sgn(n) < 0 ? Int(-1) : Int(1);
    for (auto& [p, e] : factor(n))
        if (e % 2) s *= p;
    return s;
}

// a/b with |a| <= nbound, 0 < b <= dbound and a = b x mod m, if any
inline bool rational_reconstruct(const Int& x, const Int& m, const Int& nbound, const Int& dbound, Rat& out) {
    Int r0 = m, r1 = mod(x, m), s0 = 0, s1 = 1;
    while (r1 > nbound) {
        Int q = fdiv(r0, r1);
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2; s0 = s1; s1 = s2;
    }
    if (s1 == 0 || abs(s1) > dbound) return false;
    if (gcd(abs(s1), r1) != 1) return false;
    out = make_rat(r1, s1);
    return true;
}

// Tonelli-Shanks; p odd prime, a a square mod p
inline long long sqrt_mod_prime(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    Int r = powmod(Int(static_cast<long>(a)), Int(static_cast<long>((p - 1) / 2)), Int(static_cast<long>(p)));
    if (r != 1) return -1;
    if (p % 4 == 3) return powmod(Int(static_cast<long>(a)), Int(static_cast<long>((p + 1) / 4)), Int(static_cast<long>(p))).get_si();
    auto mulm = [p](long long x, long long y) { return static_cast<long long>((__int128)x * y % p); };
    auto powm = [&](long long b, long long e) {
        long long res = 1;
        b %= p;
        while (e > 0) {
            if (e & 1) res = mulm(res, b);
            b = mulm(b, b);
            e >>= 1;
        }
        return res;
    };
    long long q = p - 1, s = 0;
    while (q % 2 == 0) { q /= 2; ++s; }
    long long z = 2;
    while (powm(z, (p - 1) / 2) != p - 1) ++z;
    long long m = s, c = powm(z, q), t = powm(a, q), x = powm(a, (q + 1) / 2);
    while (t != 1) {
        long long i = 0, tt = t;
        while (tt != 1) { tt = mulm(tt, tt); ++i; }
        long long b = c;
        for (long long j = 0; j < m - i - 1; ++j) b = mulm(b, b);
        m = i;
        c = mulm(b, b);
        t = mulm(t, c);
        x = mulm(x, b);
    }
    return x;
}

inline int legendre(const Int& a, const Int& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

}  // namespace dpcl
