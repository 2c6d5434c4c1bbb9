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

#include "poly.hpp"

namespace dpcl {

// element of F_p; modulus 0 marks an integer constant not yet tied to a prime
class Fp {
  public:
    Fp() = default;
    Fp(int v) : v_(v), p_(0) {}  // NOLINT
    Fp(long long v, long long p) : v_(p ? ((v % p) + p) % p : v), p_(p) {}
    static Fp from(const Rat& q, long long p) {
        Int m(static_cast<long>(p));
        Int den = mod(Int(q.get_den()), m);
        if (den == 0) throw std::domain_error("denominator divisible by p");
        Int n = mod(Int(q.get_num()) * invmod(den, m), m);
        return Fp(n.get_si(), p);
    }

    long long value() const { return v_; }
    long long modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(const Fp& a, const Fp& b) {
        long long p = mod_of(a, b);
        return Fp(norm(a, p) + norm(b, p), p);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        long long p = mod_of(a, b);
        return Fp(norm(a, p) - norm(b, p), p);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        long long p = mod_of(a, b);
        if (!p) return Fp(static_cast<int>(a.v_ * b.v_));
        return Fp(static_cast<long long>((__int128)norm(a, p) * norm(b, p) % p), p);
    }
    Fp operator-() const { return p_ ? Fp(-v_, p_) : Fp(static_cast<int>(-v_)); }
    Fp inverse() const {
        if (!p_) {
            if (v_ == 1 || v_ == -1) return *this;
            throw std::domain_error("Fp inverse without modulus");
        }
        if (v_ == 0) throw std::domain_error("Fp inverse of zero");
        return Fp(invmod(Int(static_cast<long>(v_)), Int(static_cast<long>(p_))).get_si(), p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
    friend bool operator==(const Fp& a, const Fp& b) { return (a - b).is_zero(); }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  private:
    static long long mod_of(const Fp& a, const Fp& b) {
        if (a.p_ && b.p_ && a.p_ != b.p_) throw std::domain_error("Fp moduli differ");
        return a.p_ ? a.p_ : b.p_;
    }
    static long long norm(const Fp& a, long long p) {
        if (!p) return a.v_;
        return ((a.v_ % p) + p) % p;
    }
    long long v_ = 0;
    long long p_ = 0;
};

inline bool is_zero(const Fp& a) { return a.is_zero(); }
inline Fp exact_div(const Fp& a, const Fp& b) { return a / b; }
inline std::string to_string(const Fp& a) { return std::to_string(a.value()); }

using FpPoly = UniPoly<Fp>;

// reduction of a rational polynomial mod p (denominators must be prime to p)
inline FpPoly reduce_mod(const UniPoly<Rat>& f, long long p) {
    std::vector<Fp> c;
    for (auto& a : f.c) c.push_back(Fp::from(a, p));
    return FpPoly(std::move(c));
}

// all roots in F_p, by exhaustive evaluation
inline std::vector<long long> roots_mod_p(const FpPoly& f, long long p) {
    std::vector<long long> out;
    if (f.is_zero()) throw std::domain_error("roots of zero polynomial");
    for (long long x = 0; x < p; ++x)
        if (f(Fp(x, p)).is_zero()) out.push_back(x);
    return out;
}

inline bool squarefree_mod_p(const FpPoly& f) {
    if (f.degree() < 1) return true;
    return gcd(f, f.derivative()).degree() == 0;
}

// degrees of the irreducible factors of a squarefree polynomial of degree <= 3
inline std::vector<int> factor_degrees_small(const FpPoly& f, long long p) {
    if (f.degree() > 3) throw std::domain_error("factor_degrees_small: degree > 3");
    std::vector<int> out;
    FpPoly g = f;
    for (long long r : roots_mod_p(f, p)) {
        out.push_back(1);
        g = divmod(g, FpPoly(std::vector<Fp>{Fp(-r, p), Fp(1, p)})).first;
    }
    if (g.degree() > 0) out.push_back(g.degree());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace dpcl
