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

#include <memory>
#include <sstream>

#include "resultant.hpp"

namespace dpcl {

// Q[x]/(m) with m monic irreducible
class NumberField {
  public:
    explicit NumberField(UniPoly<Rat> modulus, std::string gen = "a") : modulus_(monic(modulus)), gen_(std::move(gen)) {
        if (modulus_.degree() < 1) throw std::invalid_argument("number field modulus must have degree >= 1");
    }
    const UniPoly<Rat>& modulus() const { return modulus_; }
    int degree() const { return modulus_.degree(); }
    const std::string& generator_name() const { return gen_; }

  private:
    UniPoly<Rat> modulus_;
    std::string gen_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

inline FieldPtr make_field(const UniPoly<Rat>& modulus, const std::string& gen = "a") {
    return std::make_shared<const NumberField>(modulus, gen);
}

// element of a simple extension in the power basis; a null field means a rational scalar
class NumberFieldElem {
  public:
    NumberFieldElem() : coords_{Rat(0)} {}
    NumberFieldElem(int v) : coords_{Rat(v)} {}          // NOLINT
    NumberFieldElem(const Rat& v) : coords_{v} {}        // NOLINT
    NumberFieldElem(FieldPtr k, const UniPoly<Rat>& p) : field_(std::move(k)) { set_from_poly(p); }

    static NumberFieldElem generator(const FieldPtr& k) { return NumberFieldElem(k, UniPoly<Rat>::x()); }

    const FieldPtr& field() const { return field_; }
    int degree() const { return field_ ? field_->degree() : 1; }
    Rat coord(int i) const { return i < static_cast<int>(coords_.size()) ? coords_[i] : Rat(0); }
    const std::vector<Rat>& coords() const { return coords_; }
    std::vector<Rat> coords_in(int deg) const {
        std::vector<Rat> out(static_cast<size_t>(deg), Rat(0));
        for (size_t i = 0; i < coords_.size() && i < out.size(); ++i) out[i] = coords_[i];
        return out;
    }
    UniPoly<Rat> as_poly() const { return UniPoly<Rat>(coords_); }

    bool is_zero() const {
        for (auto& a : coords_)
            if (sgn(a) != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < coords_.size(); ++i)
            if (sgn(coords_[i]) != 0) return false;
        return true;
    }

    NumberFieldElem operator-() const {
        NumberFieldElem r = *this;
        for (auto& a : r.coords_) a = -a;
        return r;
    }
    friend NumberFieldElem operator+(const NumberFieldElem& a, const NumberFieldElem& b) {
        FieldPtr k = common(a, b);
        return NumberFieldElem(k, a.as_poly() + b.as_poly());
    }
    friend NumberFieldElem operator-(const NumberFieldElem& a, const NumberFieldElem& b) {
        FieldPtr k = common(a, b);
        return NumberFieldElem(k, a.as_poly() - b.as_poly());
    }
    friend NumberFieldElem operator*(const NumberFieldElem& a, const NumberFieldElem& b) {
        FieldPtr k = common(a, b);
        return NumberFieldElem(k, a.as_poly() * b.as_poly());
    }
    NumberFieldElem inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero in number field");
        if (!field_) return NumberFieldElem(Rat(1) / coords_[0]);
        UniPoly<Rat> g, s, t;
        xgcd(as_poly(), field_->modulus(), g, s, t);
        if (g.degree() != 0) throw std::domain_error("number field modulus is reducible");
        return NumberFieldElem(field_, s);
    }
    friend NumberFieldElem operator/(const NumberFieldElem& a, const NumberFieldElem& b) { return a * b.inverse(); }
    NumberFieldElem& operator+=(const NumberFieldElem& o) { return *this = *this + o; }
    NumberFieldElem& operator-=(const NumberFieldElem& o) { return *this = *this - o; }
    NumberFieldElem& operator*=(const NumberFieldElem& o) { return *this = *this * o; }
    friend bool operator==(const NumberFieldElem& a, const NumberFieldElem& b) { return (a - b).is_zero(); }
    friend bool operator!=(const NumberFieldElem& a, const NumberFieldElem& b) { return !(a == b); }

    NumberFieldElem pow(long e) const {
        NumberFieldElem base = e >= 0 ? *this : inverse(), r(1);
        for (unsigned long k = static_cast<unsigned long>(std::labs(e)); k; k >>= 1) {
            if (k & 1) r = r * base;
            if (k > 1) base = base * base;
        }
        return r;
    }

    // matrix of multiplication in the power basis (columns are images of basis vectors)
    Matrix<Rat> multiplication_matrix() const {
        int n = degree();
        Matrix<Rat> m = zero_matrix<Rat>(n, n);
        for (int j = 0; j < n; ++j) {
            NumberFieldElem b = field_ ? NumberFieldElem(field_, UniPoly<Rat>::monomial(Rat(1), j)) : NumberFieldElem(1);
            NumberFieldElem p = *this * b;
            for (int i = 0; i < n; ++i) m[i][j] = p.coord(i);
        }
        return m;
    }
    Rat norm() const { return determinant(multiplication_matrix()); }
    Rat trace() const {
        Matrix<Rat> m = multiplication_matrix();
        Rat s = 0;
        for (size_t i = 0; i < m.size(); ++i) s += m[i][i];
        return s;
    }
    UniPoly<Rat> charpoly() const {
        Matrix<Rat> m = multiplication_matrix();
        size_t n = m.size();
        Matrix<UniPoly<Rat>> a = zero_matrix<UniPoly<Rat>>(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                a[i][j] = UniPoly<Rat>(Rat(-m[i][j]));
                if (i == j) a[i][j] += UniPoly<Rat>::x();
            }
        return determinant(a);
    }

  private:
    void set_from_poly(const UniPoly<Rat>& p) {
        if (!field_) {
            if (p.degree() > 0) throw std::domain_error("polynomial element without a field");
            coords_ = {p.coeff(0)};
            return;
        }
        const UniPoly<Rat>& r = p.degree() < field_->degree() ? p : p % field_->modulus();
        coords_.assign(static_cast<size_t>(field_->degree()), Rat(0));
        for (int i = 0; i <= r.degree(); ++i) coords_[i] = r.c[i];
    }
    static FieldPtr common(const NumberFieldElem& a, const NumberFieldElem& b) {
        if (!a.field_) return b.field_;
        if (!b.field_ || a.field_ == b.field_) return a.field_;
        if (a.field_->modulus() == b.field_->modulus()) return a.field_;
        throw std::domain_error("number field elements from different fields");
    }

    FieldPtr field_;
    std::vector<Rat> coords_;
};

inline bool is_zero(const NumberFieldElem& a) { return a.is_zero(); }
inline NumberFieldElem exact_div(const NumberFieldElem& a, const NumberFieldElem& b) { return a / b; }

inline std::string to_string(const NumberFieldElem& a) {
    std::string g = a.field() ? a.field()->generator_name() : "a";
    return to_string(a.as_poly(), g);
}

}  // namespace dpcl
