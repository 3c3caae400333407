/*
   Copyright 2026 The qps Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace qps {

// Bad user input or incompatible contexts (mixed ground fields, size mismatches).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Domain errors of exact arithmetic (division by zero and friends).
struct ArithmeticError : std::runtime_error {
    explicit ArithmeticError(const std::string& what) : std::runtime_error(what) {}
};

namespace field {

using Rat = mpq_class;

// Dense polynomial in q over the rationals; coefficient of q^i at index i,
// no trailing zero coefficients (zero polynomial = empty vector).
using Poly = std::vector<Rat>;

int poly_degree(const Poly& p);  // -1 for the zero polynomial
void poly_trim(Poly& p);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_neg(const Poly& a);
// Euclidean division, b != 0.
void poly_divrem(const Poly& a, const Poly& b, Poly& quot, Poly& rem);
// Monic gcd; gcd(0,0) = 0.
Poly poly_gcd(Poly a, Poly b);
Poly poly_make_monic(Poly p);
Poly poly_one();
Poly poly_q_power(int e);  // q^e for e >= 0
std::string poly_to_string(const Poly& p);

// m-th cyclotomic polynomial (memoized), m >= 1.
const Poly& cyclotomic_polynomial(int m);

enum class FieldKind { Rationals, GenericQ, CyclotomicQ };

// Ground field with the deformation parameter q as a distinguished element:
// the rationals (q = 1), rational functions Q(q), or Q[q]/Phi_m(q).
class FieldSpec {
public:
    FieldSpec() : kind_(FieldKind::Rationals), order_(0) {}

    static FieldSpec rationals() { return FieldSpec(FieldKind::Rationals, 0); }
    static FieldSpec generic_q() { return FieldSpec(FieldKind::GenericQ, 0); }
    static FieldSpec cyclotomic(int m);

    FieldKind kind() const { return kind_; }
    int cyclotomic_order() const { return order_; }
    // Degree of the extension over Q for CyclotomicQ, 1 otherwise.
    int residue_degree() const;

    bool operator==(const FieldSpec& other) const {
        return kind_ == other.kind_ && order_ == other.order_;
    }
    bool operator!=(const FieldSpec& other) const { return !(*this == other); }

    std::string to_string() const;

private:
    FieldSpec(FieldKind k, int m) : kind_(k), order_(m) {}
    FieldKind kind_;
    int order_;
};

// A canonical-form field element. Internal invariants:
//   Rationals: num_ constant, den_ = 1.
//   GenericQ:  num_/den_ reduced, den_ monic (den_ = 1 allowed).
//   CyclotomicQ(m): den_ = 1, deg num_ < deg Phi_m.
// Equality of canonical forms is structural equality.
class Scalar {
public:
    Scalar() : spec_(FieldSpec::rationals()) {}  // zero of Q; reassigned on use

    static Scalar zero(const FieldSpec& fs);
    static Scalar one(const FieldSpec& fs);
    static Scalar from_int(const FieldSpec& fs, long v);
    static Scalar from_rational(const FieldSpec& fs, const Rat& v);
    // Class of the polynomial p(q); for Rationals evaluates at q = 1.
    static Scalar from_poly(const FieldSpec& fs, Poly p);

    const FieldSpec& spec() const { return spec_; }
    bool is_zero() const { return num_.empty(); }
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // inv of zero throws ArithmeticError
    Scalar operator-() const;
    Scalar inv() const;

    Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
    Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
    Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // The rational value, valid only over Rationals.
    const Rat& rational() const;

    std::string to_string() const;
    static Scalar parse(const FieldSpec& fs, const std::string& text);

private:
    Scalar(FieldSpec fs, Poly num, Poly den)
        : spec_(fs), num_(std::move(num)), den_(std::move(den)) {}
    void normalize();
    static void check_same(const FieldSpec& a, const FieldSpec& b);

    FieldSpec spec_;
    Poly num_;
    Poly den_{Rat(1)};
};

// q^e in canonical form; e may be negative.
Scalar q_power(const FieldSpec& fs, long e);

}  // namespace field
}  // namespace qps
