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

#include <map>
#include <string>
#include <vector>

#include "qps/scalar.hpp"

namespace qps {
namespace skew {

// Normal-ordered word x1^{a1} ... x_{n+1}^{a_{n+1}}, stored as its exponent
// vector of length n+1.
class Monomial {
public:
    explicit Monomial(std::vector<int> exp);
    static Monomial unit(int nvars);
    static Monomial variable(int nvars, int index1);  // 1-based variable index
    static Monomial power(int nvars, int index1, int e);

    int nvars() const { return static_cast<int>(exp_.size()); }
    int degree() const;
    int exponent(int i) const { return exp_[static_cast<size_t>(i)]; }  // 0-based
    const std::vector<int>& exponents() const { return exp_; }
    bool is_unit() const { return degree() == 0; }

    // Exponent-wise product (the underlying commutative monoid).
    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial quotient_by(const Monomial& o) const;  // this / o, requires o | this

    // Storage order: by degree, then lexicographically on exponent vectors.
    bool operator<(const Monomial& o) const;
    bool operator==(const Monomial& o) const { return exp_ == o.exp_; }
    bool operator!=(const Monomial& o) const { return exp_ != o.exp_; }

    std::string to_string() const;  // "x1^2*x3", unit prints "1"

private:
    std::vector<int> exp_;
};

// Inversion count of the concatenated word a|b: kappa(a,b) = sum_{i<j} a_j b_i.
// The normal form rule is x^a * x^b = q^{-kappa(a,b)} x^{a+b}.
long kappa(const Monomial& a, const Monomial& b);
long kappa(const std::vector<int>& a, const std::vector<int>& b);

// Ambient algebra data: number of variables (n+1) and the ground field.
struct CommutationData {
    int n = 1;
    field::FieldSpec fs;

    int nvars() const { return n + 1; }
    bool operator==(const CommutationData& o) const { return n == o.n && fs == o.fs; }
    bool operator!=(const CommutationData& o) const { return !(*this == o); }
};

// Element of the quantum polynomial algebra in normalized PBW form:
// an ordered association monomial -> nonzero scalar.
class SkewPolynomial {
public:
    explicit SkewPolynomial(CommutationData ctx) : ctx_(std::move(ctx)) {}

    static SkewPolynomial zero(const CommutationData& ctx);
    static SkewPolynomial one(const CommutationData& ctx);
    static SkewPolynomial term(const CommutationData& ctx, const Monomial& m,
                               const field::Scalar& c);

    const CommutationData& ctx() const { return ctx_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, field::Scalar>& terms() const { return terms_; }

    // -1 for zero; for inhomogeneous elements the maximum term degree.
    int degree() const;
    bool is_homogeneous() const;

    void add_term(const Monomial& m, const field::Scalar& c);  // accumulates, drops zeros

    SkewPolynomial operator+(const SkewPolynomial& o) const;
    SkewPolynomial operator-(const SkewPolynomial& o) const;
    SkewPolynomial operator*(const SkewPolynomial& o) const;  // skew product
    SkewPolynomial operator-() const;
    SkewPolynomial scaled(const field::Scalar& c) const;

    bool operator==(const SkewPolynomial& o) const;
    bool operator!=(const SkewPolynomial& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    CommutationData ctx_;
    std::map<Monomial, field::Scalar> terms_;
};

SkewPolynomial multiply(const SkewPolynomial& f, const SkewPolynomial& g);

// Twist weights of the conjugation automorphism attached to the normal
// monomial u: phi_u(x_i) = q^{w_i} x_i with w_i = sum_{j<i} u_j - sum_{j>i} u_j,
// so that u * f = phi_u(f) * u holds identically.
std::vector<long> phi_twist_weights(const Monomial& u);

SkewPolynomial phi_twist(const Monomial& u, const SkewPolynomial& f);
// Twist by explicit weights (used for the inverse twist in colon computations).
SkewPolynomial phi_twist_by_weights(const std::vector<long>& w, const SkewPolynomial& f);

// All monomials of the given total degree, ascending in the storage order.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

Monomial parse_monomial(int nvars, const std::string& text);
SkewPolynomial parse_polynomial(const CommutationData& ctx, const std::string& text);

}  // namespace skew
}  // namespace qps
