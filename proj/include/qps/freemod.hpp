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

#include <optional>
#include <string>
#include <vector>

#include "qps/skewalg.hpp"

namespace qps {
namespace mod {

using skew::CommutationData;
using skew::Monomial;
using skew::SkewPolynomial;

// Free graded left module: shifted copies of the algebra with generator
// degrees d_1, ..., d_k.
struct FreeGradedModule {
    std::vector<int> gen_degrees;

    size_t rank() const { return gen_degrees.size(); }
    bool operator==(const FreeGradedModule& o) const { return gen_degrees == o.gen_degrees; }
    bool operator!=(const FreeGradedModule& o) const { return !(*this == o); }
};

// Basis element (t, m) of a graded piece of a free module: monomial m in the
// t-th generator slot.
struct ModuleMonomial {
    size_t gen;
    Monomial mono;

    bool operator==(const ModuleMonomial& o) const { return gen == o.gen && mono == o.mono; }
    std::string to_string(size_t rank) const;  // "x1^2*e2"; plain monomial for rank 1
};

// Element of a free module: one skew polynomial per generator.
class FreeVector {
public:
    FreeVector(CommutationData ctx, size_t rank);
    static FreeVector basis(const CommutationData& ctx, size_t rank, size_t t);

    const CommutationData& ctx() const { return ctx_; }
    size_t rank() const { return comps_.size(); }
    const SkewPolynomial& comp(size_t t) const { return comps_[t]; }
    SkewPolynomial& comp(size_t t) { return comps_[t]; }

    bool is_zero() const;
    size_t term_count() const;

    void add_term(size_t t, const Monomial& m, const field::Scalar& c);

    FreeVector operator+(const FreeVector& o) const;
    FreeVector operator-(const FreeVector& o) const;
    FreeVector operator-() const;
    FreeVector scaled(const field::Scalar& c) const;
    // Left multiplication a * v, applied componentwise.
    FreeVector left_mul(const SkewPolynomial& a) const;
    FreeVector left_mul_term(const Monomial& m, const field::Scalar& c) const;

    bool operator==(const FreeVector& o) const;
    bool operator!=(const FreeVector& o) const { return !(*this == o); }

    // Homogeneous degree with respect to the generator degrees, if any;
    // the zero vector reports nullopt as well.
    std::optional<int> homogeneous_degree(const FreeGradedModule& f) const;

    std::string to_string() const;

private:
    CommutationData ctx_;
    std::vector<SkewPolynomial> comps_;
};

// Term list syntax with generator symbols, e.g. "q^-1 x1*x2*e2 + 3/2 e1".
// For rank-1 modules the generator symbol may be omitted.
FreeVector parse_free_vector(const CommutationData& ctx, size_t rank, const std::string& text);

}  // namespace mod
}  // namespace qps
