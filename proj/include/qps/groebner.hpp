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
#include <vector>

#include "qps/freemod.hpp"

namespace qps {
namespace mod {

// Left Groebner machinery for submodules of free modules over the quantum
// polynomial algebra. Order: degree-reverse-lexicographic on monomials,
// term over position, ties by generator index.

int cmp_degrevlex(const Monomial& a, const Monomial& b);          // -1 / 0 / +1
int cmp_module_term(const ModuleMonomial& a, const ModuleMonomial& b);

struct LeadingTerm {
    ModuleMonomial mm;
    field::Scalar coeff;
};

// Largest term of a nonzero vector in the module order.
std::optional<LeadingTerm> leading_term(const FreeVector& v);

// Full reduction against a (not necessarily Groebner) list of divisors.
FreeVector normal_form(FreeVector v, const std::vector<FreeVector>& basis);

struct GroebnerResult {
    std::vector<FreeVector> basis;     // reduced, monic, deterministically sorted
    std::vector<FreeVector> syzygies;  // left syzygies of the ORIGINAL generators
};

// Buchberger loop with expression tracking. Syzygies are collected from
// S-pairs that reduce to zero (Schreyer), rewritten over the input list.
GroebnerResult buchberger(const CommutationData& ctx, size_t rank,
                          const std::vector<FreeVector>& gens, bool want_syzygies);

// Membership using a precomputed Groebner basis.
bool in_submodule(const FreeVector& v, const std::vector<FreeVector>& groebner);

// Generators of (N : u^p) = { v : u^p * v in N }, where N is given by
// generators inside the free module of the given rank and u is a monomial.
// Powers of the normal monomial act through the twist automorphism, so the
// computation is a single left-syzygy run on (u^p e_t, N-generators).
std::vector<FreeVector> colon_generators(const CommutationData& ctx, size_t rank,
                                         const std::vector<FreeVector>& n_gens,
                                         const Monomial& u, int p);

}  // namespace mod
}  // namespace qps
