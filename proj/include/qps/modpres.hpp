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
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "qps/freemod.hpp"
#include "qps/groebner.hpp"
#include "qps/linalg.hpp"

namespace qps {
namespace mod {

// A module map whose images do not respect the source relations.
struct ValidationError : ConfigError {
    ValidationError(const std::string& what, size_t relation_index)
        : ConfigError(what), relation_index(relation_index) {}
    size_t relation_index;
};

// Exact graded component M_d of a presented module: ambient module monomials,
// the echelonized relation subspace, and canonical residue classes.
class GradedPiece {
public:
    GradedPiece(CommutationData ctx, const FreeGradedModule& f0, int degree,
                std::vector<ModuleMonomial> ambient, la::Subspace relation_space);

    int degree() const { return degree_; }
    size_t ambient_dim() const { return ambient_.size(); }
    size_t dim() const { return classes_->dim(); }
    const std::vector<ModuleMonomial>& ambient_basis() const { return ambient_; }
    const la::Subspace& relation_space() const { return relation_space_; }
    const la::QuotientSpace& classes() const { return *classes_; }

    std::optional<size_t> ambient_index(size_t gen, const Monomial& m) const;
    // Coordinates of a homogeneous vector of this degree in the ambient basis.
    la::Vec ambient_coords(const FreeVector& v) const;
    // Residue-class coordinates (unique after echelon reduction).
    la::Vec class_coords(const FreeVector& v) const;
    la::Vec class_coords_of_ambient(const la::Vec& ambient) const;
    FreeVector vector_from_ambient(const la::Vec& ambient) const;
    // Canonical representative of a class-coordinate vector, as a free vector.
    FreeVector representative(const la::Vec& class_coords) const;
    std::string class_vector_string(const la::Vec& class_coords) const;

private:
    CommutationData ctx_;
    FreeGradedModule f0_;
    int degree_;
    std::vector<ModuleMonomial> ambient_;
    std::map<std::pair<size_t, std::vector<int>>, size_t> index_;
    la::Subspace relation_space_;
    std::optional<la::QuotientSpace> classes_;
};

// Exact linear map between graded pieces, in class coordinates.
struct PieceMap {
    int source_degree;
    int target_degree;
    la::Matrix matrix;  // target_dim x source_dim
    std::string provenance;
};

PieceMap compose(const PieceMap& second, const PieceMap& first);  // second o first

// Finitely presented graded left module F0 / <relation columns>.
// Value type with shared immutable internals; piece computations are
// memoized behind a lock and deterministic.
class PresentedModule {
public:
    PresentedModule(const CommutationData& ctx, std::vector<int> gen_degrees,
                    const std::vector<FreeVector>& relations);
    static PresentedModule free_module(const CommutationData& ctx, std::vector<int> gen_degrees);

    const CommutationData& ctx() const;
    const FreeGradedModule& free0() const;
    size_t rank() const { return free0().rank(); }
    const std::vector<FreeVector>& relations() const;
    const std::vector<int>& relation_degrees() const;

    const GradedPiece& piece(int d) const;
    std::vector<size_t> hilbert_function(int d_from, int d_to) const;

    // Reduced left Groebner basis of the relation submodule (memoized).
    const std::vector<FreeVector>& relation_groebner() const;

    PresentedModule twisted(int t) const;                                // s^t
    PresentedModule quotient(const std::vector<FreeVector>& extra) const;
    PresentedModule direct_sum(const PresentedModule& other) const;

    bool same_object(const PresentedModule& other) const { return impl_ == other.impl_; }

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// Left multiplication by the monomial u as an exact map M_d -> M_{d + deg u}.
PieceMap mult_map(const PresentedModule& m, int d, const Monomial& u);

// Homogeneous submodule of the ambient free module, with an optional
// certified left Groebner basis.
struct Submodule {
    CommutationData ctx;
    size_t rank = 0;
    std::vector<FreeVector> generators;
    std::optional<std::vector<FreeVector>> groebner;
    std::string order = "degrevlex, term over position, generator index ties";
};

Submodule make_submodule(const CommutationData& ctx, size_t rank,
                         std::vector<FreeVector> generators);
Submodule& ensure_groebner(Submodule& n);
bool submodule_contains(Submodule& n, const FreeVector& v);
bool submodule_equal(Submodule& a, Submodule& b);

// Subspace of M_d spanned by the degree-d elements of the submodule generated
// by gens (in class coordinates of M.piece(d)).
la::Subspace submodule_piece_in(const PresentedModule& m, const std::vector<FreeVector>& gens,
                                int d);

// Graded module homomorphism M -> N of the given degree shift, presented by
// the images of the source generators. Relation compatibility is certified
// with the target's Groebner basis at construction.
class ModuleMap {
public:
    ModuleMap(PresentedModule source, PresentedModule target, std::vector<FreeVector> images,
              int shift, std::string name = "");

    const PresentedModule& source() const { return source_; }
    const PresentedModule& target() const { return target_; }
    const std::vector<FreeVector>& images() const { return images_; }
    int shift() const { return shift_; }
    const std::string& name() const { return name_; }

    // Induced exact map M_d -> N_{d + shift}.
    PieceMap piece(int d) const;

private:
    PresentedModule source_, target_;
    std::vector<FreeVector> images_;
    int shift_;
    std::string name_;
};

struct TorsionResult {
    Submodule torsion;   // stabilized colon submodule (with Groebner basis)
    int p_star = 0;      // first p with (Rel : u^p) = (Rel : u^{p+1})
    bool revalidated = false;  // one extra colon step confirmed the repeat
};

// Certified torsion submodule {v : u^p v = 0 in M for some p}, computed as
// the stabilized chain of colon submodules.
TorsionResult torsion_submodule_certified(const PresentedModule& m, const Monomial& u,
                                          int p_limit = 24);

struct WindowedTorsion {
    std::vector<la::Subspace> kernels;  // Ker(u^p | M_d), p = 1..p_max
    bool stable = false;
    int first_stable = -1;  // level whose kernel persists through the window
};

// Degree-d kernels of multiplication by u^p for p <= p_max; reports
// stability of the chain over a window of w repeats, never silently.
WindowedTorsion torsion_windowed(const PresentedModule& m, const Monomial& u, int d, int p_max,
                                 int w);

}  // namespace mod
}  // namespace qps
