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

#include "qps/modpres.hpp"

#include <algorithm>

namespace qps {
namespace mod {

using field::Scalar;
using la::Matrix;
using la::Subspace;
using la::Vec;

GradedPiece::GradedPiece(CommutationData ctx, const FreeGradedModule& f0, int degree,
                         std::vector<ModuleMonomial> ambient, la::Subspace relation_space)
    : ctx_(std::move(ctx)),
      f0_(f0),
      degree_(degree),
      ambient_(std::move(ambient)),
      relation_space_(std::move(relation_space)) {
    for (size_t i = 0; i < ambient_.size(); ++i)
        index_[{ambient_[i].gen, ambient_[i].mono.exponents()}] = i;
    classes_.emplace(la::Subspace::full(ctx_.fs, ambient_.size()), relation_space_);
}

std::optional<size_t> GradedPiece::ambient_index(size_t gen, const Monomial& m) const {
    auto it = index_.find({gen, m.exponents()});
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

Vec GradedPiece::ambient_coords(const FreeVector& v) const {
    Vec coords(ambient_.size(), Scalar::zero(ctx_.fs));
    for (size_t t = 0; t < v.rank(); ++t) {
        for (const auto& [m, c] : v.comp(t).terms()) {
            auto idx = ambient_index(t, m);
            if (!idx)
                throw ConfigError("vector term " + ModuleMonomial{t, m}.to_string(v.rank()) +
                                  " does not live in degree " + std::to_string(degree_));
            coords[*idx] += c;
        }
    }
    return coords;
}

Vec GradedPiece::class_coords(const FreeVector& v) const {
    return classes_->coordinates(ambient_coords(v));
}

Vec GradedPiece::class_coords_of_ambient(const Vec& ambient) const {
    return classes_->coordinates(ambient);
}

FreeVector GradedPiece::vector_from_ambient(const Vec& ambient) const {
    FreeVector v(ctx_, f0_.rank());
    for (size_t i = 0; i < ambient_.size(); ++i)
        if (!ambient[i].is_zero()) v.add_term(ambient_[i].gen, ambient_[i].mono, ambient[i]);
    return v;
}

FreeVector GradedPiece::representative(const Vec& class_coords) const {
    Vec ambient(ambient_.size(), Scalar::zero(ctx_.fs));
    for (size_t i = 0; i < class_coords.size(); ++i) {
        if (class_coords[i].is_zero()) continue;
        Vec rep = classes_->representative(i);
        for (size_t j = 0; j < ambient.size(); ++j) ambient[j] += class_coords[i] * rep[j];
    }
    return vector_from_ambient(ambient);
}

std::string GradedPiece::class_vector_string(const Vec& class_coords) const {
    return representative(class_coords).to_string();
}

PieceMap compose(const PieceMap& second, const PieceMap& first) {
    if (first.target_degree != second.source_degree)
        throw ConfigError("piece map composition degree mismatch");
    return PieceMap{first.source_degree, second.target_degree, second.matrix * first.matrix,
                    second.provenance + " o " + first.provenance};
}

struct PresentedModule::Impl {
    CommutationData ctx;
    FreeGradedModule f0;
    std::vector<FreeVector> relations;
    std::vector<int> relation_degrees;
    mutable std::mutex mu;
    mutable std::map<int, std::unique_ptr<GradedPiece>> pieces;
    mutable std::optional<std::vector<FreeVector>> groebner;
};

PresentedModule::PresentedModule(const CommutationData& ctx, std::vector<int> gen_degrees,
                                 const std::vector<FreeVector>& relations)
    : impl_(std::make_shared<Impl>()) {
    impl_->ctx = ctx;
    impl_->f0 = FreeGradedModule{std::move(gen_degrees)};
    for (size_t j = 0; j < relations.size(); ++j) {
        const FreeVector& r = relations[j];
        if (r.ctx() != ctx || r.rank() != impl_->f0.rank())
            throw ConfigError("relation column " + std::to_string(j + 1) + " has wrong shape");
        if (r.is_zero()) continue;  // degenerate columns are dropped
        auto deg = r.homogeneous_degree(impl_->f0);
        if (!deg)
            throw ConfigError("relation column " + std::to_string(j + 1) +
                              " is not homogeneous");
        impl_->relations.push_back(r);
        impl_->relation_degrees.push_back(*deg);
    }
}

PresentedModule PresentedModule::free_module(const CommutationData& ctx,
                                             std::vector<int> gen_degrees) {
    return PresentedModule(ctx, std::move(gen_degrees), {});
}

const CommutationData& PresentedModule::ctx() const { return impl_->ctx; }
const FreeGradedModule& PresentedModule::free0() const { return impl_->f0; }
const std::vector<FreeVector>& PresentedModule::relations() const { return impl_->relations; }
const std::vector<int>& PresentedModule::relation_degrees() const {
    return impl_->relation_degrees;
}

const GradedPiece& PresentedModule::piece(int d) const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->pieces.find(d);
    if (it != impl_->pieces.end()) return *it->second;

    const auto& ctx = impl_->ctx;
    const auto& f0 = impl_->f0;
    std::vector<ModuleMonomial> ambient;
    for (size_t t = 0; t < f0.rank(); ++t) {
        int mdeg = d - f0.gen_degrees[t];
        for (const auto& m : skew::monomials_of_degree(ctx.nvars(), mdeg))
            ambient.push_back(ModuleMonomial{t, m});
    }
    // temporary piece without relations, used to express the relation span
    GradedPiece shell(ctx, f0, d, ambient, Subspace(ctx.fs, ambient.size()));
    std::vector<Vec> rows;
    for (size_t j = 0; j < impl_->relations.size(); ++j) {
        int mdeg = d - impl_->relation_degrees[j];
        for (const auto& m : skew::monomials_of_degree(ctx.nvars(), mdeg)) {
            FreeVector mult = impl_->relations[j].left_mul_term(m, Scalar::one(ctx.fs));
            rows.push_back(shell.ambient_coords(mult));
        }
    }
    Subspace rel = Subspace::from_span(ctx.fs, ambient.size(), rows);
    auto piece = std::make_unique<GradedPiece>(ctx, f0, d, std::move(ambient), std::move(rel));
    return *impl_->pieces.emplace(d, std::move(piece)).first->second;
}

std::vector<size_t> PresentedModule::hilbert_function(int d_from, int d_to) const {
    std::vector<size_t> dims;
    for (int d = d_from; d <= d_to; ++d) dims.push_back(piece(d).dim());
    return dims;
}

const std::vector<FreeVector>& PresentedModule::relation_groebner() const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (!impl_->groebner) {
        GroebnerResult gr =
            buchberger(impl_->ctx, impl_->f0.rank(), impl_->relations, /*want_syzygies=*/false);
        impl_->groebner = std::move(gr.basis);
    }
    return *impl_->groebner;
}

PresentedModule PresentedModule::twisted(int t) const {
    std::vector<int> degs = impl_->f0.gen_degrees;
    for (auto& d : degs) d -= t;
    return PresentedModule(impl_->ctx, std::move(degs), impl_->relations);
}

PresentedModule PresentedModule::quotient(const std::vector<FreeVector>& extra) const {
    std::vector<FreeVector> rels = impl_->relations;
    for (const auto& r : extra) rels.push_back(r);
    return PresentedModule(impl_->ctx, impl_->f0.gen_degrees, rels);
}

PresentedModule PresentedModule::direct_sum(const PresentedModule& other) const {
    if (impl_->ctx != other.impl_->ctx) throw ConfigError("direct sum context mismatch");
    std::vector<int> degs = impl_->f0.gen_degrees;
    for (int d : other.impl_->f0.gen_degrees) degs.push_back(d);
    size_t r1 = impl_->f0.rank(), r2 = other.impl_->f0.rank();
    std::vector<FreeVector> rels;
    for (const auto& r : impl_->relations) {
        FreeVector v(impl_->ctx, r1 + r2);
        for (size_t t = 0; t < r1; ++t) v.comp(t) = r.comp(t);
        rels.push_back(std::move(v));
    }
    for (const auto& r : other.impl_->relations) {
        FreeVector v(impl_->ctx, r1 + r2);
        for (size_t t = 0; t < r2; ++t) v.comp(r1 + t) = r.comp(t);
        rels.push_back(std::move(v));
    }
    return PresentedModule(impl_->ctx, std::move(degs), rels);
}

PieceMap mult_map(const PresentedModule& m, int d, const Monomial& u) {
    const GradedPiece& src = m.piece(d);
    const GradedPiece& dst = m.piece(d + u.degree());
    const auto& fs = m.ctx().fs;
    Matrix mat(fs, dst.dim(), src.dim());
    for (size_t j = 0; j < src.dim(); ++j) {
        Vec rep = src.classes().representative(j);  // ambient coords
        Vec out(dst.ambient_dim(), Scalar::zero(fs));
        for (size_t i = 0; i < rep.size(); ++i) {
            if (rep[i].is_zero()) continue;
            const ModuleMonomial& mm = src.ambient_basis()[i];
            auto idx = dst.ambient_index(mm.gen, u.times(mm.mono));
            if (!idx) throw ConfigError("multiplication left the expected degree");
            out[*idx] += rep[i] * field::q_power(fs, -skew::kappa(u, mm.mono));
        }
        Vec cc = dst.class_coords_of_ambient(out);
        for (size_t i = 0; i < dst.dim(); ++i) mat.at(i, j) = cc[i];
    }
    return PieceMap{d, d + u.degree(), std::move(mat), "mult " + u.to_string()};
}

Submodule make_submodule(const CommutationData& ctx, size_t rank,
                         std::vector<FreeVector> generators) {
    Submodule n;
    n.ctx = ctx;
    n.rank = rank;
    for (auto& g : generators)
        if (!g.is_zero()) n.generators.push_back(std::move(g));
    return n;
}

Submodule& ensure_groebner(Submodule& n) {
    if (!n.groebner) {
        GroebnerResult gr = buchberger(n.ctx, n.rank, n.generators, /*want_syzygies=*/false);
        n.groebner = std::move(gr.basis);
    }
    return n;
}

bool submodule_contains(Submodule& n, const FreeVector& v) {
    ensure_groebner(n);
    return in_submodule(v, *n.groebner);
}

bool submodule_equal(Submodule& a, Submodule& b) {
    ensure_groebner(a);
    ensure_groebner(b);
    for (const auto& g : *b.groebner)
        if (!in_submodule(g, *a.groebner)) return false;
    for (const auto& g : *a.groebner)
        if (!in_submodule(g, *b.groebner)) return false;
    return true;
}

la::Subspace submodule_piece_in(const PresentedModule& m, const std::vector<FreeVector>& gens,
                                int d) {
    const GradedPiece& piece = m.piece(d);
    const auto& fs = m.ctx().fs;
    std::vector<Vec> rows;
    for (const auto& g : gens) {
        auto deg = g.homogeneous_degree(m.free0());
        if (!deg) throw ConfigError("submodule generator is not homogeneous");
        int mdeg = d - *deg;
        for (const auto& mono : skew::monomials_of_degree(m.ctx().nvars(), mdeg))
            rows.push_back(piece.class_coords(g.left_mul_term(mono, Scalar::one(fs))));
    }
    return Subspace::from_span(fs, piece.dim(), rows);
}

ModuleMap::ModuleMap(PresentedModule source, PresentedModule target,
                     std::vector<FreeVector> images, int shift, std::string name)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)),
      shift_(shift),
      name_(std::move(name)) {
    if (source_.ctx() != target_.ctx()) throw ConfigError("module map context mismatch");
    if (images_.size() != source_.rank())
        throw ConfigError("module map needs one image per source generator");
    for (size_t t = 0; t < images_.size(); ++t) {
        if (images_[t].rank() != target_.rank())
            throw ConfigError("module map image has wrong rank");
        auto deg = images_[t].homogeneous_degree(target_.free0());
        if (deg && *deg != source_.free0().gen_degrees[t] + shift_)
            throw ConfigError("module map image " + std::to_string(t + 1) +
                              " has degree " + std::to_string(*deg) + ", expected " +
                              std::to_string(source_.free0().gen_degrees[t] + shift_));
        if (!deg && !images_[t].is_zero())
            throw ConfigError("module map image " + std::to_string(t + 1) +
                              " is not homogeneous");
    }
    // certified relation compatibility: each source relation must land in the
    // target relation submodule
    const auto& gb = target_.relation_groebner();
    for (size_t j = 0; j < source_.relations().size(); ++j) {
        const FreeVector& r = source_.relations()[j];
        FreeVector img(target_.ctx(), target_.rank());
        for (size_t t = 0; t < source_.rank(); ++t)
            img = img + images_[t].left_mul(r.comp(t));
        if (!img.is_zero() && !in_submodule(img, gb))
            throw ValidationError("module map does not respect source relation " +
                                      std::to_string(j + 1) + " (image " + img.to_string() +
                                      " is not a target relation)",
                                  j);
    }
}

PieceMap ModuleMap::piece(int d) const {
    const GradedPiece& src = source_.piece(d);
    const GradedPiece& dst = target_.piece(d + shift_);
    const auto& fs = source_.ctx().fs;
    Matrix mat(fs, dst.dim(), src.dim());
    for (size_t j = 0; j < src.dim(); ++j) {
        Vec rep = src.classes().representative(j);
        FreeVector img(target_.ctx(), target_.rank());
        for (size_t i = 0; i < rep.size(); ++i) {
            if (rep[i].is_zero()) continue;
            const ModuleMonomial& mm = src.ambient_basis()[i];
            img = img + images_[mm.gen].left_mul_term(mm.mono, rep[i]);
        }
        Vec cc = img.is_zero() ? Vec(dst.dim(), Scalar::zero(fs)) : dst.class_coords(img);
        for (size_t i = 0; i < dst.dim(); ++i) mat.at(i, j) = cc[i];
    }
    std::string prov = name_.empty() ? std::string("module map") : name_;
    return PieceMap{d, d + shift_, std::move(mat), std::move(prov)};
}

TorsionResult torsion_submodule_certified(const PresentedModule& m, const Monomial& u,
                                          int p_limit) {
    if (u.is_unit()) throw ConfigError("torsion requires a nonunit monomial");
    const auto& ctx = m.ctx();
    size_t rank = m.rank();

    Submodule prev = make_submodule(ctx, rank, colon_generators(ctx, rank, m.relations(), u, 1));
    ensure_groebner(prev);
    for (int p = 1; p <= p_limit; ++p) {
        Submodule next =
            make_submodule(ctx, rank, colon_generators(ctx, rank, m.relations(), u, p + 1));
        ensure_groebner(next);
        if (submodule_equal(prev, next)) {
            TorsionResult res;
            res.p_star = p;
            // one extra colon step revalidates the first repeat
            Submodule again =
                make_submodule(ctx, rank, colon_generators(ctx, rank, m.relations(), u, p + 2));
            res.revalidated = submodule_equal(prev, again);
            res.torsion = std::move(prev);
            return res;
        }
        prev = std::move(next);
    }
    throw ArithmeticError("torsion chain did not stabilize within p <= " +
                          std::to_string(p_limit));
}

WindowedTorsion torsion_windowed(const PresentedModule& m, const Monomial& u, int d, int p_max,
                                 int w) {
    WindowedTorsion out;
    for (int p = 1; p <= p_max; ++p) {
        std::vector<int> pe(u.exponents());
        for (auto& e : pe) e *= p;
        PieceMap mp = mult_map(m, d, Monomial(std::move(pe)));
        out.kernels.push_back(la::kernel_subspace(mp.matrix));
    }
    int trailing = 0;
    for (size_t i = out.kernels.size(); i-- > 1;) {
        if (out.kernels[i] == out.kernels[i - 1]) ++trailing;
        else break;
    }
    out.stable = trailing >= w;
    if (out.stable) out.first_stable = p_max - trailing;
    return out;
}

}  // namespace mod
}  // namespace qps
