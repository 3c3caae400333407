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

#include "qps/groebner.hpp"

#include <algorithm>
#include <set>

namespace qps {
namespace mod {

using field::Scalar;
using skew::kappa;

int cmp_degrevlex(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    // last nonzero entry of a-b negative  =>  a > b
    for (int i = a.nvars() - 1; i >= 0; --i) {
        int diff = a.exponent(i) - b.exponent(i);
        if (diff != 0) return diff < 0 ? 1 : -1;
    }
    return 0;
}

int cmp_module_term(const ModuleMonomial& a, const ModuleMonomial& b) {
    int c = cmp_degrevlex(a.mono, b.mono);
    if (c != 0) return c;
    if (a.gen != b.gen) return a.gen > b.gen ? -1 : 1;  // smaller index wins ties
    return 0;
}

std::optional<LeadingTerm> leading_term(const FreeVector& v) {
    std::optional<LeadingTerm> best;
    for (size_t t = 0; t < v.rank(); ++t) {
        for (const auto& [m, c] : v.comp(t).terms()) {
            ModuleMonomial mm{t, m};
            if (!best || cmp_module_term(mm, best->mm) > 0) best = LeadingTerm{mm, c};
        }
    }
    return best;
}

namespace {

// One reduction step on the given term; returns false if no divisor matches.
// The divisor quotient enters on the LEFT: v -= (c / lc(w*g)) * (w * g).
bool reduce_term(FreeVector& v, const ModuleMonomial& mm, const Scalar& c,
                 const std::vector<FreeVector>& basis,
                 const std::vector<LeadingTerm>& leads, FreeVector* expr,
                 const std::vector<FreeVector>* exprs) {
    for (size_t i = 0; i < basis.size(); ++i) {
        const LeadingTerm& lt = leads[i];
        if (lt.mm.gen != mm.gen || !lt.mm.mono.divides(mm.mono)) continue;
        Monomial w = mm.mono.quotient_by(lt.mm.mono);
        // leading coefficient of w * g_i is q^{-kappa(w, lead)} * lc(g_i)
        Scalar factor =
            c / (field::q_power(v.ctx().fs, -kappa(w, lt.mm.mono)) * lt.coeff);
        v = v - basis[i].left_mul_term(w, factor);
        if (expr) *expr = *expr - (*exprs)[i].left_mul_term(w, factor);
        return true;
    }
    return false;
}

// Find the largest reducible term and reduce it; repeat to a full normal form.
FreeVector normal_form_tracked(FreeVector v, const std::vector<FreeVector>& basis,
                               const std::vector<LeadingTerm>& leads, FreeVector* expr,
                               const std::vector<FreeVector>* exprs) {
    while (true) {
        // collect candidate terms in decreasing order and try to reduce the biggest
        bool reduced = false;
        std::vector<std::pair<ModuleMonomial, Scalar>> terms;
        for (size_t t = 0; t < v.rank(); ++t)
            for (const auto& [m, c] : v.comp(t).terms()) terms.push_back({{t, m}, c});
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
            return cmp_module_term(a.first, b.first) > 0;
        });
        for (const auto& [mm, c] : terms) {
            if (reduce_term(v, mm, c, basis, leads, expr, exprs)) {
                reduced = true;
                break;
            }
        }
        if (!reduced) return v;
    }
}

struct PairKey {
    int lcm_degree;
    size_t i, j;
    bool operator<(const PairKey& o) const {
        if (lcm_degree != o.lcm_degree) return lcm_degree < o.lcm_degree;
        if (j != o.j) return j < o.j;
        return i < o.i;
    }
};

Monomial exponent_lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exponents());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exponent(static_cast<int>(i)));
    return Monomial(std::move(e));
}

}  // namespace

FreeVector normal_form(FreeVector v, const std::vector<FreeVector>& basis) {
    std::vector<LeadingTerm> leads;
    for (const auto& g : basis) {
        auto lt = leading_term(g);
        if (!lt) throw ConfigError("zero vector in reduction basis");
        leads.push_back(*lt);
    }
    return normal_form_tracked(std::move(v), basis, leads, nullptr, nullptr);
}

GroebnerResult buchberger(const CommutationData& ctx, size_t rank,
                          const std::vector<FreeVector>& gens, bool want_syzygies) {
    GroebnerResult out;
    std::vector<FreeVector> basis;
    std::vector<LeadingTerm> leads;
    std::vector<FreeVector> exprs;  // expressions of basis elements over gens
    const size_t ngens = gens.size();

    auto push_element = [&](FreeVector v, FreeVector expr) {
        auto lt = leading_term(v);
        Scalar inv = lt->coeff.inv();
        basis.push_back(v.scaled(inv));
        exprs.push_back(expr.scaled(inv));
        leads.push_back(LeadingTerm{lt->mm, Scalar::one(ctx.fs)});
    };

    for (size_t i = 0; i < ngens; ++i) {
        if (gens[i].rank() != rank || gens[i].ctx() != ctx)
            throw ConfigError("generator shape mismatch");
        if (gens[i].is_zero()) continue;
        push_element(gens[i], FreeVector::basis(ctx, ngens, i));
    }

    std::set<PairKey> pairs;
    auto add_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) {
            if (leads[i].mm.gen != leads[j].mm.gen) continue;
            Monomial l = exponent_lcm(leads[i].mm.mono, leads[j].mm.mono);
            pairs.insert(PairKey{l.degree(), i, j});
        }
    };
    for (size_t j = 0; j < basis.size(); ++j) add_pairs_for(j);

    while (!pairs.empty()) {
        PairKey pk = *pairs.begin();
        pairs.erase(pairs.begin());
        const auto& li = leads[pk.i];
        const auto& lj = leads[pk.j];
        Monomial l = exponent_lcm(li.mm.mono, lj.mm.mono);
        Monomial wi = l.quotient_by(li.mm.mono);
        Monomial wj = l.quotient_by(lj.mm.mono);
        // both products have leading coefficient q^{-kappa(w, lead)}; rescale
        // so the leading terms cancel exactly
        Scalar ci = field::q_power(ctx.fs, kappa(wi, li.mm.mono));
        Scalar cj = field::q_power(ctx.fs, kappa(wj, lj.mm.mono));
        FreeVector s = basis[pk.i].left_mul_term(wi, ci) - basis[pk.j].left_mul_term(wj, cj);
        FreeVector expr = exprs[pk.i].left_mul_term(wi, ci) - exprs[pk.j].left_mul_term(wj, cj);
        FreeVector* expr_ptr = want_syzygies ? &expr : nullptr;
        FreeVector r = normal_form_tracked(std::move(s), basis, leads, expr_ptr,
                                           want_syzygies ? &exprs : nullptr);
        if (r.is_zero()) {
            if (want_syzygies && !expr.is_zero()) out.syzygies.push_back(std::move(expr));
        } else {
            push_element(std::move(r), std::move(expr));
            add_pairs_for(basis.size() - 1);
        }
    }

    // minimalize: drop elements whose leading term another element divides
    // (equal leading terms cannot occur: additions are fully top-reduced)
    std::vector<size_t> keep;
    for (size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (j == i) continue;
            if (leads[j].mm.gen == leads[i].mm.gen &&
                leads[j].mm.mono.divides(leads[i].mm.mono) &&
                leads[j].mm.mono != leads[i].mm.mono)
                redundant = true;
        }
        if (!redundant) keep.push_back(i);
    }
    // tail-reduce the survivors against each other for the reduced basis
    std::vector<FreeVector> reduced;
    for (size_t ki = 0; ki < keep.size(); ++ki) {
        std::vector<FreeVector> others;
        std::vector<LeadingTerm> other_leads;
        for (size_t kj = 0; kj < keep.size(); ++kj) {
            if (kj == ki) continue;
            others.push_back(basis[keep[kj]]);
            other_leads.push_back(leads[keep[kj]]);
        }
        FreeVector nf = normal_form_tracked(basis[keep[ki]], others, other_leads, nullptr, nullptr);
        if (!nf.is_zero()) {
            auto lt = leading_term(nf);
            reduced.push_back(nf.scaled(lt->coeff.inv()));
        }
    }
    std::sort(reduced.begin(), reduced.end(), [](const FreeVector& a, const FreeVector& b) {
        auto la = leading_term(a), lb = leading_term(b);
        return cmp_module_term(la->mm, lb->mm) < 0;
    });
    out.basis = std::move(reduced);
    return out;
}

bool in_submodule(const FreeVector& v, const std::vector<FreeVector>& groebner) {
    if (v.is_zero()) return true;
    if (groebner.empty()) return false;
    return normal_form(v, groebner).is_zero();
}

std::vector<FreeVector> colon_generators(const CommutationData& ctx, size_t rank,
                                         const std::vector<FreeVector>& n_gens,
                                         const Monomial& u, int p) {
    if (u.is_unit()) throw ConfigError("colon by the unit monomial");
    if (p < 1) throw ConfigError("colon power must be >= 1");
    std::vector<int> pe(u.exponents());
    for (auto& e : pe) e *= p;
    Monomial up(std::move(pe));

    std::vector<FreeVector> combined;
    for (size_t t = 0; t < rank; ++t)
        combined.push_back(FreeVector::basis(ctx, rank, t).left_mul_term(up, Scalar::one(ctx.fs)));
    for (const auto& g : n_gens) combined.push_back(g);

    GroebnerResult gr = buchberger(ctx, rank, combined, /*want_syzygies=*/true);

    // invert the twist: u^p * v = sum phi_{u^p}(a_t) * (u^p e_t)
    std::vector<long> w = skew::phi_twist_weights(up);
    for (auto& x : w) x = -x;

    std::vector<FreeVector> result;
    for (const auto& syz : gr.syzygies) {
        FreeVector v(ctx, rank);
        bool nonzero = false;
        for (size_t t = 0; t < rank; ++t) {
            SkewPolynomial a = skew::phi_twist_by_weights(w, syz.comp(t));
            if (!a.is_zero()) nonzero = true;
            v.comp(t) = std::move(a);
        }
        if (nonzero) result.push_back(std::move(v));
    }
    // N is always contained in (N : u^p)
    for (const auto& g : n_gens)
        if (!g.is_zero()) result.push_back(g);
    return result;
}

}  // namespace mod
}  // namespace qps
