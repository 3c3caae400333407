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

#include "qps/finding.hpp"
#include "qps/modpres.hpp"

namespace qps {
namespace sec {

using mod::FreeVector;
using mod::GradedPiece;
using mod::PieceMap;
using mod::PresentedModule;
using skew::Monomial;

// Stratum index z of the flag of quantum linear subspaces: the associated
// inverted variable set is S(z) = {x_{z+2}, ..., x_{n+1}} (empty for z = n).
struct FiltrationIndex {
    int n;
    int z;

    FiltrationIndex(int n_, int z_) : n(n_), z(z_) {
        if (z < 0 || z > n) throw ConfigError("filtration index out of range");
    }
    std::vector<int> inverted_vars() const {  // 1-based indices
        std::vector<int> v;
        for (int j = z + 2; j <= n + 1; ++j) v.push_back(j);
        return v;
    }
    size_t inverted_count() const { return static_cast<size_t>(n - z); }
    Monomial product_monomial() const {  // u(z), exponent 1 on each inverted variable
        std::vector<int> e(static_cast<size_t>(n + 1), 0);
        for (int j : inverted_vars()) e[static_cast<size_t>(j - 1)] = 1;
        return Monomial(std::move(e));
    }
};

enum class Semantics { Ideal, Product };

std::string semantics_name(Semantics s);

// How a supported-sections subspace was certified.
struct SupportCertificate {
    bool certified = false;   // stabilized colon chain at module level
    int p_star = 0;           // maximal certified p* over the contributing variables
    bool windowed_stable = false;
    int p_max = 0, window = 0;
};

struct SectionsReport {
    int z;
    Semantics semantics;
    la::Subspace subspace;  // of M_0, class coordinates
    SupportCertificate certificate;
    std::vector<std::string> basis;  // representative texts
};

// Gamma(M) = M_0.
const GradedPiece& global_sections(const PresentedModule& m);

// Pole-order-truncated sections on the open complement of the z-stratum:
// stage p is u(z)^{-p} M_{p |S(z)|}, the transition is left multiplication
// by u(z). For z = n the stage is M_0 and the transition the identity.
struct OpenSectionsStage {
    int p;
    int stage_degree;        // p * |S(z)|
    size_t dim;
    PieceMap transition;     // stage p -> stage p+1
    PieceMap from_global;    // M_0 -> stage p (multiplication by u(z)^p)
};

OpenSectionsStage open_sections(const PresentedModule& m, const FiltrationIndex& z, int p);

// Sections supported at the z-stratum; for z = n this is all of M_0 and for
// the empty stratum (see quotient_sections) it is zero.
SectionsReport supported_sections(const PresentedModule& m, const FiltrationIndex& z,
                                  Semantics semantics, int p_max = 24, int window = 2);

struct QuotientSectionsResult {
    bool inclusion_holds = false;
    std::string witness;  // basis vector of the smaller space escaping the larger
    la::Subspace numer, denom;
    std::optional<la::QuotientSpace> space;
    std::vector<std::string> basis;
};

// Gamma_{z1} / Gamma_{z2}; z2 = nullopt encodes the empty stratum.
QuotientSectionsResult quotient_sections(const PresentedModule& m, const FiltrationIndex& z1,
                                         std::optional<FiltrationIndex> z2, Semantics semantics,
                                         int p_max = 24, int window = 2);

// Presentation of M / <S(z)> M, the restriction to the z-stratum.
PresentedModule restrict_to_stratum(const PresentedModule& m, const FiltrationIndex& z);

// The ample autoequivalence, realized as the degree shift s^t.
PresentedModule twist(const PresentedModule& m, int t);

// ---- constructive verifiers -------------------------------------------------

struct LemmaOptions {
    int p_max = 4;
    int window = 2;
    Semantics semantics = Semantics::Ideal;
    int t_max = 6;      // twist scans
    int d_max = 6;      // degree scans
};

// Kernel sequence of the localization restriction (three parts: supported at
// the full stratum, at the empty stratum, and stage-wise exactness with a
// surjectivity report).
Findings verify_l1(const PresentedModule& m, const std::string& name, int z,
                   const LemmaOptions& opt);

// Quotient functor identities and short exact sequences of supported sections.
Findings verify_l2(const PresentedModule& m, const std::string& name, const LemmaOptions& opt);

// Natural injection of the quotient of supported sections into the supported
// sections of the localized module, stage by stage.
Findings verify_l3(const PresentedModule& m, const std::string& name, int z1, int z2,
                   const LemmaOptions& opt);

// Exactness preservation of the twisted section functors on a short exact
// sequence of modules; reports the minimal observed threshold.
Findings verify_l4(const mod::ModuleMap& incl, const mod::ModuleMap& proj,
                   const std::string& name, int z1, int z2, const LemmaOptions& opt);

// Canonical epimorphism from shifted frees onto M, surjectivity per degree.
Findings verify_b1(const PresentedModule& m, const std::string& name, const LemmaOptions& opt);

// Epimorphism preservation of twisted supported sections; reports the minimal
// observed threshold t0 within the scan window.
Findings verify_b2(const mod::ModuleMap& epi, const std::string& name, const LemmaOptions& opt);

// Degreewise exactness check of a declared short exact sequence, used by the
// l4/l6 batteries before trusting it.
Findings verify_ses(const mod::ModuleMap& incl, const mod::ModuleMap& proj,
                    const std::string& name, int d_from, int d_to);

}  // namespace sec
}  // namespace qps
