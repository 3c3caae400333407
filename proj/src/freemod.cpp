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

#include "qps/freemod.hpp"

#include <sstream>

namespace qps {
namespace mod {

using field::Scalar;

std::string ModuleMonomial::to_string(size_t rank) const {
    if (rank == 1) return mono.to_string();
    if (mono.is_unit()) return "e" + std::to_string(gen + 1);
    return mono.to_string() + "*e" + std::to_string(gen + 1);
}

FreeVector::FreeVector(CommutationData ctx, size_t rank) : ctx_(std::move(ctx)) {
    comps_.reserve(rank);
    for (size_t i = 0; i < rank; ++i) comps_.push_back(SkewPolynomial::zero(ctx_));
}

FreeVector FreeVector::basis(const CommutationData& ctx, size_t rank, size_t t) {
    FreeVector v(ctx, rank);
    v.comps_[t] = SkewPolynomial::one(ctx);
    return v;
}

bool FreeVector::is_zero() const {
    for (const auto& c : comps_)
        if (!c.is_zero()) return false;
    return true;
}

size_t FreeVector::term_count() const {
    size_t n = 0;
    for (const auto& c : comps_) n += c.term_count();
    return n;
}

void FreeVector::add_term(size_t t, const Monomial& m, const Scalar& c) {
    if (t >= comps_.size()) throw ConfigError("generator index out of range");
    comps_[t].add_term(m, c);
}

FreeVector FreeVector::operator+(const FreeVector& o) const {
    if (rank() != o.rank() || ctx_ != o.ctx_) throw ConfigError("free vector shape mismatch");
    FreeVector r(*this);
    for (size_t t = 0; t < comps_.size(); ++t) r.comps_[t] = r.comps_[t] + o.comps_[t];
    return r;
}

FreeVector FreeVector::operator-(const FreeVector& o) const {
    if (rank() != o.rank() || ctx_ != o.ctx_) throw ConfigError("free vector shape mismatch");
    FreeVector r(*this);
    for (size_t t = 0; t < comps_.size(); ++t) r.comps_[t] = r.comps_[t] - o.comps_[t];
    return r;
}

FreeVector FreeVector::operator-() const {
    FreeVector r(*this);
    for (auto& c : r.comps_) c = -c;
    return r;
}

FreeVector FreeVector::scaled(const Scalar& c) const {
    FreeVector r(*this);
    for (auto& comp : r.comps_) comp = comp.scaled(c);
    return r;
}

FreeVector FreeVector::left_mul(const SkewPolynomial& a) const {
    FreeVector r(ctx_, rank());
    for (size_t t = 0; t < comps_.size(); ++t) r.comps_[t] = multiply(a, comps_[t]);
    return r;
}

FreeVector FreeVector::left_mul_term(const Monomial& m, const Scalar& c) const {
    return left_mul(SkewPolynomial::term(ctx_, m, c));
}

bool FreeVector::operator==(const FreeVector& o) const {
    return ctx_ == o.ctx_ && comps_ == o.comps_;
}

std::optional<int> FreeVector::homogeneous_degree(const FreeGradedModule& f) const {
    if (f.rank() != rank()) throw ConfigError("free vector rank mismatch");
    std::optional<int> deg;
    for (size_t t = 0; t < comps_.size(); ++t) {
        for (const auto& [m, c] : comps_[t].terms()) {
            int d = m.degree() + f.gen_degrees[t];
            if (!deg) deg = d;
            else if (*deg != d) return std::nullopt;
        }
    }
    return deg;
}

std::string FreeVector::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t t = 0; t < comps_.size(); ++t) {
        if (comps_[t].is_zero()) continue;
        for (auto it = comps_[t].terms().rbegin(); it != comps_[t].terms().rend(); ++it) {
            SkewPolynomial single = SkewPolynomial::term(ctx_, it->first, it->second);
            std::string term = single.to_string();
            bool negative = !term.empty() && term[0] == '-';
            if (negative) term = term.substr(1);
            if (first) {
                if (negative) os << "-";
                first = false;
            } else {
                os << (negative ? " - " : " + ");
            }
            if (rank() == 1) {
                os << term;
            } else {
                if (term == "1") os << "e" << (t + 1);
                else os << term << "*e" << (t + 1);
            }
        }
    }
    return os.str();
}

FreeVector parse_free_vector(const CommutationData& ctx, size_t rank, const std::string& text) {
    // split into top-level terms at '+'/'-' (parentheses respected), extract
    // the generator symbol from each term, and let the polynomial parser do
    // the rest
    FreeVector out(ctx, rank);
    std::string t = text;
    size_t pos = 0;
    auto skip_ws = [&]() {
        while (pos < t.size() && (t[pos] == ' ' || t[pos] == '\t')) ++pos;
    };
    skip_ws();
    if (pos < t.size() && t.compare(pos, 1, "0") == 0 && pos + 1 == t.size()) return out;
    bool first = true;
    while (pos < t.size()) {
        skip_ws();
        int sign = 1;
        if (t[pos] == '-') {
            sign = -1;
            ++pos;
        } else if (t[pos] == '+') {
            ++pos;
        } else if (!first) {
            throw ConfigError("free vector parse error: expected '+' or '-' in \"" + text + "\"");
        }
        first = false;
        // scan one term
        int depth = 0;
        size_t start = pos;
        while (pos < t.size()) {
            char c = t[pos];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            if (depth == 0 && (c == '+' || (c == '-' && pos > start && t[pos - 1] != '^'))) break;
            ++pos;
        }
        std::string term = t.substr(start, pos - start);
        // find a generator token e<k> at top level
        size_t gen = 0;
        bool has_gen = false;
        int d2 = 0;
        for (size_t i = 0; i < term.size(); ++i) {
            if (term[i] == '(') ++d2;
            if (term[i] == ')') --d2;
            if (d2 == 0 && term[i] == 'e' &&
                (i == 0 || !isalnum(static_cast<unsigned char>(term[i - 1])))) {
                size_t j = i + 1;
                std::string digits;
                while (j < term.size() && isdigit(static_cast<unsigned char>(term[j]))) {
                    digits += term[j];
                    ++j;
                }
                if (digits.empty()) throw ConfigError("bad generator symbol in \"" + term + "\"");
                gen = static_cast<size_t>(std::stol(digits)) - 1;
                has_gen = true;
                // remove the token together with a neighboring '*'
                size_t from = i, to = j;
                if (from > 0 && term[from - 1] == '*') --from;
                else if (to < term.size() && term[to] == '*') ++to;
                term = term.substr(0, from) + term.substr(to);
                break;
            }
        }
        if (!has_gen) {
            if (rank != 1)
                throw ConfigError("missing generator symbol in \"" + text + "\"");
            gen = 0;
        }
        if (gen >= rank) throw ConfigError("generator index out of range in \"" + text + "\"");
        std::string poly_text = term;
        // an empty remainder means a bare generator
        bool blank = true;
        for (char c : poly_text)
            if (c != ' ' && c != '\t') blank = false;
        SkewPolynomial p = blank ? SkewPolynomial::one(ctx) : skew::parse_polynomial(ctx, poly_text);
        if (sign < 0) p = -p;
        for (const auto& [m, c] : p.terms()) out.add_term(gen, m, c);
        skip_ws();
    }
    return out;
}

}  // namespace mod
}  // namespace qps
