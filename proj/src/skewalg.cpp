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

#include "qps/skewalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qps {
namespace skew {

using field::Scalar;

Monomial::Monomial(std::vector<int> exp) : exp_(std::move(exp)) {
    for (int e : exp_)
        if (e < 0) throw ConfigError("monomial exponents must be nonnegative");
    if (exp_.empty()) throw ConfigError("monomial needs at least one variable");
}

Monomial Monomial::unit(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

Monomial Monomial::variable(int nvars, int index1) { return power(nvars, index1, 1); }

Monomial Monomial::power(int nvars, int index1, int e) {
    if (index1 < 1 || index1 > nvars)
        throw ConfigError("variable index out of range: x" + std::to_string(index1));
    std::vector<int> exp(nvars, 0);
    exp[static_cast<size_t>(index1 - 1)] = e;
    return Monomial(std::move(exp));
}

int Monomial::degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }

Monomial Monomial::times(const Monomial& o) const {
    if (nvars() != o.nvars()) throw ConfigError("monomial arity mismatch");
    std::vector<int> e(exp_);
    for (size_t i = 0; i < e.size(); ++i) e[i] += o.exp_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    if (nvars() != o.nvars()) return false;
    for (size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > o.exp_[i]) return false;
    return true;
}

Monomial Monomial::quotient_by(const Monomial& o) const {
    std::vector<int> e(exp_);
    for (size_t i = 0; i < e.size(); ++i) {
        e[i] -= o.exp_[i];
        if (e[i] < 0) throw ArithmeticError("monomial quotient undefined");
    }
    return Monomial(std::move(e));
}

bool Monomial::operator<(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    return exp_ < o.exp_;
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < exp_.size(); ++i) {
        if (exp_[i] == 0) continue;
        if (!first) os << "*";
        os << "x" << (i + 1);
        if (exp_[i] > 1) os << "^" << exp_[i];
        first = false;
    }
    if (first) return "1";
    return os.str();
}

long kappa(const std::vector<int>& a, const std::vector<int>& b) {
    long total = 0;
    long suffix = 0;  // sum of a_j for j > i while scanning i downward
    for (size_t i = a.size(); i-- > 0;) {
        total += suffix * b[i];
        suffix += a[i];
    }
    return total;
}

long kappa(const Monomial& a, const Monomial& b) {
    return kappa(a.exponents(), b.exponents());
}

SkewPolynomial SkewPolynomial::zero(const CommutationData& ctx) { return SkewPolynomial(ctx); }

SkewPolynomial SkewPolynomial::one(const CommutationData& ctx) {
    return term(ctx, Monomial::unit(ctx.nvars()), Scalar::one(ctx.fs));
}

SkewPolynomial SkewPolynomial::term(const CommutationData& ctx, const Monomial& m,
                                    const Scalar& c) {
    SkewPolynomial p(ctx);
    p.add_term(m, c);
    return p;
}

int SkewPolynomial::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

bool SkewPolynomial::is_homogeneous() const {
    int d = -2;
    for (const auto& [m, c] : terms_) {
        if (d == -2) d = m.degree();
        else if (m.degree() != d) return false;
    }
    return true;
}

void SkewPolynomial::add_term(const Monomial& m, const Scalar& c) {
    if (c.is_zero()) return;
    if (m.nvars() != ctx_.nvars()) throw ConfigError("monomial arity mismatch");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SkewPolynomial SkewPolynomial::operator+(const SkewPolynomial& o) const {
    if (ctx_ != o.ctx_) throw ConfigError("mixing elements of different algebras");
    SkewPolynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

SkewPolynomial SkewPolynomial::operator-(const SkewPolynomial& o) const {
    if (ctx_ != o.ctx_) throw ConfigError("mixing elements of different algebras");
    SkewPolynomial r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

SkewPolynomial SkewPolynomial::operator-() const {
    SkewPolynomial r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

SkewPolynomial SkewPolynomial::scaled(const Scalar& c) const {
    SkewPolynomial r(ctx_);
    if (c.is_zero()) return r;
    for (const auto& [m, coef] : terms_) r.add_term(m, coef * c);
    return r;
}

SkewPolynomial SkewPolynomial::operator*(const SkewPolynomial& o) const {
    return multiply(*this, o);
}

bool SkewPolynomial::operator==(const SkewPolynomial& o) const {
    return ctx_ == o.ctx_ && terms_ == o.terms_;
}

SkewPolynomial multiply(const SkewPolynomial& f, const SkewPolynomial& g) {
    if (f.ctx() != g.ctx()) throw ConfigError("mixing elements of different algebras");
    const auto& fs = f.ctx().fs;
    SkewPolynomial r(f.ctx());
    for (const auto& [a, ca] : f.terms()) {
        for (const auto& [b, cb] : g.terms()) {
            Scalar c = ca * cb * field::q_power(fs, -kappa(a, b));
            r.add_term(a.times(b), c);
        }
    }
    return r;
}

std::vector<long> phi_twist_weights(const Monomial& u) {
    const auto& e = u.exponents();
    std::vector<long> w(e.size(), 0);
    long below = 0;          // sum of u_j for j < i
    long above = u.degree();  // sum of u_j for j > i
    for (size_t i = 0; i < e.size(); ++i) {
        above -= e[i];
        w[i] = below - above;
        below += e[i];
    }
    return w;
}

SkewPolynomial phi_twist_by_weights(const std::vector<long>& w, const SkewPolynomial& f) {
    const auto& fs = f.ctx().fs;
    SkewPolynomial r(f.ctx());
    for (const auto& [m, c] : f.terms()) {
        long e = 0;
        for (size_t i = 0; i < w.size(); ++i) e += w[i] * m.exponent(static_cast<int>(i));
        r.add_term(m, c * field::q_power(fs, e));
    }
    return r;
}

SkewPolynomial phi_twist(const Monomial& u, const SkewPolynomial& f) {
    return phi_twist_by_weights(phi_twist_weights(u), f);
}

namespace {

struct PolyParser {
    const std::string& s;
    const CommutationData& ctx;
    size_t pos = 0;

    PolyParser(const std::string& str, const CommutationData& c) : s(str), ctx(c) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ConfigError("polynomial parse error at offset " + std::to_string(pos) + ": " +
                          msg + " in \"" + s + "\"");
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool eat(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }

    long parse_long() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    }

    // balanced-paren scalar: "(...)/(...)" or "(...)"
    Scalar parse_paren_scalar() {
        size_t start = pos;
        int depth = 0;
        size_t i = pos;
        for (; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') {
                --depth;
                if (depth == 0) {
                    // include a following /(...) if present
                    size_t j = i + 1;
                    while (j < s.size() && (s[j] == ' ' || s[j] == '\t')) ++j;
                    if (j < s.size() && s[j] == '/') {
                        ++j;
                        while (j < s.size() && (s[j] == ' ' || s[j] == '\t')) ++j;
                        if (j >= s.size() || s[j] != '(') fail("expected '(' after '/'");
                        int d2 = 0;
                        for (; j < s.size(); ++j) {
                            if (s[j] == '(') ++d2;
                            if (s[j] == ')') {
                                --d2;
                                if (d2 == 0) break;
                            }
                        }
                        if (d2 != 0) fail("unbalanced parentheses");
                        i = j;
                    }
                    break;
                }
            }
        }
        if (i >= s.size()) fail("unbalanced parentheses");
        std::string inner = s.substr(start, i + 1 - start);
        pos = i + 1;
        return Scalar::parse(ctx.fs, inner);
    }

    // coefficient := paren scalar | product of rational and q-power atoms
    // (e.g. "3/2 q^-1", "q^2", "5"); empty coefficient means 1
    Scalar parse_coefficient(bool* any) {
        skip_ws();
        *any = false;
        Scalar c = Scalar::one(ctx.fs);
        while (pos < s.size()) {
            skip_ws();
            if (pos >= s.size()) break;
            char ch = s[pos];
            if (ch == '(') {
                c = c * parse_paren_scalar();
                *any = true;
            } else if (ch == 'q') {
                ++pos;
                long e = 1;
                if (eat('^')) e = parse_long();
                c = c * field::q_power(ctx.fs, e);
                *any = true;
            } else if (isdigit(static_cast<unsigned char>(ch))) {
                long num = parse_long();
                long den = 1;
                if (eat('/')) den = parse_long();
                if (den == 0) fail("zero denominator");
                c = c * Scalar::from_rational(ctx.fs, field::Rat(num, den));
                *any = true;
            } else {
                break;
            }
            // optional '*' between coefficient atoms or before the monomial
            skip_ws();
            if (pos < s.size() && s[pos] == '*') {
                size_t save = pos;
                ++pos;
                skip_ws();
                if (pos < s.size() && s[pos] == 'x') {
                    pos = save;  // the '*' belongs to the monomial boundary
                    break;
                }
                pos = save + 1;
            }
        }
        return c;
    }

    Monomial parse_monomial_opt(bool* any) {
        skip_ws();
        *any = false;
        std::vector<int> exp(ctx.nvars(), 0);
        eat('*');
        while (pos < s.size()) {
            skip_ws();
            if (pos >= s.size() || s[pos] != 'x') break;
            ++pos;
            long idx = parse_long();
            if (idx < 1 || idx > ctx.nvars())
                fail("variable index out of range: x" + std::to_string(idx));
            long e = 1;
            if (eat('^')) e = parse_long();
            if (e < 0) fail("negative exponent in monomial");
            exp[static_cast<size_t>(idx - 1)] += static_cast<int>(e);
            *any = true;
            if (!eat('*')) break;
        }
        return Monomial(std::move(exp));
    }
};

}  // namespace

namespace {

void enumerate_rec(int nvars, int pos, int remaining, std::vector<int>& cur,
                   std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        cur[static_cast<size_t>(pos)] = remaining;
        out.emplace_back(cur);
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        cur[static_cast<size_t>(pos)] = e;
        enumerate_rec(nvars, pos + 1, remaining - e, cur, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<int> cur(static_cast<size_t>(nvars), 0);
    enumerate_rec(nvars, 0, degree, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

Monomial parse_monomial(int nvars, const std::string& text) {
    CommutationData ctx{nvars - 1, field::FieldSpec::rationals()};
    PolyParser p(text, ctx);
    p.skip_ws();
    if (p.pos < text.size() && text[p.pos] == '1') {
        p.pos++;
        p.skip_ws();
        if (p.pos != text.size()) p.fail("trailing input after unit monomial");
        return Monomial::unit(nvars);
    }
    bool any = false;
    Monomial m = p.parse_monomial_opt(&any);
    p.skip_ws();
    if (!any || p.pos != text.size()) p.fail("expected monomial");
    return m;
}

SkewPolynomial parse_polynomial(const CommutationData& ctx, const std::string& text) {
    PolyParser p(text, ctx);
    SkewPolynomial r(ctx);
    p.skip_ws();
    if (p.pos < text.size() && text[p.pos] == '0' && p.pos + 1 == text.size()) return r;
    bool first = true;
    while (true) {
        p.skip_ws();
        if (p.pos >= text.size()) {
            if (first) p.fail("empty polynomial");
            break;
        }
        int sign = 1;
        if (p.eat('-')) sign = -1;
        else if (!first) {
            if (!p.eat('+')) p.fail("expected '+' or '-'");
            if (p.eat('-')) sign = -1;
        } else {
            p.eat('+');
        }
        bool has_coeff = false, has_mono = false;
        Scalar c = p.parse_coefficient(&has_coeff);
        Monomial m = p.parse_monomial_opt(&has_mono);
        if (!has_coeff && !has_mono) p.fail("expected term");
        if (sign < 0) c = -c;
        r.add_term(m, c);
        first = false;
    }
    return r;
}

namespace {

// Coefficient rendering for term lists; wraps composite scalars in parens.
std::string coeff_to_string(const Scalar& c, bool unit_monomial) {
    std::string s = c.to_string();
    bool composite = false;
    for (size_t i = 1; i < s.size(); ++i) {
        if (s[i] == '+' || s[i] == '-') {
            composite = true;
            break;
        }
    }
    if (composite && s[0] != '(') s = "(" + s + ")";
    if (!unit_monomial) {
        if (s == "1") return "";
        if (s == "-1") return "-";
    }
    return s;
}

}  // namespace

std::string SkewPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print in descending storage order (highest monomial first)
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string cs = coeff_to_string(it->second, it->first.is_unit());
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            first = false;
            if (negative) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (negative ? " - " : " + ");
            if (negative) cs = cs.substr(1);
        }
        if (it->first.is_unit()) {
            os << (cs.empty() ? "1" : cs);
        } else {
            if (!cs.empty()) os << cs << " ";
            os << it->first.to_string();
        }
    }
    return os.str();
}

}  // namespace skew
}  // namespace qps
