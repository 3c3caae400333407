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

#include "qps/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace qps {
namespace field {

int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    poly_trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rat(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    poly_trim(r);
    return r;
}

Poly poly_neg(const Poly& a) {
    Poly r(a);
    for (auto& c : r) c = -c;
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    poly_trim(r);
    return r;
}

void poly_divrem(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    if (b.empty()) throw ArithmeticError("polynomial division by zero");
    rem = a;
    quot.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
    const Rat& lead = b.back();
    while (rem.size() >= b.size() && !rem.empty()) {
        size_t shift = rem.size() - b.size();
        Rat c = rem.back() / lead;
        quot[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        rem.pop_back();  // leading term cancels exactly
        poly_trim(rem);
    }
    poly_trim(quot);
}

Poly poly_make_monic(Poly p) {
    if (p.empty()) return p;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.empty()) {
        Poly q, r;
        poly_divrem(a, b, q, r);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(std::move(a));
}

Poly poly_one() { return Poly{Rat(1)}; }

Poly poly_q_power(int e) {
    Poly p(static_cast<size_t>(e) + 1, Rat(0));
    p.back() = 1;
    return p;
}

std::string poly_to_string(const Poly& p) {
    if (p.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = poly_degree(p); i >= 0; --i) {
        const Rat& c = p[static_cast<size_t>(i)];
        if (c == 0) continue;
        Rat ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        bool unit = (ac == 1);
        if (i == 0 || !unit) os << ac.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

const Poly& cyclotomic_impl(int m, std::map<int, Poly>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // Phi_m = (q^m - 1) / prod_{d | m, d < m} Phi_d
    Poly num(static_cast<size_t>(m) + 1, Rat(0));
    num[0] = -1;
    num.back() = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        const Poly& phi_d = cyclotomic_impl(d, cache);
        Poly quot, rem;
        poly_divrem(num, phi_d, quot, rem);
        if (!rem.empty()) throw ArithmeticError("cyclotomic division not exact");
        num = std::move(quot);
    }
    return cache.emplace(m, std::move(num)).first->second;
}

}  // namespace

const Poly& cyclotomic_polynomial(int m) {
    static std::map<int, Poly> cache;
    static std::mutex mu;
    if (m < 1) throw ConfigError("cyclotomic order must be >= 1");
    std::lock_guard<std::mutex> lock(mu);
    return cyclotomic_impl(m, cache);
}

FieldSpec FieldSpec::cyclotomic(int m) {
    if (m < 2) throw ConfigError("cyclotomic order must be >= 2");
    return FieldSpec(FieldKind::CyclotomicQ, m);
}

int FieldSpec::residue_degree() const {
    if (kind_ != FieldKind::CyclotomicQ) return 1;
    return poly_degree(cyclotomic_polynomial(order_));
}

std::string FieldSpec::to_string() const {
    switch (kind_) {
        case FieldKind::Rationals: return "rationals";
        case FieldKind::GenericQ: return "generic_q";
        case FieldKind::CyclotomicQ: return "cyclotomic(" + std::to_string(order_) + ")";
    }
    return "?";
}

void Scalar::check_same(const FieldSpec& a, const FieldSpec& b) {
    if (a != b)
        throw ConfigError("mixing scalars from different field specs: " + a.to_string() +
                          " vs " + b.to_string());
}

Scalar Scalar::zero(const FieldSpec& fs) { return Scalar(fs, {}, poly_one()); }

Scalar Scalar::one(const FieldSpec& fs) { return Scalar(fs, poly_one(), poly_one()); }

Scalar Scalar::from_int(const FieldSpec& fs, long v) { return from_rational(fs, Rat(v)); }

Scalar Scalar::from_rational(const FieldSpec& fs, const Rat& v) {
    Rat c(v);
    c.canonicalize();  // mpq_class(p, q) is not canonical by itself
    if (c == 0) return zero(fs);
    return Scalar(fs, Poly{c}, poly_one());
}

Scalar Scalar::from_poly(const FieldSpec& fs, Poly p) {
    poly_trim(p);
    Scalar s(fs, std::move(p), poly_one());
    s.normalize();
    return s;
}

bool Scalar::is_one() const {
    return num_.size() == 1 && num_[0] == 1 && den_.size() == 1 && den_[0] == 1;
}

void Scalar::normalize() {
    if (num_.empty()) {
        den_ = poly_one();
        return;
    }
    switch (spec_.kind()) {
        case FieldKind::Rationals: {
            // evaluate at q = 1
            Rat n(0), d(0);
            for (const auto& c : num_) n += c;
            for (const auto& c : den_) d += c;
            if (d == 0) throw ArithmeticError("denominator vanishes at q = 1");
            Rat v = n / d;
            num_.clear();
            if (v != 0) num_.push_back(v);
            den_ = poly_one();
            break;
        }
        case FieldKind::GenericQ: {
            Poly g = poly_gcd(num_, den_);
            if (poly_degree(g) > 0) {
                Poly q, r;
                poly_divrem(num_, g, q, r);
                num_ = q;
                poly_divrem(den_, g, q, r);
                den_ = q;
            }
            // monic denominator is the canonical form
            Rat lead = den_.back();
            if (lead != 1) {
                for (auto& c : den_) c /= lead;
                for (auto& c : num_) c /= lead;
            }
            break;
        }
        case FieldKind::CyclotomicQ: {
            const Poly& phi = cyclotomic_polynomial(spec_.cyclotomic_order());
            Poly q, r;
            if (poly_degree(num_) >= poly_degree(phi)) {
                poly_divrem(num_, phi, q, r);
                num_ = r;
            }
            if (!(den_.size() == 1 && den_[0] == 1)) {
                if (poly_degree(den_) >= poly_degree(phi)) {
                    poly_divrem(den_, phi, q, r);
                    den_ = r;
                }
                Scalar inv_den = Scalar(spec_, den_, poly_one()).inv();
                Poly prod = poly_mul(num_, inv_den.num_);
                poly_divrem(prod, phi, q, r);
                num_ = r;
                den_ = poly_one();
            }
            break;
        }
    }
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(spec_, o.spec_);
    Scalar r(spec_, poly_add(poly_mul(num_, o.den_), poly_mul(o.num_, den_)),
             poly_mul(den_, o.den_));
    r.normalize();
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(spec_, o.spec_);
    Scalar r(spec_, poly_sub(poly_mul(num_, o.den_), poly_mul(o.num_, den_)),
             poly_mul(den_, o.den_));
    r.normalize();
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(spec_, o.spec_);
    if (is_zero() || o.is_zero()) return zero(spec_);
    Scalar r(spec_, poly_mul(num_, o.num_), poly_mul(den_, o.den_));
    r.normalize();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::operator-() const {
    return Scalar(spec_, poly_neg(num_), den_);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw ArithmeticError("inversion of zero");
    switch (spec_.kind()) {
        case FieldKind::Rationals:
            return Scalar(spec_, Poly{Rat(1) / num_[0]}, poly_one());
        case FieldKind::GenericQ: {
            Scalar r(spec_, den_, num_);
            r.normalize();
            return r;
        }
        case FieldKind::CyclotomicQ: {
            // extended Euclid: a*num + b*phi = 1
            const Poly& phi = cyclotomic_polynomial(spec_.cyclotomic_order());
            Poly r0 = phi, r1 = num_;
            Poly s0 = {}, s1 = poly_one();  // coefficients of num_
            while (!r1.empty()) {
                Poly q, rem;
                poly_divrem(r0, r1, q, rem);
                Poly s2 = poly_sub(s0, poly_mul(q, s1));
                r0 = std::move(r1);
                r1 = std::move(rem);
                s0 = std::move(s1);
                s1 = std::move(s2);
            }
            // r0 = gcd (a nonzero constant: phi is squarefree and num != 0 mod phi)
            if (poly_degree(r0) != 0)
                throw ArithmeticError("non-invertible cyclotomic residue");
            Rat c = r0[0];
            for (auto& v : s0) v /= c;
            Scalar r(spec_, std::move(s0), poly_one());
            r.normalize();
            return r;
        }
    }
    throw ArithmeticError("unreachable");
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(spec_, o.spec_);
    return num_ == o.num_ && den_ == o.den_;
}

const Rat& Scalar::rational() const {
    if (spec_.kind() != FieldKind::Rationals)
        throw ConfigError("rational() called on a non-rational scalar");
    static const Rat kZero(0);
    return num_.empty() ? kZero : num_[0];
}

namespace {

// Rewrite a rational-coefficient fraction as an integer-coefficient one with
// coprime contents and positive leading denominator coefficient.
void integerize(const Poly& num, const Poly& den, std::vector<mpz_class>& ni,
                std::vector<mpz_class>& di) {
    mpz_class lcm(1);
    for (const auto& c : num) lcm = lcm / gcd(lcm, c.get_den()) * c.get_den();
    for (const auto& c : den) lcm = lcm / gcd(lcm, c.get_den()) * c.get_den();
    ni.clear();
    di.clear();
    for (const auto& c : num) ni.push_back(mpz_class(c * lcm));
    for (const auto& c : den) di.push_back(mpz_class(c * lcm));
    mpz_class content(0);
    for (const auto& c : ni) content = gcd(content, c);
    for (const auto& c : di) content = gcd(content, c);
    if (content != 0) {
        for (auto& c : ni) c /= content;
        for (auto& c : di) c /= content;
    }
    if (!di.empty() && di.back() < 0) {
        for (auto& c : ni) c = -c;
        for (auto& c : di) c = -c;
    }
}

std::string int_poly_to_string(const std::vector<mpz_class>& p) {
    Poly q;
    for (const auto& c : p) q.push_back(Rat(c));
    poly_trim(q);
    return poly_to_string(q);
}

}  // namespace

std::string Scalar::to_string() const {
    if (is_zero()) return "0";
    switch (spec_.kind()) {
        case FieldKind::Rationals:
            return num_[0].get_str();
        case FieldKind::CyclotomicQ:
            return poly_to_string(num_);
        case FieldKind::GenericQ: {
            std::vector<mpz_class> ni, di;
            integerize(num_, den_, ni, di);
            if (di.size() == 1 && di[0] == 1) return int_poly_to_string(ni);
            return "(" + int_poly_to_string(ni) + ")/(" + int_poly_to_string(di) + ")";
        }
    }
    return "?";
}

namespace {

// Minimal recursive-descent parser for the printed scalar forms:
//   fraction of polynomial atoms, terms like 3/2*q^-1 handled at the q level
//   by expanding negative powers into the denominator.
struct ScalarParser {
    const std::string& s;
    size_t pos = 0;
    explicit ScalarParser(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ConfigError("scalar parse error at offset " + std::to_string(pos) + ": " + msg);
    }

    mpz_class parse_integer() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
        while (pos < s.size() && isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected integer");
        return mpz_class(s.substr(start, pos - start));
    }

    // term := [rational] [*] [q [^ int]]; returns (coeff, q-exponent)
    std::pair<Rat, int> parse_term() {
        skip_ws();
        Rat coeff(1);
        bool have_coeff = false;
        if (pos < s.size() && (isdigit(static_cast<unsigned char>(s[pos])))) {
            mpz_class n = parse_integer();
            mpz_class d(1);
            if (eat('/')) d = parse_integer();
            coeff = Rat(n, d);
            coeff.canonicalize();
            have_coeff = true;
        }
        skip_ws();
        if (pos < s.size() && (s[pos] == '*' )) ++pos;
        skip_ws();
        int e = 0;
        if (pos < s.size() && s[pos] == 'q') {
            ++pos;
            e = 1;
            if (eat('^')) e = static_cast<int>(parse_integer().get_si());
        } else if (!have_coeff) {
            fail("expected coefficient or q");
        }
        return {coeff, e};
    }

    // sum of signed terms
    std::pair<Poly, int> parse_poly_atom() {
        // returns polynomial together with the lowest q-exponent offset
        // (so q^-2+q parses as (1 + q^3) with offset -2)
        std::vector<std::pair<Rat, int>> terms;
        int sign = 1;
        skip_ws();
        if (eat('-')) sign = -1;
        else eat('+');
        auto [c, e] = parse_term();
        terms.push_back({sign * c, e});
        while (true) {
            skip_ws();
            if (pos >= s.size() || (s[pos] != '+' && s[pos] != '-')) break;
            sign = (s[pos] == '-') ? -1 : 1;
            ++pos;
            auto [c2, e2] = parse_term();
            terms.push_back({sign * c2, e2});
        }
        int min_e = 0;
        for (auto& t : terms) min_e = std::min(min_e, t.second);
        int max_e = 0;
        for (auto& t : terms) max_e = std::max(max_e, t.second);
        Poly p(static_cast<size_t>(max_e - min_e) + 1, Rat(0));
        for (auto& t : terms) p[static_cast<size_t>(t.second - min_e)] += t.first;
        poly_trim(p);
        return {p, min_e};
    }
};

}  // namespace

Scalar Scalar::parse(const FieldSpec& fs, const std::string& text) {
    ScalarParser p(text);
    p.skip_ws();
    Poly num, den = poly_one();
    int num_off = 0, den_off = 0;
    if (p.eat('(')) {
        std::tie(num, num_off) = p.parse_poly_atom();
        if (!p.eat(')')) p.fail("expected ')'");
        if (p.eat('/')) {
            if (!p.eat('(')) p.fail("expected '('");
            std::tie(den, den_off) = p.parse_poly_atom();
            if (!p.eat(')')) p.fail("expected ')'");
        }
    } else {
        std::tie(num, num_off) = p.parse_poly_atom();
        p.skip_ws();
        if (p.eat('/')) {
            // plain rational like 3/4 was already folded into the first term
            p.fail("unexpected '/'");
        }
    }
    p.skip_ws();
    if (p.pos != p.s.size()) p.fail("trailing input");
    Scalar r(fs, std::move(num), std::move(den));
    r.normalize();
    int e = num_off - den_off;
    if (e != 0) r = r * q_power(fs, e);
    return r;
}

Scalar q_power(const FieldSpec& fs, long e) {
    switch (fs.kind()) {
        case FieldKind::Rationals:
            return Scalar::one(fs);
        case FieldKind::GenericQ: {
            if (e >= 0) return Scalar::from_poly(fs, poly_q_power(static_cast<int>(e)));
            return Scalar::one(fs) / Scalar::from_poly(fs, poly_q_power(static_cast<int>(-e)));
        }
        case FieldKind::CyclotomicQ: {
            long m = fs.cyclotomic_order();
            long r = ((e % m) + m) % m;
            return Scalar::from_poly(fs, poly_q_power(static_cast<int>(r)));
        }
    }
    throw ArithmeticError("unreachable");
}

}  // namespace field
}  // namespace qps
