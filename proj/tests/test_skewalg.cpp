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

#include <doctest.h>

#include <random>

#include "qps/skewalg.hpp"

using namespace qps::skew;
using qps::field::FieldSpec;
using qps::field::Scalar;
using qps::field::q_power;

namespace {

// Independent oracle: normalize a literal word (sequence of 1-based variable
// indices) by adjacent transpositions; every swap of an out-of-order pair
// x_j x_i with i < j costs one factor q^{-1}.
std::pair<long, std::vector<int>> normalize_word(std::vector<int> word) {
    long qexp = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] > word[i + 1]) {
                std::swap(word[i], word[i + 1]);
                qexp -= 1;
                moved = true;
            }
        }
    }
    return {qexp, word};
}

std::vector<int> monomial_word(const Monomial& m) {
    std::vector<int> w;
    for (int i = 0; i < m.nvars(); ++i)
        for (int k = 0; k < m.exponent(i); ++k) w.push_back(i + 1);
    return w;
}

Monomial random_monomial(int nvars, int maxdeg, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(0, maxdeg);
    std::vector<int> exp(static_cast<size_t>(nvars), 0);
    int deg = d(rng);
    std::uniform_int_distribution<int> v(0, nvars - 1);
    for (int i = 0; i < deg; ++i) exp[static_cast<size_t>(v(rng))]++;
    return Monomial(std::move(exp));
}

SkewPolynomial random_homogeneous(const CommutationData& ctx, int deg, std::mt19937& rng) {
    auto monos = monomials_of_degree(ctx.nvars(), deg);
    std::uniform_int_distribution<int> c(-3, 3);
    SkewPolynomial p(ctx);
    for (const auto& m : monos) {
        int cv = c(rng);
        if (cv != 0) p.add_term(m, Scalar::from_int(ctx.fs, cv));
    }
    return p;
}

}  // namespace

TEST_CASE("kappa identity") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        Monomial a = random_monomial(4, 6, rng);
        Monomial b = random_monomial(4, 6, rng);
        long lhs = kappa(a, b) + kappa(b, a);
        long dot = 0;
        for (int i = 0; i < 4; ++i) dot += static_cast<long>(a.exponent(i)) * b.exponent(i);
        CHECK(lhs == static_cast<long>(a.degree()) * b.degree() - dot);
    }
}

TEST_CASE("basic commutation in two variables") {
    CommutationData ctx{1, FieldSpec::generic_q()};
    auto x1 = SkewPolynomial::term(ctx, Monomial::variable(2, 1), Scalar::one(ctx.fs));
    auto x2 = SkewPolynomial::term(ctx, Monomial::variable(2, 2), Scalar::one(ctx.fs));

    // x2 * x1 = q^{-1} x1 x2
    auto p = multiply(x2, x1);
    auto expected = SkewPolynomial::term(ctx, Monomial({1, 1}), q_power(ctx.fs, -1));
    CHECK(p == expected);

    // x1 * x2 stays normal ordered with scalar 1
    CHECK(multiply(x1, x2) == SkewPolynomial::term(ctx, Monomial({1, 1}), Scalar::one(ctx.fs)));

    // x2^2 * x1 = q^{-2} x1 x2^2, matching the word oracle
    auto x2sq = multiply(x2, x2);
    auto r = multiply(x2sq, x1);
    auto [qe, word] = normalize_word({2, 2, 1});
    CHECK(qe == -2);
    CHECK(r == SkewPolynomial::term(ctx, Monomial({1, 2}), q_power(ctx.fs, qe)));
}

TEST_CASE("monomial product matches word-normalization oracle") {
    std::mt19937 rng(20260811);
    for (const auto& fs :
         {FieldSpec::generic_q(), FieldSpec::cyclotomic(3), FieldSpec::rationals()}) {
        for (int trial = 0; trial < 150; ++trial) {
            int n = 1 + static_cast<int>(rng() % 3);
            CommutationData ctx{n, fs};
            Monomial a = random_monomial(n + 1, 5, rng);
            Monomial b = random_monomial(n + 1, 5, rng);
            auto prod = multiply(SkewPolynomial::term(ctx, a, Scalar::one(fs)),
                                 SkewPolynomial::term(ctx, b, Scalar::one(fs)));
            std::vector<int> word = monomial_word(a);
            for (int v : monomial_word(b)) word.push_back(v);
            auto [qe, norm] = normalize_word(word);
            CHECK(prod == SkewPolynomial::term(ctx, a.times(b), q_power(fs, qe)));
        }
    }
}

TEST_CASE("associativity on random homogeneous triples") {
    std::mt19937 rng(99);
    for (const auto& fs : {FieldSpec::generic_q(), FieldSpec::cyclotomic(4)}) {
        for (int trial = 0; trial < 60; ++trial) {
            int n = 1 + static_cast<int>(rng() % 3);
            CommutationData ctx{n, fs};
            auto f = random_homogeneous(ctx, 1 + static_cast<int>(rng() % 2), rng);
            auto g = random_homogeneous(ctx, 1 + static_cast<int>(rng() % 2), rng);
            auto h = random_homogeneous(ctx, 1 + static_cast<int>(rng() % 2), rng);
            CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
        }
    }
}

TEST_CASE("PBW dimension count") {
    for (int n = 1; n <= 3; ++n) {
        for (int d = 0; d <= 10; ++d) {
            long expect = 1;
            for (int i = 1; i <= n; ++i) expect = expect * (d + i) / i;  // C(n+d, n)
            CHECK(static_cast<long>(monomials_of_degree(n + 1, d).size()) == expect);
        }
    }
}

TEST_CASE("twist automorphism") {
    CommutationData ctx{1, FieldSpec::generic_q()};
    auto x1 = SkewPolynomial::term(ctx, Monomial::variable(2, 1), Scalar::one(ctx.fs));

    // phi_{x2}(x1) = q^{-1} x1
    Monomial u = Monomial::variable(2, 2);
    CHECK(phi_twist(u, x1) == x1.scaled(q_power(ctx.fs, -1)));

    // phi_{x1x2}(x1) = q^{-1} x1, certified by the defining identity
    Monomial u2 = Monomial({1, 1});
    auto up = SkewPolynomial::term(ctx, u2, Scalar::one(ctx.fs));
    CHECK(multiply(up, x1) == multiply(phi_twist(u2, x1), up));
    CHECK(phi_twist(u2, x1) == x1.scaled(q_power(ctx.fs, -1)));
}

TEST_CASE("twist is trivial at q = 1 and is an algebra map") {
    std::mt19937 rng(5);
    CommutationData ctx1{2, FieldSpec::rationals()};
    auto f1 = random_homogeneous(ctx1, 2, rng);
    CHECK(phi_twist(Monomial({1, 2, 0}), f1) == f1);

    CommutationData ctx{2, FieldSpec::generic_q()};
    for (int trial = 0; trial < 40; ++trial) {
        Monomial u = random_monomial(3, 3, rng);
        auto f = random_homogeneous(ctx, 1 + static_cast<int>(rng() % 2), rng);
        auto g = random_homogeneous(ctx, 1 + static_cast<int>(rng() % 2), rng);
        CHECK(phi_twist(u, multiply(f, g)) == multiply(phi_twist(u, f), phi_twist(u, g)));
        // defining identity u * f = phi_u(f) * u
        auto up = SkewPolynomial::term(ctx, u, Scalar::one(ctx.fs));
        CHECK(multiply(up, f) == multiply(phi_twist(u, f), up));
    }
}

TEST_CASE("q = 1 multiplication is commutative") {
    std::mt19937 rng(17);
    CommutationData ctx{2, FieldSpec::rationals()};
    for (int trial = 0; trial < 40; ++trial) {
        auto f = random_homogeneous(ctx, 2, rng);
        auto g = random_homogeneous(ctx, 3, rng);
        CHECK(multiply(f, g) == multiply(g, f));
    }
}

TEST_CASE("polynomial text round-trip") {
    CommutationData ctx{1, FieldSpec::generic_q()};
    for (const char* text : {"q^-1 x1*x2 + 2 x2^2", "x1", "1", "0", "3/2 x1^2", "x1^2*x2",
                             "q^2 x1 + q^-2 x2", "2*q^3*x1", "5", "-x1 + x2"}) {
        auto p = parse_polynomial(ctx, text);
        auto q = parse_polynomial(ctx, p.to_string());
        CHECK(p == q);
    }
    CommutationData c4{1, FieldSpec::cyclotomic(4)};
    auto p = parse_polynomial(c4, "(q+1) x1*x2 + q^3 x2^2");
    CHECK(parse_polynomial(c4, p.to_string()) == p);

    CHECK(parse_monomial(3, "x1^2*x3") == Monomial({2, 0, 1}));
    CHECK(parse_monomial(3, "1") == Monomial({0, 0, 0}));
    CHECK(Monomial({2, 0, 1}).to_string() == "x1^2*x3");
}

TEST_CASE("homogeneity detection") {
    CommutationData ctx{1, FieldSpec::generic_q()};
    CHECK(parse_polynomial(ctx, "x1*x2 + x2^2").is_homogeneous());
    CHECK_FALSE(parse_polynomial(ctx, "x1 + x2^2").is_homogeneous());
    CHECK(SkewPolynomial::zero(ctx).is_homogeneous());
}
