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

#include "qps/scalar.hpp"

using namespace qps::field;

namespace {

std::vector<FieldSpec> all_specs() {
    return {FieldSpec::rationals(), FieldSpec::generic_q(), FieldSpec::cyclotomic(3),
            FieldSpec::cyclotomic(4)};
}

Scalar random_scalar(const FieldSpec& fs, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    std::uniform_int_distribution<int> qe(-4, 4);
    Scalar s = Scalar::from_rational(fs, Rat(num(rng), den(rng)));
    return s * q_power(fs, qe(rng));
}

}  // namespace

TEST_CASE("rational arithmetic basics") {
    FieldSpec fs = FieldSpec::rationals();
    Scalar a = Scalar::from_rational(fs, Rat(1, 2));
    Scalar b = Scalar::from_rational(fs, Rat(1, 3));
    CHECK((a + b) == Scalar::from_rational(fs, Rat(5, 6)));
    CHECK(q_power(fs, 17) == Scalar::one(fs));
}

TEST_CASE("generic q inverse") {
    FieldSpec fs = FieldSpec::generic_q();
    Scalar q = q_power(fs, 1);
    Scalar qi = q.inv();
    CHECK(qi == q_power(fs, -1));
    CHECK((q * qi) == Scalar::one(fs));
}

TEST_CASE("cyclotomic order 4: q*q = -1") {
    FieldSpec fs = FieldSpec::cyclotomic(4);
    Scalar q = q_power(fs, 1);
    CHECK((q * q) == -Scalar::one(fs));
}

TEST_CASE("cyclotomic q_power wraps and inverts") {
    FieldSpec c3 = FieldSpec::cyclotomic(3);
    CHECK(q_power(c3, 3) == Scalar::one(c3));
    CHECK(q_power(c3, 5) == q_power(c3, 2));

    // inverse of q in Q[q]/(q^2+1) via the extended-Euclid route inside inv()
    FieldSpec c4 = FieldSpec::cyclotomic(4);
    Scalar qinv = q_power(c4, -1);
    CHECK(qinv == -q_power(c4, 1));
    CHECK((q_power(c4, 1) * qinv) == Scalar::one(c4));
    Scalar euclid = q_power(c4, 1).inv();
    CHECK(euclid == qinv);
}

TEST_CASE("q_power(e) * q_power(-e) = 1 for |e| <= 50") {
    for (const auto& fs : all_specs())
        for (long e = -50; e <= 50; ++e)
            CHECK((q_power(fs, e) * q_power(fs, -e)) == Scalar::one(fs));
}

TEST_CASE("q_power in cyclotomic fields depends only on e mod m") {
    for (int m : {3, 4, 5, 6}) {
        FieldSpec fs = FieldSpec::cyclotomic(m);
        for (long e = -20; e <= 20; ++e)
            CHECK(q_power(fs, e) == q_power(fs, ((e % m) + m) % m));
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(20260811);
    for (const auto& fs : all_specs()) {
        for (int i = 0; i < 250; ++i) {
            Scalar a = random_scalar(fs, rng);
            Scalar b = random_scalar(fs, rng);
            Scalar c = random_scalar(fs, rng);
            CHECK(((a + b) + c) == (a + (b + c)));
            CHECK(((a * b) * c) == (a * (b * c)));
            CHECK((a * (b + c)) == (a * b + a * c));
            if (!a.is_zero()) {
                CHECK((a * a.inv()) == Scalar::one(fs));
            }
        }
    }
}

TEST_CASE("inversion of zero throws") {
    for (const auto& fs : all_specs())
        CHECK_THROWS_AS(Scalar::zero(fs).inv(), qps::ArithmeticError);
}

TEST_CASE("mixing field specs throws") {
    Scalar a = Scalar::one(FieldSpec::rationals());
    Scalar b = Scalar::one(FieldSpec::generic_q());
    CHECK_THROWS_AS((void)(a + b), qps::ConfigError);
}

TEST_CASE("scalar serialization round-trips") {
    std::mt19937 rng(7);
    for (const auto& fs : all_specs()) {
        for (int i = 0; i < 100; ++i) {
            Scalar a = random_scalar(fs, rng);
            Scalar b = random_scalar(fs, rng);
            Scalar s = a + b;  // exercise sums of q-powers
            Scalar back = Scalar::parse(fs, s.to_string());
            CHECK(back == s);
        }
    }
    FieldSpec g = FieldSpec::generic_q();
    Scalar s = (q_power(g, 2) + Scalar::one(g)) / (q_power(g, 1) - Scalar::from_int(g, 3));
    CHECK(Scalar::parse(g, s.to_string()) == s);
}

TEST_CASE("cyclotomic polynomial table") {
    CHECK(poly_to_string(cyclotomic_polynomial(1)) == "q-1");
    CHECK(poly_to_string(cyclotomic_polynomial(2)) == "q+1");
    CHECK(poly_to_string(cyclotomic_polynomial(3)) == "q^2+q+1");
    CHECK(poly_to_string(cyclotomic_polynomial(4)) == "q^2+1");
    CHECK(poly_to_string(cyclotomic_polynomial(6)) == "q^2-q+1");
    CHECK(poly_to_string(cyclotomic_polynomial(12)) == "q^4-q^2+1");
}
