/*
   Copyright 2026 the springer-lab authors

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

#include <memory>
#include <random>

#include "doctest.h"
#include "springerlab/errors.hpp"
#include "springerlab/field.hpp"

using namespace sl;

TEST_CASE("field axioms hold on random elements") {
    std::mt19937 rng(7);
    for (auto [p, m] : {std::pair<unsigned, unsigned>{3, 1},
                        {3, 2},
                        {3, 4},
                        {5, 2},
                        {7, 1},
                        {13, 2}}) {
        Field k(p, m);
        std::uniform_int_distribution<unsigned> dist(0, k.q() - 1);
        for (int t = 0; t < 200; ++t) {
            Field::Elt a = static_cast<Field::Elt>(dist(rng));
            Field::Elt b = static_cast<Field::Elt>(dist(rng));
            Field::Elt c = static_cast<Field::Elt>(dist(rng));
            CHECK(k.add(a, k.add(b, c)) == k.add(k.add(a, b), c));
            CHECK(k.mul(a, k.mul(b, c)) == k.mul(k.mul(a, b), c));
            CHECK(k.add(a, b) == k.add(b, a));
            CHECK(k.mul(a, b) == k.mul(b, a));
            CHECK(k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c)));
            CHECK(k.add(a, k.neg(a)) == 0);
            if (a != 0) CHECK(k.mul(a, k.inv(a)) == k.one());
        }
        // frobenius is an automorphism
        for (int t = 0; t < 100; ++t) {
            Field::Elt a = static_cast<Field::Elt>(dist(rng));
            Field::Elt b = static_cast<Field::Elt>(dist(rng));
            CHECK(k.frobenius(k.add(a, b)) == k.add(k.frobenius(a), k.frobenius(b)));
            CHECK(k.frobenius(k.mul(a, b)) == k.mul(k.frobenius(a), k.frobenius(b)));
            CHECK(k.frobenius(a, m) == a);  // x^(p^m) = x
        }
    }
}

TEST_CASE("mulmat is the regular representation") {
    Field k(3, 2);
    for (unsigned a = 0; a < k.q(); ++a)
        for (unsigned b = 0; b < k.q(); ++b) {
            const uint16_t* mat = k.mulmat(static_cast<Field::Elt>(a));
            auto bd = k.digits(static_cast<Field::Elt>(b));
            std::vector<uint16_t> prod(k.degree(), 0);
            for (unsigned i = 0; i < k.degree(); ++i)
                for (unsigned j = 0; j < k.degree(); ++j)
                    prod[i] = static_cast<uint16_t>(
                        (prod[i] + mat[i * k.degree() + j] * bd[j]) % k.p());
            CHECK(k.from_digits(prod) == k.mul(static_cast<Field::Elt>(a),
                                               static_cast<Field::Elt>(b)));
        }
}

TEST_CASE("quadratic extension: involution and epsilon") {
    for (auto [p, m] : {std::pair<unsigned, unsigned>{3, 1}, {5, 1}, {3, 2}}) {
        auto base = std::make_shared<Field>(p, m);
        QuadExt ext(base);
        const Field& K = ext.ext();
        CHECK(K.q() == base->q() * base->q());

        // conj is an involutive automorphism fixing exactly the base
        unsigned fixed = 0;
        for (unsigned a = 0; a < K.q(); ++a) {
            Field::Elt x = static_cast<Field::Elt>(a);
            CHECK(ext.conj(ext.conj(x)) == x);
            if (ext.conj(x) == x) ++fixed;
        }
        CHECK(fixed == base->q());

        // the embedding is a ring homomorphism onto the fixed field
        for (unsigned a = 0; a < base->q(); ++a)
            for (unsigned b = 0; b < base->q(); ++b) {
                Field::Elt ea = ext.embed(static_cast<Field::Elt>(a));
                Field::Elt eb = ext.embed(static_cast<Field::Elt>(b));
                CHECK(ext.embed(base->add(static_cast<Field::Elt>(a),
                                          static_cast<Field::Elt>(b))) ==
                      K.add(ea, eb));
                CHECK(ext.embed(base->mul(static_cast<Field::Elt>(a),
                                          static_cast<Field::Elt>(b))) ==
                      K.mul(ea, eb));
                CHECK(ext.in_base(ea));
            }

        // eps^q = -eps and eps is not in the base
        Field::Elt eps = ext.epsilon();
        CHECK(eps != 0);
        CHECK(ext.conj(eps) == K.neg(eps));
        CHECK_FALSE(ext.in_base(eps));
    }
}

TEST_CASE("eps in F_9 squares to -1") {
    // over q = 3 the involution-odd element can be normalized to sqrt(-1)
    auto base = std::make_shared<Field>(3, 1);
    QuadExt ext(base);
    const Field& K = ext.ext();
    Field::Elt eps = ext.epsilon();
    CHECK(K.mul(eps, eps) == K.neg(K.one()));
    // eps^3 = eps * eps^2 = -eps, the q-power involution
    CHECK(K.pow(eps, 3) == K.neg(eps));
}

TEST_CASE("bad fields are rejected") {
    CHECK_THROWS_AS(Field(4, 1), ConfigError);   // not prime
    CHECK_THROWS_AS(Field(2, 3), ConfigError);   // even characteristic
    CHECK_THROWS_AS(Field(3, 0), ConfigError);   // degree 0
    CHECK_THROWS_AS(Field(251, 2), ConfigError); // q > 4096
}
