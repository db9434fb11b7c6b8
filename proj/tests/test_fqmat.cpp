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

#include <random>

#include "doctest.h"
#include "springerlab/fqmat.hpp"

using namespace sl;

namespace {
FqMat random_mat(const Field* k, std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<unsigned> dist(0, k->q() - 1);
    FqMat m(k, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, static_cast<Field::Elt>(dist(rng)));
    return m;
}
}  // namespace

TEST_CASE("rref gives one canonical basis per row space") {
    std::mt19937 rng(5);
    for (auto [p, e] : {std::pair<unsigned, unsigned>{3, 1}, {3, 2}, {5, 2}}) {
        Field k(p, e);
        std::uniform_int_distribution<unsigned> dist(0, k.q() - 1);
        for (int t = 0; t < 30; ++t) {
            FqMat a = random_mat(&k, rng, 4, 7);
            // b spans the same space: random invertible combinations
            FqMat b = a;
            for (int mix = 0; mix < 10; ++mix) {
                std::size_t i = rng() % 4, j = rng() % 4;
                if (i == j) continue;
                b.row_axpy(i, j, static_cast<Field::Elt>(dist(rng)));
            }
            a.rref();
            b.rref();
            CHECK(a == b);
        }
    }
}

TEST_CASE("right kernel annihilates and has complementary dimension") {
    std::mt19937 rng(9);
    Field k(3, 2);
    for (int t = 0; t < 30; ++t) {
        FqMat a = random_mat(&k, rng, 3, 6);
        FqMat ker = a.right_kernel();
        CHECK(ker.rows() + a.rank() == 6);
        for (std::size_t i = 0; i < ker.rows(); ++i) {
            // a * x^T = 0 componentwise
            auto x = ker.row(i);
            for (std::size_t r = 0; r < a.rows(); ++r) {
                Field::Elt acc = 0;
                for (std::size_t c = 0; c < a.cols(); ++c)
                    acc = k.add(acc, k.mul(a.get(r, c), x[c]));
                CHECK(acc == 0);
            }
        }
    }
}

TEST_CASE("span intersection of two planes in F_3^3") {
    Field k(3, 1);
    FqMat a = FqMat::from_rows(&k, 3, {{1, 0, 0}, {0, 1, 0}});
    FqMat b = FqMat::from_rows(&k, 3, {{0, 1, 0}, {0, 0, 1}});
    FqMat cap = FqMat::intersect_spans(a, b);
    CHECK(cap.rows() == 1);
    CHECK(cap.get(0, 0) == 0);
    CHECK(cap.get(0, 1) == 1);
    CHECK(cap.get(0, 2) == 0);
}

TEST_CASE("intersection respects dimension formula on random spans") {
    std::mt19937 rng(29);
    Field k(5, 1);
    for (int t = 0; t < 40; ++t) {
        FqMat a = random_mat(&k, rng, 3, 6);
        FqMat b = random_mat(&k, rng, 3, 6);
        std::size_t ra = a.rank(), rb = b.rank();
        FqMat sum = a;
        sum.append_rows(b);
        std::size_t rsum = sum.rank();
        FqMat cap = FqMat::intersect_spans(a, b);
        CHECK(cap.rows() == ra + rb - rsum);
    }
}

TEST_CASE("reduce_by detects membership and returns coordinates") {
    Field k(3, 2);
    std::mt19937 rng(31);
    FqMat a = random_mat(&k, rng, 3, 6);
    auto piv = a.rref();
    std::uniform_int_distribution<unsigned> dist(0, k.q() - 1);
    for (int t = 0; t < 20; ++t) {
        std::vector<Field::Elt> combo(a.cols(), 0);
        std::vector<Field::Elt> weights;
        for (std::size_t r = 0; r < a.rows(); ++r)
            weights.push_back(static_cast<Field::Elt>(dist(rng)));
        for (std::size_t r = 0; r < a.rows(); ++r)
            for (std::size_t c = 0; c < a.cols(); ++c)
                combo[c] = k.add(combo[c], k.mul(weights[r], a.get(r, c)));
        std::vector<Field::Elt> coords;
        auto v = combo;
        CHECK(a.reduce_by(v, piv, &coords));
        CHECK(coords == weights);  // rref rows are the canonical basis
    }
}

TEST_CASE("matrix product matches scalar evaluation") {
    Field k(3, 2);
    std::mt19937 rng(37);
    FqMat a = random_mat(&k, rng, 4, 5);
    FqMat b = random_mat(&k, rng, 5, 3);
    FqMat c = a.multiplied(b);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Field::Elt acc = 0;
            for (std::size_t l = 0; l < 5; ++l)
                acc = k.add(acc, k.mul(a.get(i, l), b.get(l, j)));
            CHECK(c.get(i, j) == acc);
        }
}
