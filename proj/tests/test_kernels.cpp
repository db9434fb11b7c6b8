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
#include "springerlab/kernels.hpp"

using namespace sl::kern;

namespace {
const uint16_t kPrimes[] = {3, 5, 7, 11, 13, 31, 127, 251};
}

TEST_CASE("scalar axpy reduces exactly for every sum below p(p+1)") {
    for (uint16_t p : kPrimes) {
        ModCtx m(p);
        for (uint16_t c = 0; c < p; ++c)
            for (uint16_t y0 = 0; y0 < p; ++y0) {
                uint16_t y = y0, x = static_cast<uint16_t>(p - 1);
                scalar_kernels().axpy(&y, &x, 1, c, m);
                CHECK(y == static_cast<uint16_t>((y0 + c * (p - 1)) % p));
            }
    }
}

TEST_CASE("scalar and avx2 kernels agree on random rows") {
    const RowKernels* simd = avx2_kernels();
    if (simd == nullptr) {
        MESSAGE("AVX2 not available; scalar-only build");
        return;
    }
    std::mt19937 rng(12345);
    for (uint16_t p : kPrimes) {
        ModCtx m(p);
        std::uniform_int_distribution<uint32_t> dist(0, p - 1u);
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t n = 1 + rng() % 70;
            std::vector<uint16_t> x(n), y1(n), y2(n);
            for (std::size_t i = 0; i < n; ++i) {
                x[i] = static_cast<uint16_t>(dist(rng));
                y1[i] = static_cast<uint16_t>(dist(rng));
            }
            y2 = y1;
            uint16_t c = static_cast<uint16_t>(dist(rng));
            scalar_kernels().axpy(y1.data(), x.data(), n, c, m);
            simd->axpy(y2.data(), x.data(), n, c, m);
            CHECK(y1 == y2);

            y2 = y1;
            scalar_kernels().scale(y1.data(), n, c, m);
            simd->scale(y2.data(), n, c, m);
            CHECK(y1 == y2);

            CHECK(scalar_kernels().is_zero(y1.data(), n) ==
                  simd->is_zero(y1.data(), n));
        }
        // worst case: all entries and the multiplier at p-1
        std::vector<uint16_t> x(64, static_cast<uint16_t>(p - 1));
        std::vector<uint16_t> y1(64, static_cast<uint16_t>(p - 1)), y2 = y1;
        scalar_kernels().axpy(y1.data(), x.data(), 64, static_cast<uint16_t>(p - 1), m);
        simd->axpy(y2.data(), x.data(), 64, static_cast<uint16_t>(p - 1), m);
        CHECK(y1 == y2);
        CHECK(y1[0] == static_cast<uint16_t>(((p - 1) + (p - 1) * (p - 1)) % p));
    }
}

TEST_CASE("is_zero sees a lone nonzero entry at any offset") {
    std::vector<uint16_t> v(40, 0);
    CHECK(scalar_kernels().is_zero(v.data(), v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = 1;
        CHECK_FALSE(active_kernels().is_zero(v.data(), v.size()));
        v[i] = 0;
    }
}

TEST_CASE("the runtime pick is one of the two implementations") {
    CHECK((active_kernel_name() == "scalar" || active_kernel_name() == "avx2"));
}
