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

#include "springerlab/kernels.hpp"

#include <cstdlib>

#if defined(__x86_64__) || defined(_M_X64)
#define SL_X86 1
#include <immintrin.h>
#else
#define SL_X86 0
#endif

namespace sl::kern {

namespace {

inline uint16_t reduce(uint32_t v, const ModCtx& m) {
    // v < p*(p+1) <= 255*256 < 2^16
    uint32_t q = (v * m.magic) >> 16;
    uint32_t r = v - q * m.p;
    if (r >= m.p) r -= m.p;
    if (r >= m.p) r -= m.p;
    return static_cast<uint16_t>(r);
}

void axpy_scalar(uint16_t* y, const uint16_t* x, std::size_t n, uint16_t c,
                 const ModCtx& m) {
    if (c == 0) return;
    for (std::size_t i = 0; i < n; ++i)
        y[i] = reduce(static_cast<uint32_t>(y[i]) + static_cast<uint32_t>(c) * x[i], m);
}

void scale_scalar(uint16_t* y, std::size_t n, uint16_t c, const ModCtx& m) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] = reduce(static_cast<uint32_t>(c) * y[i], m);
}

bool is_zero_scalar(const uint16_t* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (y[i] != 0) return false;
    return true;
}

#if SL_X86

__attribute__((target("avx2"))) inline __m256i reduce_avx2(__m256i v, __m256i p,
                                                           __m256i magic) {
    __m256i q = _mm256_mulhi_epu16(v, magic);
    __m256i r = _mm256_sub_epi16(v, _mm256_mullo_epi16(q, p));
    // conditional subtract twice: min works because r-p wraps when r < p
    r = _mm256_min_epu16(r, _mm256_sub_epi16(r, p));
    r = _mm256_min_epu16(r, _mm256_sub_epi16(r, p));
    return r;
}

__attribute__((target("avx2"))) void axpy_avx2(uint16_t* y, const uint16_t* x,
                                               std::size_t n, uint16_t c,
                                               const ModCtx& m) {
    if (c == 0) return;
    const __m256i vp = _mm256_set1_epi16(static_cast<short>(m.p));
    const __m256i vmag = _mm256_set1_epi16(static_cast<short>(m.magic));
    const __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i prod = _mm256_mullo_epi16(vc, vx);
        __m256i sum = _mm256_add_epi16(vy, prod);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i),
                            reduce_avx2(sum, vp, vmag));
    }
    for (; i < n; ++i)
        y[i] = reduce(static_cast<uint32_t>(y[i]) + static_cast<uint32_t>(c) * x[i], m);
}

__attribute__((target("avx2"))) void scale_avx2(uint16_t* y, std::size_t n,
                                                uint16_t c, const ModCtx& m) {
    const __m256i vp = _mm256_set1_epi16(static_cast<short>(m.p));
    const __m256i vmag = _mm256_set1_epi16(static_cast<short>(m.magic));
    const __m256i vc = _mm256_set1_epi16(static_cast<short>(c));
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i prod = _mm256_mullo_epi16(vc, vy);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i),
                            reduce_avx2(prod, vp, vmag));
    }
    for (; i < n; ++i)
        y[i] = reduce(static_cast<uint32_t>(c) * y[i], m);
}

__attribute__((target("avx2"))) bool is_zero_avx2(const uint16_t* y, std::size_t n) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 16 <= n; i += 16)
        acc = _mm256_or_si256(acc,
                              _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i)));
    if (!_mm256_testz_si256(acc, acc)) return false;
    for (; i < n; ++i)
        if (y[i] != 0) return false;
    return true;
}

#endif  // SL_X86

const RowKernels kScalar{"scalar", axpy_scalar, scale_scalar, is_zero_scalar};

#if SL_X86
const RowKernels kAvx2{"avx2", axpy_avx2, scale_avx2, is_zero_avx2};
#endif

const RowKernels& pick_active() {
    const char* env = std::getenv("SPRINGER_LAB_KERNEL");
    if (env != nullptr) {
        std::string want(env);
        if (want == "scalar") return kScalar;
#if SL_X86
        if (want == "avx2" && __builtin_cpu_supports("avx2")) return kAvx2;
#endif
        return kScalar;
    }
#if SL_X86
    if (__builtin_cpu_supports("avx2")) return kAvx2;
#endif
    return kScalar;
}

}  // namespace

const RowKernels& scalar_kernels() { return kScalar; }

const RowKernels* avx2_kernels() {
#if SL_X86
    if (__builtin_cpu_supports("avx2")) return &kAvx2;
#endif
    return nullptr;
}

const RowKernels& active_kernels() {
    static const RowKernels& k = pick_active();
    return k;
}

std::string active_kernel_name() { return active_kernels().name; }

}  // namespace sl::kern
