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

#ifndef SPRINGERLAB_KERNELS_HPP
#define SPRINGERLAB_KERNELS_HPP

#include <cstddef>
#include <cstdint>
#include <string>

// Row kernels for dense linear algebra over F_p, p an odd prime < 256.
//
// Matrix rows are stored as arrays of uint16_t residues in [0, p).  All
// higher-level F_q arithmetic (q = p^m) is sliced into m coordinate rows
// over F_p, so these three primitives carry the whole elimination load:
//
//   axpy :  y[i] <- (y[i] + c * x[i]) mod p
//   scale:  y[i] <- (c * y[i]) mod p
//   is_zero: all y[i] == 0 ?
//
// A scalar reference implementation is always available; an AVX2 variant
// is selected at runtime when the CPU supports it (override with the
// SPRINGER_LAB_KERNEL environment variable, values "scalar" or "avx2").
// The two implementations are equivalence-tested element for element.

namespace sl::kern {

// Barrett-style constant for reducing v < p*(p+1) modulo p with 16-bit
// multiplies: q = (v * magic) >> 16 undershoots v/p by at most 2.
struct ModCtx {
    uint16_t p = 0;
    uint16_t magic = 0;  // floor(2^16 / p)

    explicit ModCtx(uint16_t prime)
        : p(prime), magic(static_cast<uint16_t>(65536u / prime)) {}
};

struct RowKernels {
    const char* name;
    void (*axpy)(uint16_t* y, const uint16_t* x, std::size_t n, uint16_t c,
                 const ModCtx& m);
    void (*scale)(uint16_t* y, std::size_t n, uint16_t c, const ModCtx& m);
    bool (*is_zero)(const uint16_t* y, std::size_t n);
};

const RowKernels& scalar_kernels();

// Null when this build or CPU cannot run AVX2.
const RowKernels* avx2_kernels();

// Kernel set picked at startup (cpuid + environment override).
const RowKernels& active_kernels();

std::string active_kernel_name();

}  // namespace sl::kern

#endif
