/*
   Copyright 2026 the dlv authors

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

#ifndef DLV_KERNELS_HPP
#define DLV_KERNELS_HPP

#include <cstddef>
#include <cstdint>

// Vector kernels for arithmetic mod a small prime ell (2 <= ell <= 61).
// Values are stored one element per uint16_t lane, always in [0, ell).
// These are the inner loops of all dense linear algebra over prime fields;
// a scalar reference implementation is always available and the dispatcher
// selects an AVX2 or NEON variant at runtime when the CPU supports it.
// Extension fields (e > 1) do not use these kernels.

namespace dlv::kern {

inline constexpr uint32_t kMaxPrime = 61;

enum class Backend { Scalar, Avx2, Neon };

// Currently active backend (chosen on first use).
Backend active_backend();
const char* backend_name(Backend b);

// Force a specific backend; returns false if unsupported on this CPU.
// Intended for equivalence tests and benchmarks.
bool force_backend(Backend b);
void reset_backend();

// dst[i] = (a[i] + b[i]) mod ell
void vec_add(uint16_t* dst, const uint16_t* a, const uint16_t* b, size_t n, uint32_t ell);
// dst[i] = (a[i] - b[i]) mod ell
void vec_sub(uint16_t* dst, const uint16_t* a, const uint16_t* b, size_t n, uint32_t ell);
// dst[i] = (c * a[i]) mod ell
void vec_scale(uint16_t* dst, const uint16_t* a, uint32_t c, size_t n, uint32_t ell);
// y[i] = (y[i] + c * x[i]) mod ell
void vec_axpy(uint16_t* y, const uint16_t* x, uint32_t c, size_t n, uint32_t ell);

// Scalar reference implementations (used as the oracle in equivalence tests).
namespace scalar {
void vec_add(uint16_t* dst, const uint16_t* a, const uint16_t* b, size_t n, uint32_t ell);
void vec_sub(uint16_t* dst, const uint16_t* a, const uint16_t* b, size_t n, uint32_t ell);
void vec_scale(uint16_t* dst, const uint16_t* a, uint32_t c, size_t n, uint32_t ell);
void vec_axpy(uint16_t* y, const uint16_t* x, uint32_t c, size_t n, uint32_t ell);
}  // namespace scalar

}  // namespace dlv::kern

#endif
