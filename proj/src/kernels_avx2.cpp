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

// AVX2 variants of the mod-ell vector kernels. This translation unit is the
// only one compiled with -mavx2; it is reached through runtime dispatch.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstddef>
#include <cstdint>

namespace dlv::kern::avx2 {

namespace {

// Lane values stay in [0, 2*ell) before reduction; ell <= 61 keeps every
// intermediate below 2^15, so signed 16-bit compares are safe.
inline __m256i reduce_once(__m256i t, __m256i vell, __m256i vellm1) {
    __m256i ge = _mm256_cmpgt_epi16(t, vellm1);
    return _mm256_sub_epi16(t, _mm256_and_si256(ge, vell));
}

// Barrett reduction of t in [0, 3700]: q = (t * magic) >> 16 with
// magic = floor(2^16 / ell) under-estimates t/ell by at most one.
inline __m256i barrett(__m256i t, __m256i vmagic, __m256i vell, __m256i vellm1) {
    __m256i q = _mm256_mulhi_epu16(t, vmagic);
    __m256i r = _mm256_sub_epi16(t, _mm256_mullo_epi16(q, vell));
    return reduce_once(r, vell, vellm1);
}

}  // namespace

void vec_add(uint16_t* dst, const uint16_t* a, const uint16_t* b, size_t n, uint32_t ell) {
    const __m256i vell = _mm256_set1_epi16(int16_t(ell));
    const __m256i vellm1 = _mm256_set1_epi16(int16_t(ell - 1));
    size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i t = reduce_once(_mm256_add_epi16(va, vb), vell, vellm1);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
    }
    for (; i < n; ++i) {
        uint32_t s = uint32_t(a[i]) + uint32_t(b[i]);
        if (s >= ell) s -= ell;
        dst[i] = uint16_t(s);
    }
}

void vec_sub(uint16_t* dst, const uint16_t* a, const uint16_t* b, size_t n, uint32_t ell) {
    const __m256i vell = _mm256_set1_epi16(int16_t(ell));
    const __m256i vellm1 = _mm256_set1_epi16(int16_t(ell - 1));
    size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i t = _mm256_sub_epi16(_mm256_add_epi16(va, vell), vb);
        t = reduce_once(t, vell, vellm1);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
    }
    for (; i < n; ++i) {
        uint32_t s = uint32_t(a[i]) + ell - uint32_t(b[i]);
        if (s >= ell) s -= ell;
        dst[i] = uint16_t(s);
    }
}

void vec_scale(uint16_t* dst, const uint16_t* a, uint32_t c, size_t n, uint32_t ell) {
    const uint32_t magic = 0x10000u / ell;
    const __m256i vell = _mm256_set1_epi16(int16_t(ell));
    const __m256i vellm1 = _mm256_set1_epi16(int16_t(ell - 1));
    const __m256i vmagic = _mm256_set1_epi16(int16_t(magic));
    const __m256i vc = _mm256_set1_epi16(int16_t(c % ell));
    size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i t = _mm256_mullo_epi16(va, vc);
        t = barrett(t, vmagic, vell, vellm1);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
    }
    for (; i < n; ++i) dst[i] = uint16_t((uint32_t(a[i]) * (c % ell)) % ell);
}

void vec_axpy(uint16_t* y, const uint16_t* x, uint32_t c, size_t n, uint32_t ell) {
    const uint32_t magic = 0x10000u / ell;
    const __m256i vell = _mm256_set1_epi16(int16_t(ell));
    const __m256i vellm1 = _mm256_set1_epi16(int16_t(ell - 1));
    const __m256i vmagic = _mm256_set1_epi16(int16_t(magic));
    const __m256i vc = _mm256_set1_epi16(int16_t(c % ell));
    size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m256i vx = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
        __m256i vy = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i));
        __m256i t = _mm256_add_epi16(vy, _mm256_mullo_epi16(vx, vc));
        t = barrett(t, vmagic, vell, vellm1);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y + i), t);
    }
    for (; i < n; ++i)
        y[i] = uint16_t((uint32_t(y[i]) + uint32_t(x[i]) * (c % ell)) % ell);
}

}  // namespace dlv::kern::avx2

#endif  // x86_64
