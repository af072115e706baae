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

// NEON variants of the mod-ell vector kernels (aarch64).

#if defined(__ARM_NEON)

#include <arm_neon.h>

#include <cstddef>
#include <cstdint>

namespace dlv::kern::neon {

namespace {

inline uint16x8_t reduce_once(uint16x8_t t, uint16x8_t vell) {
    uint16x8_t ge = vcgeq_u16(t, vell);
    return vsubq_u16(t, vandq_u16(ge, vell));
}

inline uint16x8_t barrett(uint16x8_t t, uint16x8_t vmagic, uint16x8_t vell) {
    // q = (t * magic) >> 16, magic = floor(2^16/ell); under-estimates by <= 1.
    uint32x4_t lo = vmull_u16(vget_low_u16(t), vget_low_u16(vmagic));
    uint32x4_t hi = vmull_u16(vget_high_u16(t), vget_high_u16(vmagic));
    uint16x8_t q = vcombine_u16(vshrn_n_u32(lo, 16), vshrn_n_u32(hi, 16));
    uint16x8_t r = vsubq_u16(t, vmulq_u16(q, vell));
    return reduce_once(r, vell);
}

}  // namespace

void vec_add(uint16_t* dst, const uint16_t* a, const uint16_t* b, size_t n, uint32_t ell) {
    const uint16x8_t vell = vdupq_n_u16(uint16_t(ell));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        uint16x8_t t = vaddq_u16(vld1q_u16(a + i), vld1q_u16(b + i));
        vst1q_u16(dst + i, reduce_once(t, vell));
    }
    for (; i < n; ++i) {
        uint32_t s = uint32_t(a[i]) + uint32_t(b[i]);
        if (s >= ell) s -= ell;
        dst[i] = uint16_t(s);
    }
}

void vec_sub(uint16_t* dst, const uint16_t* a, const uint16_t* b, size_t n, uint32_t ell) {
    const uint16x8_t vell = vdupq_n_u16(uint16_t(ell));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        uint16x8_t t = vsubq_u16(vaddq_u16(vld1q_u16(a + i), vell), vld1q_u16(b + i));
        vst1q_u16(dst + i, reduce_once(t, vell));
    }
    for (; i < n; ++i) {
        uint32_t s = uint32_t(a[i]) + ell - uint32_t(b[i]);
        if (s >= ell) s -= ell;
        dst[i] = uint16_t(s);
    }
}

void vec_scale(uint16_t* dst, const uint16_t* a, uint32_t c, size_t n, uint32_t ell) {
    const uint16x8_t vell = vdupq_n_u16(uint16_t(ell));
    const uint16x8_t vmagic = vdupq_n_u16(uint16_t(0x10000u / ell));
    const uint16x8_t vc = vdupq_n_u16(uint16_t(c % ell));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        uint16x8_t t = vmulq_u16(vld1q_u16(a + i), vc);
        vst1q_u16(dst + i, barrett(t, vmagic, vell));
    }
    for (; i < n; ++i) dst[i] = uint16_t((uint32_t(a[i]) * (c % ell)) % ell);
}

void vec_axpy(uint16_t* y, const uint16_t* x, uint32_t c, size_t n, uint32_t ell) {
    const uint16x8_t vell = vdupq_n_u16(uint16_t(ell));
    const uint16x8_t vmagic = vdupq_n_u16(uint16_t(0x10000u / ell));
    const uint16x8_t vc = vdupq_n_u16(uint16_t(c % ell));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        uint16x8_t t = vaddq_u16(vld1q_u16(y + i), vmulq_u16(vld1q_u16(x + i), vc));
        vst1q_u16(y + i, barrett(t, vmagic, vell));
    }
    for (; i < n; ++i)
        y[i] = uint16_t((uint32_t(y[i]) + uint32_t(x[i]) * (c % ell)) % ell);
}

}  // namespace dlv::kern::neon

#endif  // __ARM_NEON
