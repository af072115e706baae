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

#include "dlv/kernels.hpp"

#include <atomic>

namespace dlv::kern {

namespace scalar {

void vec_add(uint16_t* dst, const uint16_t* a, const uint16_t* b, size_t n, uint32_t ell) {
    for (size_t i = 0; i < n; ++i) {
        uint32_t s = uint32_t(a[i]) + uint32_t(b[i]);
        if (s >= ell) s -= ell;
        dst[i] = uint16_t(s);
    }
}

void vec_sub(uint16_t* dst, const uint16_t* a, const uint16_t* b, size_t n, uint32_t ell) {
    for (size_t i = 0; i < n; ++i) {
        uint32_t s = uint32_t(a[i]) + ell - uint32_t(b[i]);
        if (s >= ell) s -= ell;
        dst[i] = uint16_t(s);
    }
}

void vec_scale(uint16_t* dst, const uint16_t* a, uint32_t c, size_t n, uint32_t ell) {
    for (size_t i = 0; i < n; ++i) dst[i] = uint16_t((uint32_t(a[i]) * c) % ell);
}

void vec_axpy(uint16_t* y, const uint16_t* x, uint32_t c, size_t n, uint32_t ell) {
    for (size_t i = 0; i < n; ++i)
        y[i] = uint16_t((uint32_t(y[i]) + uint32_t(x[i]) * c) % ell);
}

}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define DLV_HAVE_AVX2_TU 1
namespace avx2 {
void vec_add(uint16_t*, const uint16_t*, const uint16_t*, size_t, uint32_t);
void vec_sub(uint16_t*, const uint16_t*, const uint16_t*, size_t, uint32_t);
void vec_scale(uint16_t*, const uint16_t*, uint32_t, size_t, uint32_t);
void vec_axpy(uint16_t*, const uint16_t*, uint32_t, size_t, uint32_t);
}
#endif

#if defined(__ARM_NEON)
#define DLV_HAVE_NEON_TU 1
namespace neon {
void vec_add(uint16_t*, const uint16_t*, const uint16_t*, size_t, uint32_t);
void vec_sub(uint16_t*, const uint16_t*, const uint16_t*, size_t, uint32_t);
void vec_scale(uint16_t*, const uint16_t*, uint32_t, size_t, uint32_t);
void vec_axpy(uint16_t*, const uint16_t*, uint32_t, size_t, uint32_t);
}
#endif

namespace {

std::atomic<Backend> g_backend{Backend::Scalar};
std::atomic<bool> g_chosen{false};

bool cpu_has_avx2() {
#if defined(DLV_HAVE_AVX2_TU) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

bool cpu_has_neon() {
#if defined(DLV_HAVE_NEON_TU)
    return true;
#else
    return false;
#endif
}

Backend choose() {
    if (!g_chosen.load(std::memory_order_acquire)) {
        Backend b = Backend::Scalar;
        if (cpu_has_avx2())
            b = Backend::Avx2;
        else if (cpu_has_neon())
            b = Backend::Neon;
        g_backend.store(b, std::memory_order_release);
        g_chosen.store(true, std::memory_order_release);
    }
    return g_backend.load(std::memory_order_acquire);
}

}  // namespace

Backend active_backend() { return choose(); }

const char* backend_name(Backend b) {
    switch (b) {
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
        default: return "scalar";
    }
}

bool force_backend(Backend b) {
    if (b == Backend::Avx2 && !cpu_has_avx2()) return false;
    if (b == Backend::Neon && !cpu_has_neon()) return false;
    g_backend.store(b, std::memory_order_release);
    g_chosen.store(true, std::memory_order_release);
    return true;
}

void reset_backend() { g_chosen.store(false, std::memory_order_release); }

void vec_add(uint16_t* dst, const uint16_t* a, const uint16_t* b, size_t n, uint32_t ell) {
    switch (choose()) {
#ifdef DLV_HAVE_AVX2_TU
        case Backend::Avx2: avx2::vec_add(dst, a, b, n, ell); return;
#endif
#ifdef DLV_HAVE_NEON_TU
        case Backend::Neon: neon::vec_add(dst, a, b, n, ell); return;
#endif
        default: scalar::vec_add(dst, a, b, n, ell); return;
    }
}

void vec_sub(uint16_t* dst, const uint16_t* a, const uint16_t* b, size_t n, uint32_t ell) {
    switch (choose()) {
#ifdef DLV_HAVE_AVX2_TU
        case Backend::Avx2: avx2::vec_sub(dst, a, b, n, ell); return;
#endif
#ifdef DLV_HAVE_NEON_TU
        case Backend::Neon: neon::vec_sub(dst, a, b, n, ell); return;
#endif
        default: scalar::vec_sub(dst, a, b, n, ell); return;
    }
}

void vec_scale(uint16_t* dst, const uint16_t* a, uint32_t c, size_t n, uint32_t ell) {
    switch (choose()) {
#ifdef DLV_HAVE_AVX2_TU
        case Backend::Avx2: avx2::vec_scale(dst, a, c, n, ell); return;
#endif
#ifdef DLV_HAVE_NEON_TU
        case Backend::Neon: neon::vec_scale(dst, a, c, n, ell); return;
#endif
        default: scalar::vec_scale(dst, a, c, n, ell); return;
    }
}

void vec_axpy(uint16_t* y, const uint16_t* x, uint32_t c, size_t n, uint32_t ell) {
    switch (choose()) {
#ifdef DLV_HAVE_AVX2_TU
        case Backend::Avx2: avx2::vec_axpy(y, x, c, n, ell); return;
#endif
#ifdef DLV_HAVE_NEON_TU
        case Backend::Neon: neon::vec_axpy(y, x, c, n, ell); return;
#endif
        default: scalar::vec_axpy(y, x, c, n, ell); return;
    }
}

}  // namespace dlv::kern
