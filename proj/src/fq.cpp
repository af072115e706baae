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

#include "dlv/fq.hpp"

#include <algorithm>
#include <numeric>

namespace dlv {

namespace {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Minimal polynomial arithmetic over F_ell on digit vectors (low first),
// used only during field construction.
using Digits = std::vector<uint16_t>;

void trim(Digits& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Digits mulmod(const Digits& a, const Digits& b, const Digits& mod, uint32_t ell) {
    if (a.empty() || b.empty()) return {};
    Digits r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = uint16_t((r[i + j] + uint32_t(a[i]) * b[j]) % ell);
    // reduce mod the monic modulus
    size_t m = mod.size() - 1;
    for (size_t d = r.size(); d-- > m;) {
        uint32_t c = r[d];
        if (c == 0) continue;
        r[d] = 0;
        for (size_t k = 0; k < m; ++k)
            r[d - m + k] = uint16_t((r[d - m + k] + (ell - mod[k] % ell) * c) % ell);
    }
    r.resize(m);
    trim(r);
    return r;
}

Digits powmod(Digits base, uint64_t n, const Digits& mod, uint32_t ell) {
    Digits r{1};
    while (n) {
        if (n & 1) r = mulmod(r, base, mod, ell);
        base = mulmod(base, base, mod, ell);
        n >>= 1;
    }
    return r;
}

Digits poly_gcd(Digits a, Digits b, uint32_t ell) {
    auto inv_mod_ell = [&](uint32_t v) {
        uint32_t r = 1;
        for (uint32_t k = 0; k < ell - 2; ++k) r = (r * v) % ell;
        return r;
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        uint32_t lead_inv = inv_mod_ell(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            uint32_t c = (uint32_t(a.back()) * lead_inv) % ell;
            size_t shift = a.size() - b.size();
            for (size_t k = 0; k < b.size(); ++k)
                a[shift + k] = uint16_t((a[shift + k] + (ell - (c * b[k]) % ell)) % ell);
            trim(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool irreducible_over_prime(const Digits& f, uint32_t ell) {
    size_t e = f.size() - 1;
    if (e == 0) return false;
    if (e == 1) return true;
    // x^{ell^e} == x mod f, and gcd(x^{ell^{e/p}} - x, f) = 1 for primes p | e
    Digits x{0, 1};
    uint64_t lpow = 1;
    for (size_t k = 0; k < e; ++k) lpow *= ell;
    Digits xe = powmod(x, lpow, f, ell);
    Digits diff = xe;
    // diff -= x
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = uint16_t((diff[1] + ell - 1) % ell);
    trim(diff);
    if (!diff.empty()) return false;
    for (uint32_t p = 2; p <= e; ++p) {
        if (e % p != 0 || !is_prime_u32(p)) continue;
        uint64_t sub = 1;
        for (size_t k = 0; k < e / p; ++k) sub *= ell;
        Digits xs = powmod(x, sub, f, ell);
        Digits d2 = xs;
        if (d2.size() < 2) d2.resize(2, 0);
        d2[1] = uint16_t((d2[1] + ell - 1) % ell);
        trim(d2);
        Digits g = poly_gcd(d2, f, ell);
        if (g.size() != 1) return false;
    }
    return true;
}

}  // namespace

FqField::FqField(uint32_t ell, uint32_t e, std::vector<uint16_t> modulus)
    : ell_(ell), e_(e), modulus_(std::move(modulus)) {
    if (!is_prime_u32(ell_)) throw ConfigError("field characteristic is not prime");
    if (e_ < 1) throw ConfigError("field extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t k = 0; k < e_; ++k) {
        q *= ell_;
        if (q > 0x10000) throw ConfigError("q exceeds 2^16");
    }
    q_ = uint32_t(q);
    if (modulus_.size() != e_ + 1) throw ConfigError("modulus degree does not equal e");
    for (auto& c : modulus_) c = uint16_t(c % ell_);
    if (modulus_.back() != 1) throw ConfigError("modulus is not monic");
    if (e_ >= 1 && !irreducible_over_prime(modulus_, ell_))
        throw ConfigError("modulus is not irreducible over F_ell");
    build();
}

FqField FqField::prime(uint32_t ell) { return FqField(ell, 1, {0, 1}); }

FqField FqField::make(uint32_t ell, uint32_t e) {
    if (e == 1) return prime(ell);
    // first monic irreducible of degree e in lexicographic coefficient order
    uint64_t count = 1;
    for (uint32_t k = 0; k < e; ++k) count *= ell;
    for (uint64_t idx = 0; idx < count; ++idx) {
        Digits f(e + 1, 0);
        uint64_t v = idx;
        for (uint32_t k = 0; k < e; ++k) {
            f[k] = uint16_t(v % ell);
            v /= ell;
        }
        f[e] = 1;
        if (irreducible_over_prime(f, ell)) return FqField(ell, e, f);
    }
    throw ConfigError("no irreducible modulus found");
}

FqField::Elem FqField::add(Elem a, Elem b) const {
    if (e_ == 1) {
        uint32_t s = uint32_t(a) + b;
        if (s >= ell_) s -= ell_;
        return Elem(s);
    }
    uint32_t r = 0, mul = 1;
    uint32_t x = a, y = b;
    for (uint32_t k = 0; k < e_; ++k) {
        uint32_t s = x % ell_ + y % ell_;
        if (s >= ell_) s -= ell_;
        r += s * mul;
        mul *= ell_;
        x /= ell_;
        y /= ell_;
    }
    return Elem(r);
}

FqField::Elem FqField::neg(Elem a) const {
    if (e_ == 1) return a == 0 ? 0 : Elem(ell_ - a);
    uint32_t r = 0, mul = 1, x = a;
    for (uint32_t k = 0; k < e_; ++k) {
        uint32_t d = x % ell_;
        r += (d == 0 ? 0 : ell_ - d) * mul;
        mul *= ell_;
        x /= ell_;
    }
    return Elem(r);
}

FqField::Elem FqField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FqField::Elem FqField::mul(Elem a, Elem b) const {
    if (e_ == 1) return Elem((uint32_t(a) * b) % ell_);
    if (!mul_table_.empty()) return mul_table_[uint32_t(a) * q_ + b];
    if (a == 0 || b == 0) return 0;
    uint64_t k = uint64_t(log_[a]) + log_[b];
    if (k >= q_ - 1) k -= q_ - 1;
    return exp_[k];
}

FqField::Elem FqField::mul_slow(Elem a, Elem b) const {
    Digits da = coords(a), db = coords(b);
    trim(da);
    trim(db);
    Digits r = mulmod(da, db, modulus_, ell_);
    r.resize(e_, 0);
    return from_coords(r);
}

FqField::Elem FqField::inv(Elem a) const {
    if (a == 0) throw InvertZero();
    if (e_ == 1) {
        // Fermat
        Elem r = 1, base = a;
        uint32_t n = ell_ - 2;
        while (n) {
            if (n & 1) r = mul(r, base);
            base = mul(base, base);
            n >>= 1;
        }
        return r;
    }
    if (!inv_table_.empty()) return inv_table_[a];
    uint32_t k = log_[a];
    return k == 0 ? Elem(1) : exp_[q_ - 1 - k];
}

FqField::Elem FqField::pow(Elem a, uint64_t n) const {
    Elem r = 1, base = a;
    while (n) {
        if (n & 1) r = mul(r, base);
        base = mul(base, base);
        n >>= 1;
    }
    return r;
}

FqField::Elem FqField::from_int(int64_t v) const {
    int64_t m = v % int64_t(ell_);
    if (m < 0) m += ell_;
    return Elem(m);
}

FqField::Elem FqField::from_coords(const std::vector<uint16_t>& c) const {
    uint32_t r = 0, mul = 1;
    for (uint32_t k = 0; k < e_; ++k) {
        uint32_t d = k < c.size() ? c[k] % ell_ : 0;
        r += d * mul;
        mul *= ell_;
    }
    return Elem(r);
}

std::vector<uint16_t> FqField::coords(Elem a) const {
    std::vector<uint16_t> c(e_);
    uint32_t x = a;
    for (uint32_t k = 0; k < e_; ++k) {
        c[k] = uint16_t(x % ell_);
        x /= ell_;
    }
    return c;
}

std::string FqField::to_string(Elem a) const {
    if (e_ == 1) return std::to_string(a);
    std::string s = "[";
    auto c = coords(a);
    for (uint32_t k = 0; k < e_; ++k) {
        if (k) s += ",";
        s += std::to_string(c[k]);
    }
    return s + "]";
}

void FqField::build() {
    if (e_ == 1) {
        // find a generator of (Z/ell)^*
        for (uint32_t g = 1; g < ell_; ++g) {
            uint32_t x = g;
            uint32_t ord = 1;
            while (x != 1) {
                x = (x * g) % ell_;
                ++ord;
            }
            if (ord == ell_ - 1) {
                gen_ = Elem(g);
                break;
            }
        }
        if (ell_ == 2) gen_ = 1;
        return;
    }
    if (q_ <= kTableLimit) {
        mul_table_.assign(size_t(q_) * q_, 0);
        for (uint32_t a = 0; a < q_; ++a)
            for (uint32_t b = a; b < q_; ++b) {
                Elem p = mul_slow(Elem(a), Elem(b));
                mul_table_[size_t(a) * q_ + b] = p;
                mul_table_[size_t(b) * q_ + a] = p;
            }
        inv_table_.assign(q_, 0);
        for (uint32_t a = 1; a < q_; ++a)
            for (uint32_t b = 1; b < q_; ++b)
                if (mul_table_[size_t(a) * q_ + b] == 1) {
                    inv_table_[a] = Elem(b);
                    break;
                }
    } else {
        log_.assign(q_, 0);
        exp_.assign(q_ - 1, 0);
    }
    // find a multiplicative generator and verify its order is exactly q-1
    std::vector<uint32_t> prime_factors;
    uint32_t m = q_ - 1;
    for (uint32_t d = 2; d * d <= m; ++d)
        while (m % d == 0) {
            if (prime_factors.empty() || prime_factors.back() != d) prime_factors.push_back(d);
            m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    auto pow_gen = [&](Elem a, uint64_t n) {
        if (!mul_table_.empty()) return pow(a, n);
        // tables not built yet in the Zech branch: use slow multiplication
        Elem r = 1, base = a;
        while (n) {
            if (n & 1) r = mul_slow(r, base);
            base = mul_slow(base, base);
            n >>= 1;
        }
        return r;
    };
    for (uint32_t g = 2; g < q_; ++g) {
        bool ok = true;
        for (uint32_t p : prime_factors)
            if (pow_gen(Elem(g), (q_ - 1) / p) == 1) {
                ok = false;
                break;
            }
        if (ok && pow_gen(Elem(g), q_ - 1) == 1) {
            gen_ = Elem(g);
            break;
        }
    }
    if (gen_ == 0) throw ConfigError("no multiplicative generator found (field invariant violated)");
    if (!log_.empty()) {
        Elem x = 1;
        for (uint32_t k = 0; k + 1 < q_; ++k) {
            exp_[k] = x;
            log_[x] = k;
            x = mul_slow(x, gen_);
        }
        if (x != 1) throw ConfigError("generator order is not q-1 (field invariant violated)");
    }
}

}  // namespace dlv
