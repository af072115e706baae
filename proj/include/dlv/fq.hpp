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

#ifndef DLV_FQ_HPP
#define DLV_FQ_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dlv/error.hpp"

namespace dlv {

// The finite field F_q, q = ell^e. Elements are uint16_t handles in [0, q):
// the handle's base-ell digits are the coordinates in the polynomial basis
// 1, x, ..., x^{e-1} of F_ell[x]/(modulus). Prime fields (e = 1) compute
// directly mod ell; small extension fields (q <= 256) use full multiplication
// tables; larger ones (q <= 2^16) use Zech logarithms.
class FqField {
   public:
    using Elem = uint16_t;

    // modulus: coefficients of a degree-e monic irreducible over F_ell,
    // low degree first, length e+1. Verified irreducible on construction.
    FqField(uint32_t ell, uint32_t e, std::vector<uint16_t> modulus);

    // Prime field F_ell.
    static FqField prime(uint32_t ell);
    // F_{ell^e} with the lexicographically first monic irreducible modulus.
    static FqField make(uint32_t ell, uint32_t e);

    uint32_t ell() const { return ell_; }
    uint32_t e() const { return e_; }
    uint32_t q() const { return q_; }
    const std::vector<uint16_t>& modulus() const { return modulus_; }
    bool is_prime_field() const { return e_ == 1; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    bool equal(Elem a, Elem b) const { return a == b; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, uint64_t n) const;
    // x -> x^ell (the F_ell-Frobenius); frob_q is x -> x^q (identity map).
    Elem frob(Elem a) const { return pow(a, ell_); }

    // Element from an integer (reduces mod ell and embeds F_ell).
    Elem from_int(int64_t v) const;
    // Element from polynomial-basis coordinates over F_ell (low degree first).
    Elem from_coords(const std::vector<uint16_t>& c) const;
    std::vector<uint16_t> coords(Elem a) const;

    std::string to_string(Elem a) const;

    // A fixed generator of the multiplicative group (verified of order q-1).
    Elem generator() const { return gen_; }

    bool operator==(const FqField& o) const {
        return ell_ == o.ell_ && e_ == o.e_ && modulus_ == o.modulus_;
    }

   private:
    uint32_t ell_, e_, q_;
    std::vector<uint16_t> modulus_;
    Elem gen_ = 0;

    // q <= kTableLimit: dense q*q tables.
    static constexpr uint32_t kTableLimit = 256;
    std::vector<Elem> mul_table_;
    std::vector<Elem> inv_table_;

    // kTableLimit < q <= 2^16: Zech logarithms.
    std::vector<uint32_t> log_;   // log_[a] = k with gen^k = a (a != 0)
    std::vector<Elem> exp_;       // exp_[k] = gen^k, k in [0, q-1)
    std::vector<uint32_t> zech_;  // 1 + gen^k = gen^{zech_[k]}, sentinel q-1 if = 0

    Elem mul_slow(Elem a, Elem b) const;
    void build();
};

}  // namespace dlv

#endif
