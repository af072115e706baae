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

#ifndef DLV_RATFUN_HPP
#define DLV_RATFUN_HPP

#include "dlv/fq_poly.hpp"
#include "dlv/laurent.hpp"

namespace dlv {

// Reduced rational function num/den over F_q: gcd(num, den) = 1, den monic.
struct RatFun {
    FqPoly num;
    FqPoly den = FqPoly::constant(1);
    bool operator==(const RatFun&) const = default;
};

class RatField {
   public:
    using Elem = RatFun;

    explicit RatField(const FqField& F) : F_(&F), P_(F) {}
    const FqField& field() const { return *F_; }
    const PolyRing& poly_ring() const { return P_; }

    Elem zero() const { return {}; }
    Elem one() const { return {FqPoly::constant(1), FqPoly::constant(1)}; }
    Elem from_poly(const FqPoly& p) const { return {p, FqPoly::constant(1)}; }
    Elem make(const FqPoly& num, const FqPoly& den) const { return reduce({num, den}); }

    bool is_zero(const Elem& a) const { return a.num.is_zero(); }
    bool equal(const Elem& a, const Elem& b) const { return a.num == b.num && a.den == b.den; }

    Elem reduce(Elem a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem neg(const Elem& a) const { return {P_.neg(a.num), a.den}; }
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
    // x -> x^q (coefficientwise q-power with exponent scaling by q)
    Elem pow_q(const Elem& a) const;

    // t-adic-at-infinity data: deg num - deg den (exponent of the lead term).
    int top_exponent(const Elem& a) const {
        if (is_zero(a)) throw InvertZero();
        return a.num.degree() - a.den.degree();
    }

    // Laurent expansion at infinity down to target_floor (exactness flag off:
    // the tail below the floor is nonzero in general).
    Laurent<FqField> to_laurent(const Elem& a, int target_floor) const;

    std::string to_string(const Elem& a) const {
        if (a.den.is_one()) return a.num.to_string(*F_);
        return "(" + a.num.to_string(*F_) + ")/(" + a.den.to_string(*F_) + ")";
    }

   private:
    const FqField* F_;
    PolyRing P_;
};

}  // namespace dlv

#endif
