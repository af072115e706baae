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

#include "dlv/ratfun.hpp"

namespace dlv {

RatField::Elem RatField::reduce(Elem a) const {
    if (a.den.is_zero()) throw InvertZero();
    if (a.num.is_zero()) return {};
    FqPoly g = P_.gcd(a.num, a.den);
    if (g.degree() > 0) {
        a.num = P_.div_exact(a.num, g);
        a.den = P_.div_exact(a.den, g);
    }
    if (!a.den.is_monic()) {
        FqField::Elem s = F_->inv(a.den.lead());
        a.num = P_.mul_scalar(a.num, s);
        a.den = P_.mul_scalar(a.den, s);
    }
    return a;
}

RatField::Elem RatField::add(const Elem& a, const Elem& b) const {
    return reduce({P_.add(P_.mul(a.num, b.den), P_.mul(b.num, a.den)), P_.mul(a.den, b.den)});
}

RatField::Elem RatField::mul(const Elem& a, const Elem& b) const {
    return reduce({P_.mul(a.num, b.num), P_.mul(a.den, b.den)});
}

RatField::Elem RatField::inv(const Elem& a) const {
    if (a.num.is_zero()) throw InvertZero();
    return reduce({a.den, a.num});
}

RatField::Elem RatField::pow_q(const Elem& a) const {
    auto lift = [&](const FqPoly& p) {
        if (p.is_zero()) return FqPoly();
        std::vector<uint16_t> c(size_t(p.degree()) * F_->q() + 1, 0);
        for (size_t k = 0; k <= size_t(p.degree()); ++k)
            c[k * F_->q()] = F_->pow(p.coeff(k), F_->q());
        return FqPoly(std::move(c));
    };
    return reduce({lift(a.num), lift(a.den)});
}

Laurent<FqField> RatField::to_laurent(const Elem& a, int target_floor) const {
    LaurentOps<FqField> L(*F_);
    if (is_zero(a)) return L.zero();
    int dn = a.num.degree(), dd = a.den.degree();
    int top = dn - dd;
    if (top < target_floor) {
        Laurent<FqField> z;
        z.exact = false;
        z.floor = target_floor;
        return z;
    }
    // power series division in s = 1/t of the degree-reversed polynomials
    size_t terms = size_t(top - target_floor + 1);
    std::vector<FqField::Elem> N(terms, 0), D(terms, 0), Q(terms, 0);
    for (size_t k = 0; k < terms; ++k) {
        if (int(k) <= dn) N[k] = a.num.coeff(size_t(dn - int(k)));
        if (int(k) <= dd) D[k] = a.den.coeff(size_t(dd - int(k)));
    }
    FqField::Elem inv0 = F_->inv(D[0]);
    for (size_t k = 0; k < terms; ++k) {
        FqField::Elem s = N[k];
        for (size_t j = 1; j <= k; ++j) s = F_->sub(s, F_->mul(D[j], Q[k - j]));
        Q[k] = F_->mul(s, inv0);
    }
    // Q[k] is the coefficient of t^{top-k}
    std::vector<FqField::Elem> coeffs(terms);
    for (size_t k = 0; k < terms; ++k) coeffs[terms - 1 - k] = Q[k];
    auto out = L.from_coeffs(target_floor, std::move(coeffs), false);
    // exact when the division terminates (denominator is a monomial times unit)
    return out;
}

}  // namespace dlv
