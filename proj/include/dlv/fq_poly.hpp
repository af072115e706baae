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

#ifndef DLV_FQ_POLY_HPP
#define DLV_FQ_POLY_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dlv/fq.hpp"

namespace dlv {

// Dense polynomial over F_q, coefficients low degree first, no high zero
// coefficients (canonical form). The zero polynomial has empty storage and
// the sentinel degree kZeroDeg; no arithmetic is ever done on the sentinel.
class FqPoly {
   public:
    static constexpr int kZeroDeg = INT32_MIN;

    FqPoly() = default;
    explicit FqPoly(std::vector<uint16_t> coeffs) : c_(std::move(coeffs)) { trim(); }

    static FqPoly zero() { return FqPoly(); }
    static FqPoly constant(FqField::Elem a) {
        return a == 0 ? FqPoly() : FqPoly(std::vector<uint16_t>{a});
    }
    static FqPoly t_power(size_t k, FqField::Elem lead = 1);  // lead * t^k

    bool is_zero() const { return c_.empty(); }
    int degree() const { return c_.empty() ? kZeroDeg : int(c_.size()) - 1; }
    FqField::Elem coeff(size_t k) const { return k < c_.size() ? c_[k] : 0; }
    FqField::Elem lead() const { return c_.empty() ? 0 : c_.back(); }
    const std::vector<uint16_t>& coeffs() const { return c_; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

    bool operator==(const FqPoly& o) const { return c_ == o.c_; }
    bool operator!=(const FqPoly& o) const { return c_ != o.c_; }
    // Total order: by degree, then coefficient handles from degree 0 up.
    static bool less(const FqPoly& a, const FqPoly& b);

    std::string to_string(const FqField& F, const std::string& var = "t") const;

   private:
    std::vector<uint16_t> c_;
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    friend class PolyRing;
};

// Ring operations on FqPoly over a fixed field; models the Ring concept.
// This is the coefficient ring A = F_q[t] of the whole library.
class PolyRing {
   public:
    using Elem = FqPoly;

    explicit PolyRing(const FqField& F) : F_(&F) {}
    const FqField& field() const { return *F_; }

    Elem zero() const { return FqPoly(); }
    Elem one() const { return FqPoly::constant(1); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_scalar(const Elem& a, FqField::Elem c) const;
    Elem pow(Elem base, uint64_t n) const;

    // Division with remainder by a nonzero divisor.
    void divrem(const Elem& a, const Elem& b, Elem& q, Elem& r) const;
    Elem mod(const Elem& a, const Elem& b) const;
    Elem div_exact(const Elem& a, const Elem& b) const;  // asserts remainder 0

    Elem monic(const Elem& a) const;  // scale to leading coefficient 1
    Elem gcd(Elem a, Elem b) const;   // monic gcd
    // g = gcd(a,b) monic, with u*a + v*b = g.
    Elem xgcd(const Elem& a, const Elem& b, Elem& u, Elem& v) const;
    Elem lcm(const Elem& a, const Elem& b) const;

    FqField::Elem eval(const Elem& a, FqField::Elem x) const;
    Elem derivative(const Elem& a) const;
    // coefficientwise ell-power (the Frobenius on coefficients)
    Elem coeff_frob(const Elem& a) const;

    Elem pow_mod(Elem base, uint64_t n, const Elem& m) const;

    bool is_irreducible(const Elem& f) const;

    std::string to_string(const Elem& a) const { return a.to_string(*F_); }

   private:
    const FqField* F_;
};

// All monic irreducibles of degree <= d, sorted by (degree, coefficient
// sequence from degree 0 upward).
std::vector<FqPoly> enumerate_monic_irreducibles(const FqField& F, int d);

// Count of monic irreducibles of exact degree m: (1/m) sum_{d|m} mu(d) q^{m/d}.
uint64_t count_monic_irreducibles(uint32_t q, uint32_t m);

// All monic polynomials of exact degree d (lex order of coefficient sequence).
std::vector<FqPoly> enumerate_monic(const FqField& F, int d);

// Factorization into monic irreducibles (with multiplicity), deterministic
// given the seed. Pairs (factor, exponent).
std::vector<std::pair<FqPoly, int>> factor_poly(const FqField& F, const FqPoly& f,
                                                uint64_t seed = 1);

}  // namespace dlv

#endif
