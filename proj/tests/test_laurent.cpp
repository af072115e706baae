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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dlv/laurent.hpp"
#include "dlv/ratfun.hpp"

using namespace dlv;

namespace {

FqPoly random_poly(std::mt19937_64& rng, const FqField& F, int maxdeg, bool nonzero = false) {
    for (;;) {
        int d = int(rng() % (maxdeg + 1));
        std::vector<uint16_t> c(size_t(d) + 1);
        for (auto& x : c) x = uint16_t(rng() % F.q());
        FqPoly p(std::move(c));
        if (!nonzero || !p.is_zero()) return p;
    }
}

}  // namespace

TEST_CASE("geometric series inversion, q=2: 1/(1+t^-1) to floor -3") {
    FqField F = FqField::prime(2);
    LaurentOps<FqField> L(F);
    auto u = L.add(L.one(), L.from_coeff(-1, 1));  // 1 + t^-1, exact
    auto inv = L.invert_monic_lead(u, -3);
    // 1 + t^-1 + t^-2 + t^-3 (in characteristic 2 the alternating signs vanish)
    CHECK(inv.floor == -3);
    CHECK(!inv.exact);
    for (int e = 0; e >= -3; --e) CHECK(L.coeff(inv, e) == 1);
    // u * inv == 1 on the known window
    CHECK(L.equal_on_overlap(L.mul(u, inv), L.one()));
}

TEST_CASE("t * t^-1 = 1 exactly") {
    FqField F = FqField::prime(5);
    LaurentOps<FqField> L(F);
    auto a = L.from_coeff(1, 1);
    auto b = L.from_coeff(-1, 1);
    auto p = L.mul(a, b);
    CHECK(p.exact);
    CHECK(L.coeff(p, 0) == 1);
    CHECK(p.c.size() == 1);
}

TEST_CASE("long division oracle: t/(t+1) over F_2 to floor -3") {
    FqField F = FqField::prime(2);
    RatField Q(F);
    auto r = Q.make(FqPoly({0, 1}), FqPoly({1, 1}));
    auto s = Q.to_laurent(r, -3);
    LaurentOps<FqField> L(F);
    for (int e : {0, -1, -2, -3}) CHECK(L.coeff(s, e) == 1);
    CHECK(s.floor == -3);
}

TEST_CASE("laurent arithmetic agrees with rational arithmetic on expansions") {
    std::mt19937_64 rng(2024);
    for (uint32_t q : {2u, 3u, 5u}) {
        FqField F = FqField::prime(q);
        RatField Q(F);
        LaurentOps<FqField> L(F);
        const int floor = -14;
        for (int it = 0; it < 60; ++it) {
            RatFun a = Q.make(random_poly(rng, F, 4), random_poly(rng, F, 3, true));
            RatFun b = Q.make(random_poly(rng, F, 4), random_poly(rng, F, 3, true));
            auto la = Q.to_laurent(a, floor), lb = Q.to_laurent(b, floor);
            CHECK(L.equal_on_overlap(L.add(la, lb), Q.to_laurent(Q.add(a, b), floor)));
            CHECK(L.equal_on_overlap(L.mul(la, lb), Q.to_laurent(Q.mul(a, b), floor)));
            CHECK(L.equal_on_overlap(L.sub(la, lb), Q.to_laurent(Q.sub(a, b), floor)));
        }
    }
}

TEST_CASE("precision floors are provably correct under truncation") {
    // Truncate exact expansions to random floors, operate, and check that the
    // claimed window of the result always matches the true (exact) values.
    std::mt19937_64 rng(4096);
    FqField F = FqField::prime(3);
    RatField Q(F);
    LaurentOps<FqField> L(F);
    const int deep = -40;
    for (int it = 0; it < 120; ++it) {
        RatFun a = Q.make(random_poly(rng, F, 4), random_poly(rng, F, 3, true));
        RatFun b = Q.make(random_poly(rng, F, 4), random_poly(rng, F, 3, true));
        if (Q.is_zero(a) || Q.is_zero(b)) continue;
        auto exact_a = Q.to_laurent(a, deep), exact_b = Q.to_laurent(b, deep);
        int fa = -1 - int(rng() % 8), fb = -1 - int(rng() % 8);
        auto ta = L.truncate_to_floor(exact_a, fa);
        auto tb = L.truncate_to_floor(exact_b, fb);

        auto sum = L.add(ta, tb);
        auto true_sum = Q.to_laurent(Q.add(a, b), deep);
        for (int e = sum.top(); e >= sum.floor; --e)
            CHECK(L.coeff_or_zero(sum, e) == L.coeff_or_zero(true_sum, e));

        auto prod = L.mul(ta, tb);
        auto true_prod = Q.to_laurent(Q.mul(a, b), deep);
        for (int e = prod.top(); e >= prod.floor; --e)
            CHECK(L.coeff_or_zero(prod, e) == L.coeff_or_zero(true_prod, e));
    }
}

TEST_CASE("inversion of truncated values stays within certified window") {
    std::mt19937_64 rng(77);
    FqField F = FqField::prime(2);
    RatField Q(F);
    LaurentOps<FqField> L(F);
    for (int it = 0; it < 40; ++it) {
        // monic numerator/denominator so the expansion leads with 1
        FqPoly num = random_poly(rng, F, 3), den = random_poly(rng, F, 3, true);
        std::vector<uint16_t> nc(num.coeffs());
        nc.push_back(1);
        num = FqPoly(nc);
        std::vector<uint16_t> dc(den.coeffs());
        dc.push_back(1);
        den = FqPoly(dc);
        RatFun a = Q.make(num, den);
        auto la = Q.to_laurent(a, -20);
        auto inv = L.invert_monic_lead(la, -10);
        auto true_inv = Q.to_laurent(Q.inv(a), -20);
        for (int e = inv.top(); e >= inv.floor; --e)
            CHECK(L.coeff_or_zero(inv, e) == L.coeff_or_zero(true_inv, e));
    }
}

TEST_CASE("zero inversion and vacuous comparison raise") {
    FqField F = FqField::prime(2);
    LaurentOps<FqField> L(F);
    CHECK_THROWS_AS(L.invert_monic_lead(L.zero(), -3), InvertZero);
    Laurent<FqField> a, b;
    a.exact = false;
    a.floor = -2;
    b.exact = false;
    b.floor = -5;
    CHECK_THROWS_AS(L.equal_on_overlap(a, b), PrecisionExhausted);
}
