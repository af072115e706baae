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

#include "dlv/fq_poly.hpp"
#include "dlv/rings.hpp"

using namespace dlv;

TEST_CASE("berkowitz det matches cofactor oracle over F_q") {
    std::mt19937_64 rng(31);
    for (uint32_t q : {2u, 3u, 5u}) {
        FqField F = FqField::prime(q);
        for (size_t n = 0; n <= 4; ++n) {
            for (int it = 0; it < 30; ++it) {
                RMatrix<FqField> A(F, n, n);
                for (auto& v : A.a) v = FqField::Elem(rng() % q);
                CHECK(berkowitz_det(F, A) == cofactor_det(F, A));
            }
        }
    }
}

TEST_CASE("berkowitz det matches cofactor oracle over F_q[t] (a ring, not a field)") {
    std::mt19937_64 rng(32);
    FqField F = FqField::prime(2);
    PolyRing A(F);
    for (size_t n = 1; n <= 4; ++n) {
        for (int it = 0; it < 15; ++it) {
            RMatrix<PolyRing> M(A, n, n);
            for (auto& v : M.a) {
                int d = int(rng() % 3);
                std::vector<uint16_t> c(size_t(d) + 1);
                for (auto& x : c) x = uint16_t(rng() % 2);
                v = FqPoly(std::move(c));
            }
            CHECK(berkowitz_det(A, M) == cofactor_det(A, M));
        }
    }
}

TEST_CASE("charpoly of a companion matrix is the polynomial") {
    FqField F = FqField::prime(3);
    PolyRing A(F);
    // companion of p = t^3 + 2t + 1 over F_3
    FqPoly p({1, 2, 0, 1});
    RMatrix<FqField> C(F, 3, 3);
    C(1, 0) = 1;
    C(2, 1) = 1;
    for (size_t i = 0; i < 3; ++i) C(i, 2) = F.neg(p.coeff(i));
    auto cp = berkowitz_charpoly(F, C);
    // coefficients leading-first: 1, 0, 2, 1
    REQUIRE(cp.size() == 4);
    CHECK(cp[0] == 1);
    CHECK(cp[1] == 0);
    CHECK(cp[2] == 2);
    CHECK(cp[3] == 1);
}

TEST_CASE("truncated series ring inverse") {
    FqField F = FqField::prime(3);
    TruncRing<FqField> T(F, 5);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 50; ++it) {
        auto x = T.make();
        x.c[0] = F.one();
        for (size_t k = 1; k < 5; ++k) x.c[k] = FqField::Elem(rng() % 3);
        auto y = T.inv_unit_one(x);
        CHECK(T.equal(T.mul(x, y), T.one()));
    }
}

TEST_CASE("generic polynomial ring over F_q matches FqPoly arithmetic") {
    FqField F = FqField::prime(5);
    PolyRing A(F);
    PolyRingOf<FqField> P(F);
    std::mt19937_64 rng(6);
    for (int it = 0; it < 40; ++it) {
        std::vector<uint16_t> ca(1 + rng() % 5), cb(1 + rng() % 5);
        for (auto& v : ca) v = uint16_t(rng() % 5);
        for (auto& v : cb) v = uint16_t(rng() % 5);
        FqPoly a(ca), b(cb);
        PolyRingOf<FqField>::Elem ga{std::vector<FqField::Elem>(ca)}, gb{std::vector<FqField::Elem>(cb)};
        ga = P.trim(ga);
        gb = P.trim(gb);
        auto prod = P.mul(ga, gb);
        FqPoly prod2 = A.mul(a, b);
        CHECK(prod.c.size() == size_t(prod2.degree() + 1 > 0 ? prod2.degree() + 1 : 0));
        for (size_t k = 0; k < prod.c.size(); ++k) CHECK(prod.c[k] == prod2.coeff(k));
    }
}
