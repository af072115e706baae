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

#include "dlv/fq.hpp"
#include "dlv/fq_matrix.hpp"

using namespace dlv;

namespace {

void check_field_axioms(const FqField& F, uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int it = 0; it < 200; ++it) {
        auto a = FqField::Elem(rng() % F.q());
        auto b = FqField::Elem(rng() % F.q());
        auto c = FqField::Elem(rng() % F.q());
        CHECK(F.add(a, b) == F.add(b, a));
        CHECK(F.mul(a, b) == F.mul(b, a));
        CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
        CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
        CHECK(F.add(a, F.neg(a)) == 0);
        if (a != 0) CHECK(F.mul(a, F.inv(a)) == F.one());
        CHECK(F.pow(a, F.q()) == a);  // x^q = x
    }
}

}  // namespace

TEST_CASE("prime fields") {
    for (uint32_t ell : {2u, 3u, 5u, 13u}) {
        FqField F = FqField::prime(ell);
        CHECK(F.q() == ell);
        check_field_axioms(F, ell);
        // multiplicative group order q-1
        CHECK(F.pow(F.generator(), ell - 1) == 1);
        for (uint32_t k = 1; k + 1 < ell; ++k) CHECK(F.pow(F.generator(), k) != 1);
    }
}

TEST_CASE("extension fields via tables and Zech logs") {
    // F_4 with x^2+x+1
    FqField F4(2, 2, {1, 1, 1});
    CHECK(F4.q() == 4);
    check_field_axioms(F4, 11);
    // the nontrivial cube roots of unity
    auto x = F4.from_coords({0, 1});
    CHECK(F4.mul(F4.mul(x, x), x) == F4.one());

    FqField F9 = FqField::make(3, 2);
    CHECK(F9.q() == 9);
    check_field_axioms(F9, 13);

    // q = 729 > 256 exercises the Zech branch
    FqField F729 = FqField::make(3, 6);
    CHECK(F729.q() == 729);
    check_field_axioms(F729, 17);
}

TEST_CASE("invalid moduli rejected") {
    CHECK_THROWS_AS(FqField(2, 2, {0, 0, 1}), ConfigError);   // x^2 reducible
    CHECK_THROWS_AS(FqField(2, 2, {1, 0, 1}), ConfigError);   // (x+1)^2
    CHECK_THROWS_AS(FqField(4, 1, {0, 1}), ConfigError);      // 4 not prime
}

TEST_CASE("matrix rank, inverse, solve, nullspace") {
    std::mt19937_64 rng(5);
    for (uint32_t ell : {2u, 3u}) {
        FqField F = FqField::prime(ell);
        for (int it = 0; it < 25; ++it) {
            size_t n = 1 + rng() % 6, m = 1 + rng() % 6;
            FqMatrix A(F, n, m);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < m; ++j) A(i, j) = FqField::Elem(rng() % ell);
            // rank + nullity = m
            FqMatrix N = A.nullspace();
            CHECK(A.rank() + N.cols() == m);
            // A * nullspace = 0
            if (N.cols()) CHECK((A * N).is_zero());
            // solve consistency
            FqVec x(m);
            for (auto& v : x) v = FqField::Elem(rng() % ell);
            FqVec b = A.apply(x);
            auto sol = A.solve(b);
            REQUIRE(sol.has_value());
            CHECK(A.apply(*sol) == b);
        }
        // inverse roundtrip on random invertible matrices
        for (int it = 0; it < 10; ++it) {
            size_t n = 1 + rng() % 5;
            FqMatrix A(F, n, n);
            do {
                for (size_t i = 0; i < n; ++i)
                    for (size_t j = 0; j < n; ++j) A(i, j) = FqField::Elem(rng() % ell);
            } while (A.rank() != n);
            auto inv = A.inverse();
            REQUIRE(inv.has_value());
            CHECK((A * *inv) == FqMatrix::identity(F, n));
            CHECK(A.det() != 0);
        }
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 rng(9);
    FqField F = FqField::prime(5);
    for (int it = 0; it < 20; ++it) {
        size_t n = 1 + rng() % 5;
        FqMatrix A(F, n, n), B(F, n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                A(i, j) = FqField::Elem(rng() % 5);
                B(i, j) = FqField::Elem(rng() % 5);
            }
        CHECK(F.mul(A.det(), B.det()) == (A * B).det());
    }
}
